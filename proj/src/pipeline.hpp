#pragma once

// Internal: the single-cell simulation pipeline shared by the scenario
// driver and the calibration sweeps. Synthesizes the two sources for an
// architecture, calibrates the dark-port bias, runs the mixer and the
// detection chain at port I.

#include "soamzi/config.hpp"
#include "soamzi/detection.hpp"
#include "soamzi/mzi.hpp"

namespace soamzi {

struct PipelineResult {
  RFSpectrum spectrum;   // port I through loss + OBPF + photodiode
  double p_in_dbm = 0.0; // detected data tone at f_if, at the data source
  double bias_phase = 0.0;
  SOATrace trace_upper;
  SOATrace trace_lower;
};

/// Runs one (architecture, modulation depth) cell. `arch` carries the port
/// powers and (for the differential case) the ODL delay; its bias_phase is
/// ignored and recalibrated here.
PipelineResult run_pipeline(const ScenarioConfig& cfg, const ArchitectureConfig& arch,
                            double mi);

/// Snaps a delay to the nearest integer multiple of the grid dt.
double snap_delay(double delay, const TimeGrid& grid);

}  // namespace soamzi
