#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "soamzi/grid.hpp"
#include "soamzi/soa.hpp"

namespace soamzi {

enum class Architecture { SwitchingStandard, SwitchingDifferential, Modulation };

std::string to_string(Architecture arch);
Architecture architecture_from_string(const std::string& name);

enum class Port { A, C, D };

/// Wiring description for one mixer run. odl_delay must be present exactly
/// for SwitchingDifferential and be an integer multiple of the grid dt.
struct ArchitectureConfig {
  Architecture kind = Architecture::SwitchingStandard;
  double bias_phase = 0.0;                 // rad, in [0, 2pi)
  std::optional<double> odl_delay;         // s, SwitchingDifferential only
  std::map<Port, double> port_powers_dbm;  // mean power per input port

  void validate(const TimeGrid& grid) const;
};

struct MixerOutput {
  OpticalEnvelope port_i;  // probe-wavelength field at output I
  OpticalEnvelope port_j;  // probe-wavelength field at output J
  SOATrace trace_upper;
  SOATrace trace_lower;
  // Pump-wavelength content carried to the outputs; rejected downstream by
  // the optical bandpass filter.
  OpticalEnvelope pump_i;
  OpticalEnvelope pump_j;
};

/// Lossless 3-dB coupler: o1 = (e1 + j e2)/sqrt2, o2 = (j e1 + e2)/sqrt2.
/// Inputs must share the grid and carrier wavelength (or one be all-zero).
std::pair<OpticalEnvelope, OpticalEnvelope> coupler_2x2(const OpticalEnvelope& e1,
                                                        const OpticalEnvelope& e2);

/// Exact circular shift; delay must be an integer multiple of dt.
OpticalEnvelope apply_delay(const OpticalEnvelope& e, double delay);

/// Runs one period of the interferometer:
///  - probe (port C) splits 50/50 into the arms through the input coupler;
///  - pump (port A) saturates the upper SOA; in SwitchingDifferential a
///    delayed copy (scaled to the port-D power when configured) saturates
///    the lower SOA;
///  - the bias phase sits on the lower arm before the output coupler;
///  - arm probes recombine into ports I and J.
/// Pump and probe must be on distinct wavelength channels.
MixerOutput run_mixer(const ArchitectureConfig& arch, const OpticalEnvelope& pump,
                      const OpticalEnvelope& probe, const SOAParams& soa_up,
                      const SOAParams& soa_low);

/// Static bias phase that minimizes port-I power with zero pump and a CW
/// probe of the given power, located by golden-section search to 1e-6 rad.
double set_dark_port(const SOAParams& soa_up, const SOAParams& soa_low,
                     double probe_power);

/// Static (fixed-point) port powers for a CW probe and CW pump drive;
/// returns {P_I, P_J} in W. Used by the dark-port search and the static
/// characterization sweep.
std::pair<double, double> static_port_powers(const SOAParams& soa_up,
                                             const SOAParams& soa_low,
                                             double bias_phase, double probe_power,
                                             double pump_up_power,
                                             double pump_low_power = 0.0);

}  // namespace soamzi
