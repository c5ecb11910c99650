#pragma once

#include <string>
#include <vector>

#include "soamzi/detection.hpp"
#include "soamzi/mzi.hpp"
#include "soamzi/soa.hpp"

namespace soamzi {

/// Full run description. The defaults below reproduce the paper-analogue
/// desk-scale scenario; an empty JSON config ({"schema_version": 1}) runs it
/// unchanged. Fully deterministic (no seeds anywhere).
struct ScenarioConfig {
  int schema_version = 1;

  std::vector<Architecture> architectures = {Architecture::SwitchingStandard,
                                             Architecture::SwitchingDifferential,
                                             Architecture::Modulation};
  std::vector<double> mi_grid = {0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};

  // Time grid
  double f_rep = 10e9;          // pulse repetition rate, Hz
  double f_if = 1e9;            // data tone, Hz
  std::size_t n_samples = 32768;

  // Sources
  double pulse_fwhm = 1.3e-12;        // s
  double pump_wavelength_nm = 1550.0; // pulse-train channel
  double data_wavelength_nm = 1557.4; // CW/data channel

  // Port mean powers, dBm
  double switching_port_a_dbm = -10.5;  // pulse train (quasi-linear center)
  double switching_port_c_dbm = -10.5;  // modulated data at port C (free parameter)
  double switching_port_d_dbm = -10.7;  // differential lower-arm pulse train
  double modulation_port_a_dbm = -15.0; // modulated data at port A (hd2-sweep minimum)
  double modulation_port_c_dbm = -15.0; // pulse train at port C

  // Devices
  SOAParams soa_upper{};
  SOAParams soa_lower{};
  double odl_delay = 28.125e-12;  // s, SwitchingDifferential lower-arm delay (18/64 of T_rep)

  // Detection. The OBPF center follows the detected channel: the data
  // wavelength for Switching, the pulse wavelength for Modulation.
  double obpf_bandwidth_nm = 0.56;
  double loss_db = 5.6;  // OBPF + switch insertion loss
  PhotodiodeParams pd{};

  // Calibration grids
  std::vector<double> static_p_a_grid_dbm;   // default -25..0 step 0.5
  std::vector<double> hd2_p_a_grid_dbm;      // default -20..-7 step 1
  std::size_t odl_delay_steps = 64;          // delays spanning [0, T_rep)
  double pi_shift_power_cap = 1.0;           // W

  ScenarioConfig();

  void validate() const;

  /// Map an architecture onto its port wiring and filter.
  ArchitectureConfig make_arch_config(Architecture kind) const;
  OBPFParams obpf_for(Architecture kind) const;
};

/// Reads a JSON config file: unknown keys rejected, missing keys take the
/// defaults above. Empty path -> pure defaults.
ScenarioConfig load_config(const std::string& path);
ScenarioConfig parse_config(const std::string& json_text);

/// Serializes the effective config (all fields, defaults filled in).
std::string config_to_json(const ScenarioConfig& cfg);

}  // namespace soamzi
