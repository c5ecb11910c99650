#include "pipeline.hpp"

#include <cmath>
#include <utility>

#include "soamzi/signalgen.hpp"
#include "soamzi/units.hpp"

namespace soamzi {

double snap_delay(double delay, const TimeGrid& grid) {
  return std::round(delay / grid.dt) * grid.dt;
}

PipelineResult run_pipeline(const ScenarioConfig& cfg, const ArchitectureConfig& arch,
                            double mi) {
  const TimeGrid grid = make_time_grid(cfg.f_rep, cfg.f_if, cfg.n_samples);

  const double p_a = dbm_to_watt(arch.port_powers_dbm.at(Port::A));
  const double p_c = dbm_to_watt(arch.port_powers_dbm.at(Port::C));

  // Switching gates the data (port C) with the pulse train (port A);
  // Modulation reverses the roles: the data sinusoid saturates the SOA and
  // the pulse train rides through port C.
  OpticalEnvelope pump, probe, data_source;
  if (arch.kind == Architecture::Modulation) {
    pump = mzm_modulated_cw(grid, cfg.data_wavelength_nm, p_a, mi, cfg.f_if);
    probe = gaussian_pulse_train(grid, cfg.pulse_fwhm, p_c, cfg.pump_wavelength_nm);
    data_source = pump;
  } else {
    pump = gaussian_pulse_train(grid, cfg.pulse_fwhm, p_a, cfg.pump_wavelength_nm);
    probe = mzm_modulated_cw(grid, cfg.data_wavelength_nm, p_c, mi, cfg.f_if);
    data_source = probe;
  }

  ArchitectureConfig wired = arch;
  if (wired.odl_delay) wired.odl_delay = snap_delay(*wired.odl_delay, grid);
  wired.bias_phase = set_dark_port(cfg.soa_upper, cfg.soa_lower, probe.mean_power());

  MixerOutput mixed = run_mixer(wired, pump, probe, cfg.soa_upper, cfg.soa_lower);

  // Detection at port I: lumped loss, channel-select OBPF on both wavelength
  // contents (the off-channel one lands at zero), ideal photodiode.
  const OBPFParams filter = cfg.obpf_for(arch.kind);
  const OpticalEnvelope sel_probe = obpf(apply_loss(mixed.port_i, cfg.loss_db), filter);
  const OpticalEnvelope sel_pump = obpf(apply_loss(mixed.pump_i, cfg.loss_db), filter);

  ElectricalWaveform current = photodetect(sel_probe, cfg.pd);
  const ElectricalWaveform pump_current = photodetect(sel_pump, cfg.pd);
  for (std::size_t i = 0; i < current.samples.size(); ++i)
    current.samples[i] += pump_current.samples[i];

  PipelineResult result;
  result.spectrum = rf_spectrum(current, cfg.pd.load_ohm);
  result.p_in_dbm = electrical_input_power(data_source, cfg.pd, cfg.f_if);
  result.bias_phase = wired.bias_phase;
  result.trace_upper = std::move(mixed.trace_upper);
  result.trace_lower = std::move(mixed.trace_lower);
  return result;
}

}  // namespace soamzi
