#include "soamzi/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "pipeline.hpp"
#include "soamzi/errors.hpp"
#include "soamzi/signalgen.hpp"
#include "soamzi/units.hpp"
#include "soamzi/util.hpp"

namespace soamzi {

std::vector<CellResult> run_cells(const ScenarioConfig& cfg, unsigned workers) {
  cfg.validate();

  std::vector<double> mi_grid = cfg.mi_grid;
  std::sort(mi_grid.begin(), mi_grid.end());

  struct Cell {
    Architecture kind;
    double mi;
  };
  std::vector<Cell> cells;
  for (Architecture kind : cfg.architectures)
    for (double mi : mi_grid) cells.push_back({kind, mi});

  std::vector<CellResult> results(cells.size());
  parallel_for(cells.size(), workers, [&](std::size_t i) {
    const Cell& cell = cells[i];
    CellResult& out = results[i];
    out.report.arch = to_string(cell.kind);
    out.report.mi = cell.mi;
    try {
      const ArchitectureConfig arch = cfg.make_arch_config(cell.kind);
      const PipelineResult run = run_pipeline(cfg, arch, cell.mi);
      if (run.p_in_dbm <= kFloorDbm)
        throw std::runtime_error("no input tone at f_if (mi = 0): conversion gain "
                                 "undefined");
      out.report.p_in_dbm = run.p_in_dbm;
      out.report.p_out_dbm = run.spectrum.power_at(cfg.f_rep - cfg.f_if);
      out.report.gc_db =
          conversion_gain_db(run.spectrum, run.p_in_dbm, cfg.f_rep, cfg.f_if);
      out.report.hd2_db = hd2_db(run.spectrum, cfg.f_rep, cfg.f_if);
      out.report.hd3_db = hd3_db(run.spectrum, cfg.f_rep, cfg.f_if);
      out.report.thd_db = thd_db(run.spectrum, cfg.f_rep, cfg.f_if);
      out.spectrum = run.spectrum;
    } catch (const std::exception& e) {
      out.report.feasible = false;
      out.report.note = e.what();
    }
  });
  return results;
}

std::vector<MixerReport> run_scenario(const ScenarioConfig& cfg, unsigned workers) {
  std::vector<MixerReport> reports;
  for (auto& cell : run_cells(cfg, workers)) reports.push_back(cell.report);
  return reports;
}

ComparisonSummary summarize(const std::vector<MixerReport>& reports) {
  ComparisonSummary s;

  const auto find_row = [&](const std::string& arch, double mi) -> const MixerReport* {
    for (const auto& r : reports)
      if (r.arch == arch && std::abs(r.mi - mi) < 1e-12 && r.feasible) return &r;
    return nullptr;
  };

  std::vector<double> mi_values;
  for (const auto& r : reports)
    if (std::find(mi_values.begin(), mi_values.end(), r.mi) == mi_values.end())
      mi_values.push_back(r.mi);
  std::sort(mi_values.begin(), mi_values.end());

  const std::string sw = to_string(Architecture::SwitchingStandard);
  const std::string mod = to_string(Architecture::Modulation);

  bool any_pair = false;
  bool sw_above = true;
  for (double mi : mi_values) {
    const MixerReport* a = find_row(sw, mi);
    const MixerReport* b = find_row(mod, mi);
    if (!a || !b) continue;
    any_pair = true;
    s.mi.push_back(mi);
    s.gain_gap_db.push_back(a->gc_db - b->gc_db);
    s.thd_gap_db.push_back(a->thd_db - b->thd_db);
    if (a->gc_db <= b->gc_db) sw_above = false;
  }
  s.switching_gain_above_modulation = any_pair && sw_above;

  const auto trend_increasing = [&](const std::string& arch, bool use_thd) {
    double first = 0.0, last = 0.0;
    bool have_first = false, have_last = false;
    for (double mi : mi_values) {
      const MixerReport* r = find_row(arch, mi);
      if (!r) continue;
      const double v = use_thd ? r->thd_db : r->gc_db;
      if (!have_first) {
        first = v;
        have_first = true;
      }
      last = v;
      have_last = true;
    }
    return have_first && have_last && last > first;
  };
  s.switching_gain_increases_with_mi = trend_increasing(sw, false);
  s.thd_increases_with_mi = trend_increasing(sw, true);
  return s;
}

RFSpectrum ideal_sampler_oracle(double fwhm, double f_rep, double f_if, double m,
                                double mean_power, const PhotodiodeParams& pd,
                                const TimeGrid& grid) {
  if (m < 0.0 || m > 1.0) throw std::invalid_argument("m outside [0, 1]");

  const std::size_t n_bins = grid.n_samples / 2 + 1;
  std::vector<double> amp(n_bins, 0.0);  // cosine tone amplitude per bin, A

  const double df = grid.bin_spacing();
  const auto bin_of = [&](double f) -> std::size_t {
    return static_cast<std::size_t>(std::llround(f / df));
  };
  const auto add = [&](double f, double a) {
    if (f < 0.0) return;
    const std::size_t k = bin_of(f);
    if (k < n_bins) amp[k] += a;
  };

  const int n_max = static_cast<int>(
      std::floor((static_cast<double>(n_bins) * df + f_if) / f_rep)) + 1;
  for (int n = 0; n <= n_max; ++n) {
    const double c_n = pulse_train_comb_coefficient(mean_power, f_rep, fwhm, n);
    const double f_n = static_cast<double>(n) * f_rep;
    // comb line (DC for n = 0)
    add(f_n, (n == 0 ? 1.0 : 2.0) * pd.responsivity * c_n);
    // modulation sidebands; for n = 0 the lower one is the f_if line itself
    add(f_n + f_if, pd.responsivity * m * c_n);
    if (n > 0)
      add(f_n - f_if, pd.responsivity * m * c_n);
  }

  RFSpectrum s;
  s.bin_hz = df;
  s.load_ohm = pd.load_ohm;
  s.power_dbm.resize(n_bins);
  for (std::size_t k = 0; k < n_bins; ++k) {
    const bool single = (k == 0 || k == n_bins - 1);
    const double p = amp[k] * amp[k] * pd.load_ohm * (single ? 1.0 : 0.5);
    s.power_dbm[k] = watt_to_dbm(p);
  }
  return s;
}

RFSpectrum linearized_mode_run(const ScenarioConfig& cfg, double m) {
  cfg.validate();
  const TimeGrid grid = make_time_grid(cfg.f_rep, cfg.f_if, cfg.n_samples);
  const double mean_power = dbm_to_watt(cfg.switching_port_c_dbm);

  const OpticalEnvelope data =
      mzm_modulated_cw(grid, cfg.data_wavelength_nm, mean_power, m, cfg.f_if);
  const OpticalEnvelope pulses =
      gaussian_pulse_train(grid, cfg.pulse_fwhm, 1.0e-3, cfg.pump_wavelength_nm);
  const double pulse_mean = pulses.mean_power();

  // ideal sampler: data power times the unit-mean pulse transmission
  OpticalEnvelope product = zero_envelope(grid, cfg.data_wavelength_nm);
  for (std::size_t i = 0; i < grid.n_samples; ++i) {
    const double p = data.power_at(i) * pulses.power_at(i) / pulse_mean;
    product.samples[i] = std::sqrt(p);
  }

  const RFSpectrum run = rf_spectrum(photodetect(product, cfg.pd), cfg.pd.load_ohm);
  const RFSpectrum oracle = ideal_sampler_oracle(cfg.pulse_fwhm, cfg.f_rep, cfg.f_if,
                                                 m, mean_power, cfg.pd, grid);

  double worst = 0.0;
  std::size_t worst_bin = 0;
  for (std::size_t k = 0; k < run.power_dbm.size(); ++k) {
    if (run.power_dbm[k] <= -120.0 && oracle.power_dbm[k] <= -120.0) continue;
    const double diff = std::abs(run.power_dbm[k] - oracle.power_dbm[k]);
    if (diff > worst) {
      worst = diff;
      worst_bin = k;
    }
  }
  if (worst > 0.1) {
    char msg[160];
    std::snprintf(msg, sizeof(msg),
                  "linearized run deviates from the closed form by %.4f dB at "
                  "%.6g GHz (run %.4f dBm, oracle %.4f dBm)",
                  worst, static_cast<double>(worst_bin) * run.bin_hz / 1e9,
                  run.power_dbm[worst_bin], oracle.power_dbm[worst_bin]);
    throw OracleGateError(msg);
  }
  return run;
}

double oracle_gate(const ScenarioConfig& cfg) {
  const TimeGrid grid = make_time_grid(cfg.f_rep, cfg.f_if, cfg.n_samples);
  const double mean_power = dbm_to_watt(cfg.switching_port_c_dbm);
  const double m = 0.8;

  const RFSpectrum run = linearized_mode_run(cfg, m);
  const RFSpectrum oracle = ideal_sampler_oracle(cfg.pulse_fwhm, cfg.f_rep, cfg.f_if,
                                                 m, mean_power, cfg.pd, grid);
  double worst = 0.0;
  for (std::size_t k = 0; k < run.power_dbm.size(); ++k) {
    if (run.power_dbm[k] <= -120.0 && oracle.power_dbm[k] <= -120.0) continue;
    worst = std::max(worst, std::abs(run.power_dbm[k] - oracle.power_dbm[k]));
  }
  return worst;
}

}  // namespace soamzi
