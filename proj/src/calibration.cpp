#include "soamzi/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pipeline.hpp"
#include "soamzi/errors.hpp"
#include "soamzi/metrics.hpp"
#include "soamzi/signalgen.hpp"
#include "soamzi/units.hpp"
#include "soamzi/util.hpp"

namespace soamzi {

StaticCurve static_characterization(const SOAParams& soa_up, const SOAParams& soa_low,
                                    double bias_phase, double probe_power,
                                    const std::vector<double>& p_a_grid_dbm) {
  const std::size_t n = p_a_grid_dbm.size();
  if (n < 15)
    throw std::invalid_argument("static characterization needs >= 15 grid points");
  for (std::size_t i = 1; i < n; ++i)
    if (!(p_a_grid_dbm[i] > p_a_grid_dbm[i - 1]))
      throw std::invalid_argument("static characterization grid must be sorted");

  std::vector<double> p_j_mw(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double p_a_w = dbm_to_watt(p_a_grid_dbm[i]);
    p_j_mw[i] =
        static_port_powers(soa_up, soa_low, bias_phase, probe_power, p_a_w).second *
        1e3;
  }
  return finish_static_curve(p_a_grid_dbm, std::move(p_j_mw));
}

StaticCurve finish_static_curve(std::vector<double> p_a_dbm, std::vector<double> p_j_mw) {
  const std::size_t n = p_a_dbm.size();
  if (n != p_j_mw.size() || n < 15)
    throw std::invalid_argument("static curve needs >= 15 matching samples");

  std::vector<double> p_a_w(n), p_j_w(n);
  for (std::size_t i = 0; i < n; ++i) {
    p_a_w[i] = dbm_to_watt(p_a_dbm[i]);
    p_j_w[i] = p_j_mw[i] * 1e-3;
  }

  // dP_J/dP_A on linear powers, central differences (one-sided at the ends)
  std::vector<double> d(n);
  d[0] = (p_j_w[1] - p_j_w[0]) / (p_a_w[1] - p_a_w[0]);
  for (std::size_t i = 1; i + 1 < n; ++i)
    d[i] = (p_j_w[i + 1] - p_j_w[i - 1]) / (p_a_w[i + 1] - p_a_w[i - 1]);
  d[n - 1] = (p_j_w[n - 1] - p_j_w[n - 2]) / (p_a_w[n - 1] - p_a_w[n - 2]);

  StaticCurve c;
  c.p_a_dbm = std::move(p_a_dbm);
  c.p_j_mw = std::move(p_j_mw);
  c.derivative = smooth_ma7(d);
  return c;
}

std::vector<double> smooth_ma7(const std::vector<double>& y) {
  const std::size_t n = y.size();
  if (n < 7) throw std::invalid_argument("smooth_ma7 needs >= 7 points");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = std::min<std::size_t>({3, i, n - 1 - i});
    double acc = 0.0;
    for (std::size_t k = i - r; k <= i + r; ++k) acc += y[k];
    out[i] = acc / static_cast<double>(2 * r + 1);
  }
  return out;
}

QuasiLinearRegion quasi_linear_region(const StaticCurve& c, double tolerance) {
  const std::size_t n = c.derivative.size();
  if (n == 0 || n != c.p_a_dbm.size())
    throw std::invalid_argument("static curve has no derivative");

  // The port-J response falls with pump power, so the derivative is
  // negative; the flatness and bounded-away-from-zero criteria act on its
  // magnitude.
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = std::abs(c.derivative[i]);
  const double d_max = *std::max_element(d.begin(), d.end());

  std::size_t best_i = 0, best_j = 0;
  double best_mean = -1.0;
  bool found = false;
  for (std::size_t i = 0; i < n; ++i) {
    double mx = d[i], mn = d[i], sum = d[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      mx = std::max(mx, d[j]);
      mn = std::min(mn, d[j]);
      sum += d[j];
      const double mean = sum / static_cast<double>(j - i + 1);
      if (!(mean > 0.1 * d_max)) continue;
      if ((mx - mn) / mean > tolerance) continue;
      const std::size_t len = j - i + 1;
      const std::size_t best_len = found ? best_j - best_i + 1 : 0;
      if (len > best_len || (len == best_len && mean > best_mean)) {
        best_i = i;
        best_j = j;
        best_mean = mean;
        found = true;
      }
    }
  }
  if (!found)
    throw std::runtime_error(
        "no quasi-linear region found: derivative never stays within the "
        "tolerance band; widen the power grid or loosen the tolerance");

  QuasiLinearRegion r;
  r.lo_dbm = c.p_a_dbm[best_i];
  r.hi_dbm = c.p_a_dbm[best_j];
  r.center_dbm = 0.5 * (r.lo_dbm + r.hi_dbm);
  return r;
}

Hd2SweepResult hd2_power_sweep(const ScenarioConfig& cfg, double p_e_in_dbm) {
  const std::size_t n = cfg.hd2_p_a_grid_dbm.size();
  if (n == 0) throw std::invalid_argument("hd2 sweep grid is empty");

  // Holding the detected f_if input tone constant at p_e_in_dbm while the
  // mean power moves means re-solving the depth: tone current R*m*P0 fixed,
  // so m = I_target / (R * P0).
  const double i_target =
      std::sqrt(2.0 * dbm_to_watt(p_e_in_dbm) / cfg.pd.load_ohm);

  Hd2SweepResult result;
  result.curve.resize(n);
  parallel_for(n, 0, [&](std::size_t k) {
    Hd2SweepPoint pt;
    pt.p_a_dbm = cfg.hd2_p_a_grid_dbm[k];
    const double p0 = dbm_to_watt(pt.p_a_dbm);
    pt.m = i_target / (cfg.pd.responsivity * p0);
    if (pt.m > 1.0) {
      pt.feasible = false;
      result.curve[k] = pt;
      return;
    }
    ScenarioConfig point_cfg = cfg;
    point_cfg.modulation_port_a_dbm = pt.p_a_dbm;
    const ArchitectureConfig arch = point_cfg.make_arch_config(Architecture::Modulation);
    const PipelineResult run = run_pipeline(point_cfg, arch, pt.m);
    pt.hd2_db = hd2_db(run.spectrum, cfg.f_rep, cfg.f_if);
    result.curve[k] = pt;
  });

  bool any = false;
  double best_hd2 = 0.0;
  for (const auto& pt : result.curve) {
    if (!pt.feasible) continue;
    if (!any || pt.hd2_db < best_hd2) {
      best_hd2 = pt.hd2_db;
      result.best_p_a_dbm = pt.p_a_dbm;
    }
    any = true;
  }
  if (!any)
    throw std::runtime_error(
        "hd2 sweep: every grid point needs modulation depth > 1 to hold the "
        "input tone at " +
        std::to_string(p_e_in_dbm) + " dBm; lower the target");
  return result;
}

OdlTuneResult tune_odl(const ScenarioConfig& cfg) {
  const TimeGrid grid = make_time_grid(cfg.f_rep, cfg.f_if, cfg.n_samples);
  const double t_rep = 1.0 / cfg.f_rep;

  std::vector<double> lines = {10e9, 20e9, 30e9, 40e9};

  OdlTuneResult result;
  result.curve.resize(cfg.odl_delay_steps);
  parallel_for(cfg.odl_delay_steps, 0, [&](std::size_t k) {
    OdlTunePoint pt;
    pt.delay_s = snap_delay(t_rep * static_cast<double>(k) /
                                static_cast<double>(cfg.odl_delay_steps),
                            grid);
    ScenarioConfig point_cfg = cfg;
    point_cfg.odl_delay = pt.delay_s;
    const ArchitectureConfig arch =
        point_cfg.make_arch_config(Architecture::SwitchingDifferential);
    const PipelineResult run = run_pipeline(point_cfg, arch, 0.0);  // CW probe

    double mx = -1e300, mn = 1e300;
    for (double f : lines) {
      const double p = run.spectrum.power_at(f);
      mx = std::max(mx, p);
      mn = std::min(mn, p);
    }
    pt.spread_db = mx - mn;
    pt.line_10ghz_dbm = run.spectrum.power_at(lines.front());

    // spectrum floor estimate: median bin power (dark outputs collapse to it)
    std::vector<double> bins = run.spectrum.power_dbm;
    std::nth_element(bins.begin(), bins.begin() + bins.size() / 2, bins.end());
    const double floor_dbm = bins[bins.size() / 2];
    pt.usable = pt.line_10ghz_dbm > floor_dbm + 30.0;
    result.curve[k] = pt;
  });

  bool any = false;
  double best_spread = 0.0;
  for (const auto& pt : result.curve) {
    if (!pt.usable) continue;
    if (!any || pt.spread_db < best_spread) {
      best_spread = pt.spread_db;
      result.best_delay_s = pt.delay_s;
    }
    any = true;
  }
  if (!any)
    throw std::runtime_error("ODL tuning found no usable delay: every grid point "
                             "leaves the 10 GHz line within 30 dB of the floor");
  return result;
}

double pi_shift_pump_power(const SOAParams& soa, double fwhm, double f_rep,
                           double probe_power, double power_cap) {
  soa.validate();
  if (!(probe_power >= 0.0)) throw std::invalid_argument("probe power must be >= 0");

  // Pulse-period window; n chosen so dt stays well under fwhm/16.
  std::size_t n = 4096;
  while ((1.0 / f_rep) / static_cast<double>(n) > fwhm / 20.0) n *= 2;
  const TimeGrid grid = make_time_grid(f_rep, f_rep, n);

  const double h_ref = steady_state_h(soa, probe_power);

  const auto shift_at = [&](double peak_power) {
    // gaussian_pulse_train normalizes to mean power; convert from peak
    const double mean =
        peak_power * fwhm * std::sqrt(M_PI / (4.0 * M_LN2)) * f_rep;
    std::vector<OpticalEnvelope> in;
    in.push_back(cw(grid, 1557.4, probe_power));
    in.push_back(gaussian_pulse_train(grid, fwhm, mean, 1550.0));
    const auto run = propagate(soa, in, 200);
    return 0.5 * soa.alpha * (h_ref - run.trace.min());
  };

  if (soa.alpha == 0.0)
    throw std::runtime_error("pi shift unreachable: alpha = 0 gives no cross-phase "
                             "modulation");
  const double max_shift = shift_at(power_cap);
  if (max_shift < M_PI)
    throw std::runtime_error("pi shift unreachable below the " +
                             std::to_string(power_cap * 1e3) +
                             " mW peak-power cap: max achievable shift = " +
                             std::to_string(max_shift) + " rad");

  double lo = 0.0, hi = power_cap;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double s = shift_at(mid);
    if (std::abs(s - M_PI) <= 1e-3) return mid;
    if (s < M_PI)
      lo = mid;
    else
      hi = mid;
  }
  throw ConvergenceError("pi-shift bisection did not reach the 1e-3 rad tolerance");
}

void write_static_curve_csv(const StaticCurve& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "p_a_dbm,p_j_mw,derivative\n";
  char line[128];
  for (std::size_t i = 0; i < c.p_a_dbm.size(); ++i) {
    std::snprintf(line, sizeof(line), "%.4f,%.8g,%.8g\n", c.p_a_dbm[i], c.p_j_mw[i],
                  c.derivative[i]);
    out << line;
  }
}

void write_hd2_sweep_csv(const Hd2SweepResult& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "p_a_dbm,m,hd2_db,feasible\n";
  char line[128];
  for (const auto& pt : r.curve) {
    std::snprintf(line, sizeof(line), "%.4f,%.6f,%.4f,%d\n", pt.p_a_dbm, pt.m,
                  pt.feasible ? pt.hd2_db : std::nan(""), pt.feasible ? 1 : 0);
    out << line;
  }
}

void write_odl_tune_csv(const OdlTuneResult& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "delay_s,spread_db,line_10ghz_dbm,usable\n";
  char line[128];
  for (const auto& pt : r.curve) {
    std::snprintf(line, sizeof(line), "%.8g,%.4f,%.4f,%d\n", pt.delay_s, pt.spread_db,
                  pt.line_10ghz_dbm, pt.usable ? 1 : 0);
    out << line;
  }
}

}  // namespace soamzi
