#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "soamzi/calibration.hpp"
#include "soamzi/config.hpp"
#include "soamzi/detection.hpp"
#include "soamzi/mzi.hpp"
#include "soamzi/signalgen.hpp"
#include "soamzi/units.hpp"

using namespace soamzi;

namespace {

std::vector<double> dbm_grid(double start, double stop, double step) {
  std::vector<double> g;
  for (double x = start; x <= stop + 1e-9; x += step) g.push_back(x);
  return g;
}

}  // namespace

TEST_CASE("smooth_ma7 kernel identities") {
  const std::vector<double> constant(12, 3.5);
  CHECK(smooth_ma7(constant) == constant);

  std::vector<double> ramp(15);
  for (std::size_t i = 0; i < ramp.size(); ++i) ramp[i] = 2.0 * i + 1.0;
  const auto smoothed = smooth_ma7(ramp);
  for (std::size_t i = 3; i + 3 < ramp.size(); ++i)
    CHECK(smoothed[i] == doctest::Approx(ramp[i]).epsilon(1e-12));

  // interior impulse spreads to 1/7 over seven points and keeps its mass
  std::vector<double> impulse(15, 0.0);
  impulse[7] = 1.0;
  const auto spread = smooth_ma7(impulse);
  double mass = 0.0;
  for (std::size_t i = 0; i < spread.size(); ++i) {
    if (i >= 4 && i <= 10)
      CHECK(spread[i] == doctest::Approx(1.0 / 7.0).epsilon(1e-12));
    else
      CHECK(spread[i] == 0.0);
    mass += spread[i];
  }
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(smooth_ma7(std::vector<double>(6, 1.0)), std::invalid_argument);
}

TEST_CASE("smooth_ma7 is linear") {
  std::vector<double> a(20), b(20), sum(20);
  for (std::size_t i = 0; i < 20; ++i) {
    a[i] = std::sin(0.3 * i);
    b[i] = 0.1 * i * i;
    sum[i] = a[i] + b[i];
  }
  const auto sa = smooth_ma7(a), sb = smooth_ma7(b), ss = smooth_ma7(sum);
  for (std::size_t i = 0; i < 20; ++i)
    CHECK(ss[i] == doctest::Approx(sa[i] + sb[i]).epsilon(1e-12));
}

TEST_CASE("negligible pump reduces to the zero-pump static response") {
  const ScenarioConfig cfg;
  const double probe = dbm_to_watt(cfg.switching_port_c_dbm);
  const double bias = set_dark_port(cfg.soa_upper, cfg.soa_lower, probe);

  const StaticCurve c = static_characterization(cfg.soa_upper, cfg.soa_lower, bias,
                                                probe, dbm_grid(-70.0, -56.0, 1.0));
  const double p_j_ref =
      static_port_powers(cfg.soa_upper, cfg.soa_lower, bias, probe, 0.0).second * 1e3;
  // a -56 dBm pump still perturbs the arm gain to first order (~1e-5)
  for (double p_j : c.p_j_mw) CHECK(p_j == doctest::Approx(p_j_ref).epsilon(1e-4));
}

TEST_CASE("an exactly linear curve has a constant derivative") {
  const auto p_a = dbm_grid(-25.0, -5.0, 1.0);
  std::vector<double> p_j_mw(p_a.size());
  for (std::size_t i = 0; i < p_a.size(); ++i)
    p_j_mw[i] = 2.0 * dbm_to_watt(p_a[i]) * 1e3;  // slope 2 W/W

  const StaticCurve c = finish_static_curve(p_a, p_j_mw);
  for (double d : c.derivative) CHECK(d == doctest::Approx(2.0).epsilon(1e-9));

  const QuasiLinearRegion r = quasi_linear_region(c);
  CHECK(r.lo_dbm == p_a.front());
  CHECK(r.hi_dbm == p_a.back());
  CHECK(r.center_dbm == doctest::Approx(0.5 * (p_a.front() + p_a.back())));
}

TEST_CASE("static derivative survives a tenfold grid refinement") {
  const ScenarioConfig cfg;
  const double probe = dbm_to_watt(cfg.switching_port_c_dbm);
  const double bias = set_dark_port(cfg.soa_upper, cfg.soa_lower, probe);

  const StaticCurve coarse = static_characterization(
      cfg.soa_upper, cfg.soa_lower, bias, probe, cfg.static_p_a_grid_dbm);
  const StaticCurve dense = static_characterization(
      cfg.soa_upper, cfg.soa_lower, bias, probe, dbm_grid(-25.0, 0.0, 0.05));

  double d_max = 0.0;
  for (double d : dense.derivative) d_max = std::max(d_max, std::abs(d));
  double worst = 0.0;
  for (std::size_t i = 0; i < coarse.p_a_dbm.size(); ++i) {
    const std::size_t j = static_cast<std::size_t>(
        std::round((coarse.p_a_dbm[i] + 25.0) / 0.05));
    worst = std::max(worst,
                     std::abs(coarse.derivative[i] - dense.derivative[j]));
  }
  CHECK(worst < 0.02 * d_max);
}

TEST_CASE("quasi-linear region brackets a known sigmoid inflection") {
  // Logistic transfer in linear power, inflection pinned at -12 dBm. Steep
  // slope and a grid floor at -20 dBm keep the exponential tail (whose
  // dBm-spaced samples also look flat) below the 10%-of-max mean rule.
  const double p0 = dbm_to_watt(-12.0);
  const double s = 0.1 * p0;
  const auto p_a = dbm_grid(-20.0, -4.0, 0.25);
  std::vector<double> p_j_mw(p_a.size());
  for (std::size_t i = 0; i < p_a.size(); ++i) {
    const double x = (dbm_to_watt(p_a[i]) - p0) / s;
    p_j_mw[i] = 1.0 / (1.0 + std::exp(x));  // falls with pump power
  }

  const QuasiLinearRegion r = quasi_linear_region(finish_static_curve(p_a, p_j_mw));
  CHECK(r.lo_dbm < -12.0);
  CHECK(r.hi_dbm > -12.0);
  CHECK(std::abs(r.center_dbm - (-12.0)) < 0.5);
}

TEST_CASE("quasi-linear search re-satisfies its own predicate") {
  const ScenarioConfig cfg;
  const double probe = dbm_to_watt(cfg.switching_port_c_dbm);
  const double bias = set_dark_port(cfg.soa_upper, cfg.soa_lower, probe);
  const StaticCurve c = static_characterization(
      cfg.soa_upper, cfg.soa_lower, bias, probe, cfg.static_p_a_grid_dbm);
  const QuasiLinearRegion r = quasi_linear_region(c);

  double mx = 0.0, mn = 1e300, sum = 0.0, d_max = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < c.p_a_dbm.size(); ++i) {
    d_max = std::max(d_max, std::abs(c.derivative[i]));
    if (c.p_a_dbm[i] < r.lo_dbm - 1e-9 || c.p_a_dbm[i] > r.hi_dbm + 1e-9) continue;
    const double d = std::abs(c.derivative[i]);
    mx = std::max(mx, d);
    mn = std::min(mn, d);
    sum += d;
    ++count;
  }
  const double mean = sum / static_cast<double>(count);
  CHECK((mx - mn) / mean <= 0.20);
  CHECK(mean > 0.1 * d_max);
  CHECK(r.lo_dbm < r.center_dbm);
  CHECK(r.center_dbm < r.hi_dbm);
}

TEST_CASE("a wildly oscillating derivative yields no region") {
  const auto p_a = dbm_grid(-25.0, -5.0, 1.0);
  StaticCurve c;
  c.p_a_dbm = p_a;
  c.p_j_mw.assign(p_a.size(), 1.0);
  c.derivative.resize(p_a.size());
  for (std::size_t i = 0; i < p_a.size(); ++i)
    c.derivative[i] = (i % 2 == 0) ? 1.0 : 2.0;
  CHECK_THROWS_AS(quasi_linear_region(c), std::runtime_error);
}

TEST_CASE("hd2 sweep finds an interior minimum at constant input tone") {
  const ScenarioConfig cfg;
  const Hd2SweepResult r = hd2_power_sweep(cfg);

  // strict interior minimum of the U-shaped curve
  std::size_t best = 0;
  for (std::size_t i = 0; i < r.curve.size(); ++i)
    if (r.curve[i].p_a_dbm == r.best_p_a_dbm) best = i;
  REQUIRE(best > 0);
  REQUIRE(best + 1 < r.curve.size());
  CHECK(r.curve[best - 1].hd2_db > r.curve[best].hd2_db);
  CHECK(r.curve[best + 1].hd2_db > r.curve[best].hd2_db);

  // the re-solved depth holds the detected input tone fixed across the grid
  const TimeGrid g = make_time_grid(cfg.f_rep, cfg.f_if, cfg.n_samples);
  for (std::size_t i = 0; i < r.curve.size(); i += 6) {
    const auto& pt = r.curve[i];
    REQUIRE(pt.feasible);
    const double tone = electrical_input_power(
        mzm_modulated_cw(g, cfg.data_wavelength_nm, dbm_to_watt(pt.p_a_dbm), pt.m,
                         cfg.f_if),
        cfg.pd, cfg.f_if);
    CHECK(std::abs(tone - (-60.0)) < 0.01);
  }
}

TEST_CASE("hd2 sweep degenerate and infeasible grids") {
  ScenarioConfig cfg;
  cfg.hd2_p_a_grid_dbm = {-14.0};
  const Hd2SweepResult single = hd2_power_sweep(cfg);
  CHECK(single.best_p_a_dbm == -14.0);
  CHECK(single.curve.size() == 1);

  // a loud target makes every point need m > 1
  ScenarioConfig loud;
  CHECK_THROWS_AS(hd2_power_sweep(loud, -10.0), std::runtime_error);

  // a borderline target splits the grid into infeasible and feasible halves
  ScenarioConfig mixed;
  const Hd2SweepResult r = hd2_power_sweep(mixed, -45.0);
  bool any_infeasible = false, any_feasible = false;
  for (const auto& pt : r.curve) {
    if (pt.feasible)
      any_feasible = true;
    else
      any_infeasible = true;
    if (!pt.feasible) CHECK(pt.m > 1.0);
  }
  CHECK(any_infeasible);
  CHECK(any_feasible);
}

TEST_CASE("odl tuning picks the flattest usable comb") {
  ScenarioConfig cfg;
  cfg.odl_delay_steps = 16;
  cfg.switching_port_d_dbm = cfg.switching_port_a_dbm;  // exact symmetry at zero
  const OdlTuneResult r = tune_odl(cfg);

  CHECK(r.curve.size() == 16);
  CHECK_FALSE(r.curve.front().usable);  // zero delay cancels the comb

  double best_spread = 1e300;
  double argmin = -1.0;
  for (const auto& pt : r.curve) {
    if (!pt.usable) continue;
    if (pt.spread_db < best_spread) {
      best_spread = pt.spread_db;
      argmin = pt.delay_s;
    }
  }
  CHECK(r.best_delay_s == argmin);

  // flatness at the winner beats the half-period-offset delay by >= 1 dB
  const double t_rep = 1.0 / cfg.f_rep;
  const double target = std::fmod(r.best_delay_s + 0.5 * t_rep, t_rep);
  double offset_spread = -1.0, nearest = 1e300;
  for (const auto& pt : r.curve) {
    double d = std::abs(pt.delay_s - target);
    d = std::min(d, t_rep - d);
    if (d < nearest) {
      nearest = d;
      offset_spread = pt.spread_db;
    }
  }
  CHECK(best_spread + 1.0 <= offset_spread);
}

TEST_CASE("pi-shift power search and its forward check") {
  const SOAParams soa{std::log(500.0), 25e-12, 0.5e-12, 5.0};
  const double fwhm = 1.3e-12;
  const double probe = 0.5 * dbm_to_watt(-10.5);

  const double peak = pi_shift_pump_power(soa, fwhm, 10e9, probe, 1.0);
  CHECK(peak > 0.0);
  CHECK(peak < 1.0);

  // forward run on an independent grid: achieved shift within pi +- 2e-3
  const TimeGrid g = make_time_grid(10e9, 10e9, 8192);
  const double mean = peak * fwhm * std::sqrt(M_PI / (4.0 * M_LN2)) * 10e9;
  const double h_ref = steady_state_h(soa, probe);
  const auto run =
      propagate(soa, {cw(g, 1557.4, probe),
                      gaussian_pulse_train(g, fwhm, mean, 1550.0)}, 200);
  const double shift = 0.5 * soa.alpha * (h_ref - run.trace.min());
  CHECK(std::abs(shift - M_PI) < 2e-3);

  // stronger phase coupling needs less power
  SOAParams strong = soa;
  strong.alpha = 10.0;
  CHECK(pi_shift_pump_power(strong, fwhm, 10e9, probe, 1.0) < peak);

  SOAParams no_xpm = soa;
  no_xpm.alpha = 0.0;
  CHECK_THROWS_AS(pi_shift_pump_power(no_xpm, fwhm, 10e9, probe, 1.0),
                  std::runtime_error);
  CHECK_THROWS_AS(pi_shift_pump_power(soa, fwhm, 10e9, probe, 1e-7),
                  std::runtime_error);
}

TEST_CASE("calibration csv headers") {
  const auto p_a = dbm_grid(-25.0, -5.0, 1.0);
  std::vector<double> p_j(p_a.size(), 1.0);
  write_static_curve_csv(finish_static_curve(p_a, p_j),
                         "/tmp/soamzi_test_static.csv");
  std::ifstream s("/tmp/soamzi_test_static.csv");
  std::string line;
  std::getline(s, line);
  CHECK(line == "p_a_dbm,p_j_mw,derivative");
  std::remove("/tmp/soamzi_test_static.csv");

  Hd2SweepResult sweep;
  sweep.curve.resize(1);
  write_hd2_sweep_csv(sweep, "/tmp/soamzi_test_hd2.csv");
  std::ifstream h("/tmp/soamzi_test_hd2.csv");
  std::getline(h, line);
  CHECK(line == "p_a_dbm,m,hd2_db,feasible");
  std::remove("/tmp/soamzi_test_hd2.csv");

  OdlTuneResult tune;
  tune.curve.resize(1);
  write_odl_tune_csv(tune, "/tmp/soamzi_test_odl.csv");
  std::ifstream o("/tmp/soamzi_test_odl.csv");
  std::getline(o, line);
  CHECK(line == "delay_s,spread_db,line_10ghz_dbm,usable");
  std::remove("/tmp/soamzi_test_odl.csv");
}
