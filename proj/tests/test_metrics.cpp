#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "soamzi/detection.hpp"
#include "soamzi/metrics.hpp"
#include "soamzi/signalgen.hpp"
#include "soamzi/units.hpp"

using namespace soamzi;

namespace {

RFSpectrum synthetic_spectrum(double p7_dbm, double p8_dbm, double p9_dbm) {
  RFSpectrum s;
  s.bin_hz = 1e9;
  s.load_ohm = 50.0;
  s.power_dbm.assign(50, kFloorDbm);
  s.power_dbm[7] = p7_dbm;
  s.power_dbm[8] = p8_dbm;
  s.power_dbm[9] = p9_dbm;
  return s;
}

}  // namespace

TEST_CASE("modulation index of a raised cosine equals its depth") {
  const TimeGrid g = make_time_grid(10e9, 1e9, 32768);
  for (double m : {0.0, 0.2, 0.5, 1.0}) {
    const auto w = photodetect(mzm_modulated_cw(g, 1557.4, 1e-3, m, 1e9),
                               PhotodiodeParams{});
    CHECK(modulation_index(w) == doctest::Approx(m).epsilon(1e-9));
  }
  CHECK(modulation_index(std::vector<double>{2.0, 2.0, 2.0}) == 0.0);
  CHECK_THROWS_AS(modulation_index(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(modulation_index(std::vector<double>{-1.0, -1.0}),
                  std::invalid_argument);
}

TEST_CASE("sideband frequencies sit around the repetition rate") {
  const Sideband s = sidebands(10e9, 1e9);
  CHECK(s.lower_1 == 9e9);
  CHECK(s.lower_2 == 8e9);
  CHECK(s.lower_3 == 7e9);
  CHECK(s.upper_1 == 11e9);
  CHECK(s.upper_2 == 12e9);
  CHECK(s.upper_3 == 13e9);
}

TEST_CASE("conversion gain is the tone difference in decibels") {
  const RFSpectrum s = synthetic_spectrum(kFloorDbm, kFloorDbm, -10.0);
  CHECK(conversion_gain_db(s, -30.0, 10e9, 1e9) == doctest::Approx(20.0));
  CHECK(conversion_gain_db(s, -10.0, 10e9, 1e9) == doctest::Approx(0.0));
}

TEST_CASE("harmonic ratios and the thd identity") {
  const RFSpectrum s = synthetic_spectrum(-45.0, -30.0, -20.0);
  CHECK(hd2_db(s, 10e9, 1e9) == doctest::Approx(-10.0).epsilon(1e-12));
  CHECK(hd3_db(s, 10e9, 1e9) == doctest::Approx(-25.0).epsilon(1e-12));

  const double expected =
      10.0 * std::log10(std::pow(10.0, -1.0) + std::pow(10.0, -2.5));
  CHECK(thd_db(s, 10e9, 1e9) == doctest::Approx(expected).epsilon(1e-12));

  // linear-sum identity against the reported ratios
  const double recombined = 10.0 * std::log10(
      std::pow(10.0, hd2_db(s, 10e9, 1e9) / 10.0) +
      std::pow(10.0, hd3_db(s, 10e9, 1e9) / 10.0));
  CHECK(thd_db(s, 10e9, 1e9) == doctest::Approx(recombined).epsilon(1e-12));

  // equal harmonics add 3 dB
  const RFSpectrum eq = synthetic_spectrum(-30.0, -30.0, -20.0);
  CHECK(thd_db(eq, 10e9, 1e9) ==
        doctest::Approx(-10.0 + 3.0102999566).epsilon(1e-9));
}

TEST_CASE("floor-limited harmonics report the floor marker") {
  const RFSpectrum clean = synthetic_spectrum(kFloorDbm, kFloorDbm, -20.0);
  CHECK(thd_db(clean, 10e9, 1e9) == kFloorDbm);
  CHECK(hd2_db(clean, 10e9, 1e9) == kFloorDbm - (-20.0));

  const RFSpectrum dark = synthetic_spectrum(-30.0, -30.0, kFloorDbm);
  CHECK_THROWS_AS(thd_db(dark, 10e9, 1e9), std::invalid_argument);
}

TEST_CASE("soft-clipped modulation reproduces its analytic harmonic ratios") {
  // sampled current i(t) = g(t) * s(1 + 0.6 cos(2 pi f_if t)) with a cubic
  // soft clip s(u) = u - 0.15 u^3; the pulse comb factors out of HD2/HD3.
  const TimeGrid g = make_time_grid(10e9, 1e9, 32768);
  const OpticalEnvelope train = gaussian_pulse_train(g, 1.3e-12, 1e-3, 1550.0);
  const auto s = [](double u) { return u - 0.15 * u * u * u; };

  ElectricalWaveform w;
  w.grid = g;
  w.samples.resize(g.n_samples);
  for (std::size_t i = 0; i < g.n_samples; ++i) {
    const double u = 1.0 + 0.6 * std::cos(2.0 * M_PI * 1e9 * g.time_at(i));
    w.samples[i] = train.power_at(i) * s(u);
  }
  const RFSpectrum spec = rf_spectrum(w, 50.0);

  // harmonic coefficients of s(1 + 0.6 cos t), trapezoid on the unit circle
  const int m = 8192;
  double s1 = 0.0, s2 = 0.0, s3 = 0.0;
  for (int k = 0; k < m; ++k) {
    const double th = 2.0 * M_PI * k / m;
    const double v = s(1.0 + 0.6 * std::cos(th));
    s1 += v * std::cos(th);
    s2 += v * std::cos(2.0 * th);
    s3 += v * std::cos(3.0 * th);
  }
  const double hd2_pred = 20.0 * std::log10(std::abs(s2 / s1));
  const double hd3_pred = 20.0 * std::log10(std::abs(s3 / s1));

  CHECK(hd2_db(spec, 10e9, 1e9) == doctest::Approx(hd2_pred).epsilon(1e-9));
  CHECK(hd3_db(spec, 10e9, 1e9) == doctest::Approx(hd3_pred).epsilon(1e-9));

  // the sidebands mirror around each comb line
  CHECK(hd2_upper_db(spec, 10e9, 1e9) ==
        doctest::Approx(hd2_db(spec, 10e9, 1e9)).epsilon(1e-9));
  CHECK(thd_upper_db(spec, 10e9, 1e9) ==
        doctest::Approx(thd_db(spec, 10e9, 1e9)).epsilon(1e-9));
}

TEST_CASE("ideal multiplication leaves no harmonic distortion") {
  const TimeGrid g = make_time_grid(10e9, 1e9, 32768);
  const OpticalEnvelope train = gaussian_pulse_train(g, 1.3e-12, 1e-3, 1550.0);

  ElectricalWaveform w;
  w.grid = g;
  w.samples.resize(g.n_samples);
  for (std::size_t i = 0; i < g.n_samples; ++i) {
    const double u = 1.0 + 0.6 * std::cos(2.0 * M_PI * 1e9 * g.time_at(i));
    w.samples[i] = train.power_at(i) * u;
  }
  CHECK(hd2_db(rf_spectrum(w, 50.0), 10e9, 1e9) < -200.0);
}

TEST_CASE("reports csv formats feasible and infeasible rows") {
  std::vector<MixerReport> rows(2);
  rows[0].arch = "switching_standard";
  rows[0].mi = 0.2;
  rows[0].p_in_dbm = -50.0;
  rows[0].p_out_dbm = -40.0;
  rows[0].gc_db = 10.0;
  rows[0].hd2_db = -25.0;
  rows[0].hd3_db = -35.0;
  rows[0].thd_db = -24.6;
  rows[1].arch = "modulation";
  rows[1].mi = 0.0;
  rows[1].feasible = false;
  rows[1].note = "no input tone";

  const std::string path = "/tmp/soamzi_test_reports.csv";
  write_reports_csv(rows, path);

  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "arch,mi,p_in_dbm,p_out_dbm,gc_db,hd2_db,hd3_db,thd_db");
  std::getline(in, line);
  CHECK(line == "switching_standard,0.200,-50.0000,-40.0000,10.0000,-25.0000,"
                "-35.0000,-24.6000");
  std::getline(in, line);
  CHECK(line == "modulation,0.000,nan,nan,nan,nan,nan,nan");
  std::remove(path.c_str());
}
