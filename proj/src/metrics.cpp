#include "soamzi/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "soamzi/units.hpp"

namespace soamzi {

double modulation_index(const std::vector<double>& samples) {
  if (samples.empty()) throw std::invalid_argument("modulation index of empty waveform");
  double sum = 0.0;
  double mx = samples.front();
  for (double v : samples) {
    sum += v;
    mx = std::max(mx, v);
  }
  const double mean = sum / static_cast<double>(samples.size());
  if (!(mean > 0.0))
    throw std::invalid_argument("modulation index needs a positive-mean waveform");
  return (mx - mean) / mean;
}

double modulation_index(const ElectricalWaveform& w) { return modulation_index(w.samples); }

Sideband sidebands(double f_rep, double f_if) {
  Sideband s;
  s.lower_1 = f_rep - f_if;
  s.lower_2 = f_rep - 2.0 * f_if;
  s.lower_3 = f_rep - 3.0 * f_if;
  s.upper_1 = f_rep + f_if;
  s.upper_2 = f_rep + 2.0 * f_if;
  s.upper_3 = f_rep + 3.0 * f_if;
  return s;
}

double conversion_gain_db(const RFSpectrum& out, double p_in_dbm, double f_rep,
                          double f_if) {
  return out.power_at(f_rep - f_if) - p_in_dbm;
}

double hd2_db(const RFSpectrum& out, double f_rep, double f_if) {
  return out.power_at(f_rep - 2.0 * f_if) - out.power_at(f_rep - f_if);
}

double hd3_db(const RFSpectrum& out, double f_rep, double f_if) {
  return out.power_at(f_rep - 3.0 * f_if) - out.power_at(f_rep - f_if);
}

double thd_db(const RFSpectrum& out, double f_rep, double f_if) {
  const double p1 = out.linear_at(f_rep - f_if);
  const double p2 = out.linear_at(f_rep - 2.0 * f_if);
  const double p3 = out.linear_at(f_rep - 3.0 * f_if);
  if (!(p1 > 0.0)) throw std::invalid_argument("THD undefined: no up-converted tone");
  if (!(p2 + p3 > 0.0)) return kFloorDbm;
  return 10.0 * std::log10((p2 + p3) / p1);
}

double hd2_upper_db(const RFSpectrum& out, double f_rep, double f_if) {
  return out.power_at(f_rep + 2.0 * f_if) - out.power_at(f_rep + f_if);
}

double hd3_upper_db(const RFSpectrum& out, double f_rep, double f_if) {
  return out.power_at(f_rep + 3.0 * f_if) - out.power_at(f_rep + f_if);
}

double thd_upper_db(const RFSpectrum& out, double f_rep, double f_if) {
  const double p1 = out.linear_at(f_rep + f_if);
  const double p2 = out.linear_at(f_rep + 2.0 * f_if);
  const double p3 = out.linear_at(f_rep + 3.0 * f_if);
  if (!(p1 > 0.0)) throw std::invalid_argument("THD undefined: no up-converted tone");
  if (!(p2 + p3 > 0.0)) return kFloorDbm;
  return 10.0 * std::log10((p2 + p3) / p1);
}

void write_reports_csv(const std::vector<MixerReport>& rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "arch,mi,p_in_dbm,p_out_dbm,gc_db,hd2_db,hd3_db,thd_db\n";
  char line[256];
  for (const auto& r : rows) {
    if (r.feasible) {
      std::snprintf(line, sizeof(line), "%s,%.3f,%.4f,%.4f,%.4f,%.4f,%.4f,%.4f\n",
                    r.arch.c_str(), r.mi, r.p_in_dbm, r.p_out_dbm, r.gc_db, r.hd2_db,
                    r.hd3_db, r.thd_db);
    } else {
      std::snprintf(line, sizeof(line), "%s,%.3f,nan,nan,nan,nan,nan,nan\n",
                    r.arch.c_str(), r.mi);
    }
    out << line;
  }
}

}  // namespace soamzi
