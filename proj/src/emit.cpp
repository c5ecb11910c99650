#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "soamzi/calibration.hpp"
#include "soamzi/scenario.hpp"
#include "soamzi/svg_plot.hpp"
#include "soamzi/units.hpp"

namespace soamzi {

namespace fs = std::filesystem;

std::string ComparisonSummary::to_text() const {
  std::ostringstream out;
  out << "architecture comparison (switching_standard vs modulation)\n";
  if (mi.empty()) {
    out << "  no comparable (mi, architecture) pairs in this run\n";
    return out.str();
  }
  char line[160];
  out << "  mi    gain_gap_db  thd_gap_db\n";
  for (std::size_t i = 0; i < mi.size(); ++i) {
    std::snprintf(line, sizeof(line), "  %-5.2f %+11.2f %+11.2f\n", mi[i],
                  gain_gap_db[i], thd_gap_db[i]);
    out << line;
  }
  out << "trends:\n";
  out << "  switching gain increases with mi: "
      << (switching_gain_increases_with_mi ? "yes" : "no") << "\n";
  out << "  switching thd increases with mi:  "
      << (thd_increases_with_mi ? "yes" : "no") << "\n";
  out << "  switching gain above modulation:  "
      << (switching_gain_above_modulation ? "yes" : "no") << "\n";
  return out.str();
}

namespace {

std::string mi_label(double mi) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", mi);
  return buf;
}

PlotSeries series_for(const std::vector<MixerReport>& reports, const std::string& arch,
                      bool thd) {
  PlotSeries s;
  s.name = arch;
  for (const auto& r : reports) {
    if (r.arch != arch || !r.feasible) continue;
    s.x.push_back(r.mi);
    s.y.push_back(thd ? r.thd_db : r.gc_db);
  }
  return s;
}

}  // namespace

std::vector<std::string> emit_outputs(const ScenarioConfig& cfg,
                                      const std::vector<CellResult>& cells,
                                      const std::string& out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (!fs::is_directory(out_dir))
    throw std::runtime_error("cannot create output directory " + out_dir);

  std::vector<std::string> written;
  const auto path_of = [&](const std::string& name) {
    return (fs::path(out_dir) / name).string();
  };

  std::vector<MixerReport> reports;
  for (const auto& c : cells) reports.push_back(c.report);

  const std::string reports_path = path_of("reports.csv");
  write_reports_csv(reports, reports_path);
  written.push_back(reports_path);

  if (cells.empty()) return written;  // headers-only CSV, no plots

  fs::create_directories(fs::path(out_dir) / "spectra", ec);
  for (const auto& c : cells) {
    if (!c.report.feasible) continue;
    const std::string name =
        "spectra/" + c.report.arch + "_" + mi_label(c.report.mi) + ".csv";
    const std::string p = path_of(name);
    write_spectrum_csv(c.spectrum, p);
    written.push_back(p);
  }

  // summary.txt: cross-architecture trends plus any infeasible-cell reasons
  {
    const std::string p = path_of("summary.txt");
    std::ofstream out(p);
    if (!out) throw std::runtime_error("cannot open " + p + " for writing");
    out << summarize(reports).to_text();
    bool any_infeasible = false;
    for (const auto& r : reports)
      if (!r.feasible) {
        if (!any_infeasible) out << "infeasible cells:\n";
        any_infeasible = true;
        out << "  " << r.arch << " mi=" << mi_label(r.mi) << ": " << r.note << "\n";
      }
    written.push_back(p);
  }

  // Fig. 8/9 analogues from the reports
  {
    PlotSpec spec;
    spec.title = "conversion gain vs modulation index";
    spec.x_label = "modulation index";
    spec.y_label = "G_c (dB)";
    for (Architecture a : cfg.architectures)
      spec.series.push_back(series_for(reports, to_string(a), false));
    const std::string p = path_of("fig8_gain.svg");
    write_svg(spec, p);
    written.push_back(p);
  }
  {
    PlotSpec spec;
    spec.title = "total harmonic distortion vs modulation index";
    spec.x_label = "modulation index";
    spec.y_label = "THD (dB)";
    for (Architecture a : cfg.architectures)
      spec.series.push_back(series_for(reports, to_string(a), true));
    const std::string p = path_of("fig9_thd.svg");
    write_svg(spec, p);
    written.push_back(p);
  }

  // Fig. 6 analogue: static transfer + smoothed derivative
  {
    const double probe_power = dbm_to_watt(cfg.switching_port_c_dbm);
    const double bias = set_dark_port(cfg.soa_upper, cfg.soa_lower, probe_power);
    const StaticCurve curve = static_characterization(
        cfg.soa_upper, cfg.soa_lower, bias, probe_power, cfg.static_p_a_grid_dbm);
    PlotSpec spec;
    spec.title = "static port-J response vs pump power";
    spec.x_label = "port A power (dBm)";
    spec.y_label = "P_J (mW) / scaled derivative";
    PlotSeries pj{"P_J (mW)", curve.p_a_dbm, curve.p_j_mw};
    // scale the derivative onto the same axis for a self-contained figure
    double dmax = 0.0, pmax = 0.0;
    for (double v : curve.derivative) dmax = std::max(dmax, std::abs(v));
    for (double v : curve.p_j_mw) pmax = std::max(pmax, v);
    PlotSeries dj{"|dP_J/dP_A| (scaled)", curve.p_a_dbm, {}};
    for (double v : curve.derivative)
      dj.y.push_back(dmax > 0.0 ? std::abs(v) / dmax * pmax : 0.0);
    spec.series = {pj, dj};
    const std::string p = path_of("fig6_static.svg");
    write_svg(spec, p);
    written.push_back(p);
  }

  // Fig. 7 analogue: HD2 vs pump mean power at constant input tone
  {
    const Hd2SweepResult sweep = hd2_power_sweep(cfg);
    PlotSpec spec;
    spec.title = "HD2 vs mean power at constant input tone";
    spec.x_label = "port A power (dBm)";
    spec.y_label = "HD2 (dB)";
    PlotSeries s{"hd2", {}, {}};
    for (const auto& pt : sweep.curve) {
      if (!pt.feasible) continue;
      s.x.push_back(pt.p_a_dbm);
      s.y.push_back(pt.hd2_db);
    }
    spec.series = {s};
    const std::string p = path_of("fig7_hd2.svg");
    write_svg(spec, p);
    written.push_back(p);
  }

  return written;
}

}  // namespace soamzi
