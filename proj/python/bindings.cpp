#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pipeline.hpp"
#include "soamzi/calibration.hpp"
#include "soamzi/scenario.hpp"
#include "soamzi/signalgen.hpp"
#include "soamzi/units.hpp"

namespace py = pybind11;
using namespace soamzi;

namespace {

ScenarioConfig config_from(const std::string& json_text) {
  if (json_text.empty()) {
    ScenarioConfig cfg;
    cfg.validate();
    return cfg;
  }
  return parse_config(json_text);
}

py::dict report_dict(const MixerReport& r) {
  py::dict d;
  d["arch"] = r.arch;
  d["mi"] = r.mi;
  d["feasible"] = r.feasible;
  if (r.feasible) {
    d["p_in_dbm"] = r.p_in_dbm;
    d["p_out_dbm"] = r.p_out_dbm;
    d["gc_db"] = r.gc_db;
    d["hd2_db"] = r.hd2_db;
    d["hd3_db"] = r.hd3_db;
    d["thd_db"] = r.thd_db;
  } else {
    d["note"] = r.note;
  }
  return d;
}

py::array_t<double> to_array(const std::vector<double>& v) {
  py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "SOA-MZI sampling-mixer simulator core";

  m.def("default_config", [] { return config_to_json(ScenarioConfig{}); },
        "Effective configuration JSON with every default filled in.");

  m.def(
      "run_scenario",
      [](const std::string& config_json, unsigned workers) {
        const ScenarioConfig cfg = config_from(config_json);
        py::list out;
        for (const auto& r : run_scenario(cfg, workers)) out.append(report_dict(r));
        return out;
      },
      py::arg("config_json") = "", py::arg("workers") = 0,
      "Full architecture-comparison run; one dict per (arch, mi) cell.");

  m.def(
      "cell_spectrum",
      [](const std::string& arch, double mi, const std::string& config_json) {
        const ScenarioConfig cfg = config_from(config_json);
        const Architecture kind = architecture_from_string(arch);
        const PipelineResult run = run_pipeline(cfg, cfg.make_arch_config(kind), mi);
        const std::size_t n = run.spectrum.power_dbm.size();
        py::array_t<double> freq(static_cast<py::ssize_t>(n));
        for (std::size_t k = 0; k < n; ++k)
          freq.mutable_data()[k] = static_cast<double>(k) * run.spectrum.bin_hz;
        py::dict d;
        d["freq_hz"] = freq;
        d["power_dbm"] = to_array(run.spectrum.power_dbm);
        d["p_in_dbm"] = run.p_in_dbm;
        d["bias_phase"] = run.bias_phase;
        return d;
      },
      py::arg("arch"), py::arg("mi"), py::arg("config_json") = "",
      "Detected port-I spectrum for one (architecture, mi) cell.");

  m.def(
      "oracle_gate",
      [](const std::string& config_json) { return oracle_gate(config_from(config_json)); },
      py::arg("config_json") = "",
      "Worst linearized-run vs closed-form deviation in dB (limit 0.1).");

  m.def(
      "steady_state_h",
      [](double h0, double tau_c, double e_sat, double alpha, double p_in) {
        return steady_state_h(SOAParams{h0, tau_c, e_sat, alpha}, p_in);
      },
      py::arg("h0"), py::arg("tau_c"), py::arg("e_sat"), py::arg("alpha"),
      py::arg("p_in"), "Static SOA operating point (integrated log-gain).");

  m.def("smooth_ma7",
        [](const std::vector<double>& y) { return to_array(smooth_ma7(y)); },
        py::arg("y"), "Centered 7-point moving average with shrinking edges.");

  m.def(
      "static_characterization",
      [](const std::string& config_json) {
        const ScenarioConfig cfg = config_from(config_json);
        const double probe_power = dbm_to_watt(cfg.switching_port_c_dbm);
        const double bias = set_dark_port(cfg.soa_upper, cfg.soa_lower, probe_power);
        const StaticCurve c = static_characterization(
            cfg.soa_upper, cfg.soa_lower, bias, probe_power, cfg.static_p_a_grid_dbm);
        const QuasiLinearRegion r = quasi_linear_region(c);
        py::dict d;
        d["p_a_dbm"] = to_array(c.p_a_dbm);
        d["p_j_mw"] = to_array(c.p_j_mw);
        d["derivative"] = to_array(c.derivative);
        d["bias_phase"] = bias;
        d["region_lo_dbm"] = r.lo_dbm;
        d["region_hi_dbm"] = r.hi_dbm;
        d["region_center_dbm"] = r.center_dbm;
        return d;
      },
      py::arg("config_json") = "",
      "Static port-J curve, smoothed derivative and quasi-linear region.");

  m.def(
      "pi_shift_pump_power",
      [](const std::string& config_json) {
        const ScenarioConfig cfg = config_from(config_json);
        return pi_shift_pump_power(cfg.soa_upper, cfg.pulse_fwhm, cfg.f_rep,
                                   0.5 * dbm_to_watt(cfg.switching_port_c_dbm),
                                   cfg.pi_shift_power_cap);
      },
      py::arg("config_json") = "",
      "Peak pulse power (W) at which the XPM phase excursion reaches pi.");
}
