// soamzi: SOA-MZI sampling-mixer simulator.
//
// Verbs:
//   run                        full architecture-comparison scenario
//   calibrate <procedure>      static | hd2 | odl | pi-shift
//   oracle                     linearized-sampler verification gate
//   spectrum                   single (architecture, mi) spectrum dump
//
// Exit codes: 0 success, 2 config error, 3 physics/convergence error,
// 4 oracle-gate failure.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pipeline.hpp"
#include "soamzi/calibration.hpp"
#include "soamzi/errors.hpp"
#include "soamzi/scenario.hpp"
#include "soamzi/signalgen.hpp"
#include "soamzi/units.hpp"

namespace fs = std::filesystem;
using namespace soamzi;

namespace {

struct Options {
  std::string config_path;
  std::string out_dir = "out";
  std::string arch = "switching_standard";
  double mi = 0.8;
  std::string procedure;
};

void add_common_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--config", opt.config_path, "JSON config file (empty = defaults)");
  cmd->add_option("--out", opt.out_dir, "output directory");
}

int cmd_run(const Options& opt) {
  const ScenarioConfig cfg = load_config(opt.config_path);

  // verification gate before any full-model output
  const double worst = oracle_gate(cfg);
  std::printf("oracle gate: worst deviation %.4f dB (limit 0.1)\n", worst);

  const auto cells = run_cells(cfg);
  const auto files = emit_outputs(cfg, cells, opt.out_dir);

  std::vector<MixerReport> reports;
  for (const auto& c : cells) reports.push_back(c.report);
  std::cout << summarize(reports).to_text();
  std::printf("wrote %zu files under %s\n", files.size(), opt.out_dir.c_str());
  return 0;
}

int cmd_calibrate(const Options& opt) {
  const ScenarioConfig cfg = load_config(opt.config_path);
  fs::create_directories(opt.out_dir);
  const auto path_of = [&](const char* name) {
    return (fs::path(opt.out_dir) / name).string();
  };

  if (opt.procedure == "static") {
    const double probe_power = dbm_to_watt(cfg.switching_port_c_dbm);
    const double bias = set_dark_port(cfg.soa_upper, cfg.soa_lower, probe_power);
    const StaticCurve curve = static_characterization(
        cfg.soa_upper, cfg.soa_lower, bias, probe_power, cfg.static_p_a_grid_dbm);
    write_static_curve_csv(curve, path_of("static_curve.csv"));
    const QuasiLinearRegion region = quasi_linear_region(curve);
    std::printf("static characterization: bias %.6f rad; quasi-linear region "
                "[%.2f, %.2f] dBm, center %.2f dBm\n",
                bias, region.lo_dbm, region.hi_dbm, region.center_dbm);
  } else if (opt.procedure == "hd2") {
    const Hd2SweepResult sweep = hd2_power_sweep(cfg);
    write_hd2_sweep_csv(sweep, path_of("hd2_sweep.csv"));
    std::printf("hd2 sweep: minimum at %.2f dBm mean power\n", sweep.best_p_a_dbm);
  } else if (opt.procedure == "odl") {
    const OdlTuneResult tune = tune_odl(cfg);
    write_odl_tune_csv(tune, path_of("odl_tune.csv"));
    double best_spread = 0.0;
    for (const auto& pt : tune.curve)
      if (pt.delay_s == tune.best_delay_s) best_spread = pt.spread_db;
    std::printf("odl tuning: best delay %.4f ps (comb spread %.2f dB)\n",
                tune.best_delay_s * 1e12, best_spread);
  } else if (opt.procedure == "pi-shift") {
    const double probe_power = 0.5 * dbm_to_watt(cfg.switching_port_c_dbm);
    const double peak = pi_shift_pump_power(cfg.soa_upper, cfg.pulse_fwhm, cfg.f_rep,
                                            probe_power, cfg.pi_shift_power_cap);
    // emit the shift-vs-power curve around the solution
    std::ofstream out(path_of("pi_shift.csv"));
    out << "peak_power_w,shift_rad\n";
    const TimeGrid grid = make_time_grid(cfg.f_rep, cfg.f_rep, 8192);
    const double h_ref = steady_state_h(cfg.soa_upper, probe_power);
    for (int i = 1; i <= 16; ++i) {
      const double p = peak * i / 8.0;
      const double mean =
          p * cfg.pulse_fwhm * std::sqrt(M_PI / (4.0 * M_LN2)) * cfg.f_rep;
      std::vector<OpticalEnvelope> in;
      in.push_back(cw(grid, cfg.data_wavelength_nm, probe_power));
      in.push_back(gaussian_pulse_train(grid, cfg.pulse_fwhm, mean,
                                        cfg.pump_wavelength_nm));
      const auto run = propagate(cfg.soa_upper, in, 200);
      out << p << "," << 0.5 * cfg.soa_upper.alpha * (h_ref - run.trace.min()) << "\n";
    }
    std::printf("pi-shift pump power: %.4f mW peak (%.2f dBm mean)\n", peak * 1e3,
                watt_to_dbm(peak * cfg.pulse_fwhm *
                            std::sqrt(M_PI / (4.0 * M_LN2)) * cfg.f_rep));
  } else {
    throw ConfigError("unknown calibrate procedure '" + opt.procedure +
                      "' (expected static, hd2, odl or pi-shift)");
  }
  return 0;
}

int cmd_oracle(const Options& opt) {
  const ScenarioConfig cfg = load_config(opt.config_path);
  const double worst = oracle_gate(cfg);
  std::printf("oracle gate passed: worst deviation %.4f dB (limit 0.1)\n", worst);
  return 0;
}

int cmd_spectrum(const Options& opt) {
  const ScenarioConfig cfg = load_config(opt.config_path);
  const Architecture kind = architecture_from_string(opt.arch);
  if (opt.mi < 0.0 || opt.mi > 1.0) throw ConfigError("--mi must lie in [0, 1]");

  const PipelineResult run = run_pipeline(cfg, cfg.make_arch_config(kind), opt.mi);
  fs::create_directories(opt.out_dir);
  char name[96];
  std::snprintf(name, sizeof(name), "spectrum_%s_%g.csv", opt.arch.c_str(), opt.mi);
  const std::string path = (fs::path(opt.out_dir) / name).string();
  write_spectrum_csv(run.spectrum, path);

  std::printf("%s mi=%g: p_in(%.0f MHz) = %.2f dBm, p_out(%.0f GHz) = %.2f dBm\n",
              opt.arch.c_str(), opt.mi, cfg.f_if / 1e6, run.p_in_dbm,
              (cfg.f_rep - cfg.f_if) / 1e9,
              run.spectrum.power_at(cfg.f_rep - cfg.f_if));
  std::printf("wrote %s\n", path.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SOA-MZI all-optical sampling mixer simulator"};
  app.require_subcommand(1);

  Options opt;
  CLI::App* run = app.add_subcommand("run", "full architecture-comparison scenario");
  add_common_flags(run, opt);

  CLI::App* calibrate =
      app.add_subcommand("calibrate", "operating-point procedures");
  calibrate->add_option("procedure", opt.procedure, "static | hd2 | odl | pi-shift")
      ->required();
  add_common_flags(calibrate, opt);

  CLI::App* oracle =
      app.add_subcommand("oracle", "linearized-sampler verification gate");
  add_common_flags(oracle, opt);

  CLI::App* spectrum =
      app.add_subcommand("spectrum", "single (architecture, mi) spectrum dump");
  add_common_flags(spectrum, opt);
  spectrum->add_option("--arch", opt.arch, "architecture name");
  spectrum->add_option("--mi", opt.mi, "modulation index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) return cmd_run(opt);
    if (calibrate->parsed()) return cmd_calibrate(opt);
    if (oracle->parsed()) return cmd_oracle(opt);
    if (spectrum->parsed()) return cmd_spectrum(opt);
  } catch (const OracleGateError& e) {
    std::cerr << "oracle gate failure: " << e.what() << "\n";
    return 4;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
