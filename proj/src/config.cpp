#include "soamzi/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "soamzi/errors.hpp"

namespace soamzi {

using nlohmann::json;

namespace {

std::vector<double> linspace_step(double start, double stop, double step) {
  std::vector<double> out;
  const int n = static_cast<int>(std::round((stop - start) / step)) + 1;
  for (int i = 0; i < n; ++i) out.push_back(start + i * step);
  return out;
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      throw ConfigError("unknown config key '" + it.key() + "' in " + where);
}

template <typename T>
void read_if(const json& obj, const char* key, T& into) {
  if (obj.contains(key)) into = obj.at(key).get<T>();
}

SOAParams parse_soa(const json& obj, const SOAParams& defaults, const std::string& where) {
  reject_unknown_keys(obj, {"h0", "tau_c_s", "e_sat_j", "alpha"}, where);
  SOAParams p = defaults;
  read_if(obj, "h0", p.h0);
  read_if(obj, "tau_c_s", p.tau_c);
  read_if(obj, "e_sat_j", p.e_sat);
  read_if(obj, "alpha", p.alpha);
  return p;
}

std::vector<double> parse_grid_spec(const json& obj, const std::string& where) {
  if (obj.is_array()) return obj.get<std::vector<double>>();
  reject_unknown_keys(obj, {"start", "stop", "step"}, where);
  return linspace_step(obj.at("start").get<double>(), obj.at("stop").get<double>(),
                       obj.at("step").get<double>());
}

}  // namespace

ScenarioConfig::ScenarioConfig() {
  soa_upper = {std::log(500.0), 25e-12, 0.5e-12, 5.0};
  soa_lower = soa_upper;
  static_p_a_grid_dbm = linspace_step(-25.0, 0.0, 0.5);
  hd2_p_a_grid_dbm = linspace_step(-20.0, -7.0, 1.0);
}

void ScenarioConfig::validate() const {
  if (schema_version != 1)
    throw ConfigError("unsupported schema_version " + std::to_string(schema_version));
  if (architectures.empty()) throw ConfigError("architectures list is empty");
  for (double mi : mi_grid)
    if (mi < 0.0 || mi > 1.0)
      throw ConfigError("mi value " + std::to_string(mi) + " outside [0, 1]");
  if (!(f_rep > 0.0) || !(f_if > 0.0)) throw ConfigError("frequencies must be positive");
  if (n_samples == 0 || (n_samples & (n_samples - 1)) != 0)
    throw ConfigError("n_samples must be a power of two");
  try {
    make_time_grid(f_rep, f_if, n_samples);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("grid: ") + e.what());
  }
  if (!(pulse_fwhm > 0.0)) throw ConfigError("pulse_fwhm must be positive");
  if (pump_wavelength_nm == data_wavelength_nm)
    throw ConfigError("pump and data wavelengths must differ");
  soa_upper.validate();
  soa_lower.validate();
  if (odl_delay < 0.0) throw ConfigError("odl_delay_s must be >= 0");
  if (!(obpf_bandwidth_nm > 0.0)) throw ConfigError("obpf_bandwidth_nm must be positive");
  if (loss_db < 0.0) throw ConfigError("loss_db must be >= 0");
  if (!(pd.responsivity > 0.0) || !(pd.load_ohm > 0.0))
    throw ConfigError("photodiode responsivity and load must be positive");
  if (static_p_a_grid_dbm.size() < 15)
    throw ConfigError("static_p_a_dbm grid needs >= 15 points (7-point smoothing)");
  for (std::size_t i = 1; i < static_p_a_grid_dbm.size(); ++i)
    if (!(static_p_a_grid_dbm[i] > static_p_a_grid_dbm[i - 1]))
      throw ConfigError("static_p_a_dbm grid must be strictly increasing");
  if (hd2_p_a_grid_dbm.empty()) throw ConfigError("hd2_p_a_dbm grid is empty");
  if (odl_delay_steps < 2) throw ConfigError("odl_delay_steps must be >= 2");
  if (!(pi_shift_power_cap > 0.0))
    throw ConfigError("pi_shift_power_cap_w must be positive");
}

ArchitectureConfig ScenarioConfig::make_arch_config(Architecture kind) const {
  ArchitectureConfig arch;
  arch.kind = kind;
  arch.bias_phase = 0.0;  // set after dark-port calibration
  switch (kind) {
    case Architecture::SwitchingStandard:
      arch.port_powers_dbm = {{Port::A, switching_port_a_dbm},
                              {Port::C, switching_port_c_dbm}};
      break;
    case Architecture::SwitchingDifferential:
      arch.port_powers_dbm = {{Port::A, switching_port_a_dbm},
                              {Port::C, switching_port_c_dbm},
                              {Port::D, switching_port_d_dbm}};
      arch.odl_delay = odl_delay;
      break;
    case Architecture::Modulation:
      arch.port_powers_dbm = {{Port::A, modulation_port_a_dbm},
                              {Port::C, modulation_port_c_dbm}};
      break;
  }
  return arch;
}

OBPFParams ScenarioConfig::obpf_for(Architecture kind) const {
  // Switching samples the data channel; Modulation samples the pulse channel.
  const double center =
      kind == Architecture::Modulation ? pump_wavelength_nm : data_wavelength_nm;
  return {center, obpf_bandwidth_nm};
}

ScenarioConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config root must be a JSON object");

  reject_unknown_keys(doc,
                      {"schema_version", "architectures", "mi_grid", "grid", "sources",
                       "ports_dbm", "soa_upper", "soa_lower", "odl_delay_s",
                       "detection", "calibration"},
                      "config root");

  ScenarioConfig cfg;
  read_if(doc, "schema_version", cfg.schema_version);

  if (doc.contains("architectures")) {
    cfg.architectures.clear();
    for (const auto& name : doc.at("architectures"))
      cfg.architectures.push_back(architecture_from_string(name.get<std::string>()));
  }
  if (doc.contains("mi_grid")) cfg.mi_grid = doc.at("mi_grid").get<std::vector<double>>();

  if (doc.contains("grid")) {
    const auto& g = doc.at("grid");
    reject_unknown_keys(g, {"f_rep_hz", "f_if_hz", "n_samples"}, "grid");
    read_if(g, "f_rep_hz", cfg.f_rep);
    read_if(g, "f_if_hz", cfg.f_if);
    read_if(g, "n_samples", cfg.n_samples);
  }
  if (doc.contains("sources")) {
    const auto& s = doc.at("sources");
    reject_unknown_keys(
        s, {"pulse_fwhm_s", "pump_wavelength_nm", "data_wavelength_nm"}, "sources");
    read_if(s, "pulse_fwhm_s", cfg.pulse_fwhm);
    read_if(s, "pump_wavelength_nm", cfg.pump_wavelength_nm);
    read_if(s, "data_wavelength_nm", cfg.data_wavelength_nm);
  }
  if (doc.contains("ports_dbm")) {
    const auto& p = doc.at("ports_dbm");
    reject_unknown_keys(p,
                        {"switching_a", "switching_c", "switching_d", "modulation_a",
                         "modulation_c"},
                        "ports_dbm");
    read_if(p, "switching_a", cfg.switching_port_a_dbm);
    read_if(p, "switching_c", cfg.switching_port_c_dbm);
    read_if(p, "switching_d", cfg.switching_port_d_dbm);
    read_if(p, "modulation_a", cfg.modulation_port_a_dbm);
    read_if(p, "modulation_c", cfg.modulation_port_c_dbm);
  }
  if (doc.contains("soa_upper"))
    cfg.soa_upper = parse_soa(doc.at("soa_upper"), cfg.soa_upper, "soa_upper");
  if (doc.contains("soa_lower"))
    cfg.soa_lower = parse_soa(doc.at("soa_lower"), cfg.soa_lower, "soa_lower");
  read_if(doc, "odl_delay_s", cfg.odl_delay);

  if (doc.contains("detection")) {
    const auto& d = doc.at("detection");
    reject_unknown_keys(
        d, {"obpf_bandwidth_nm", "loss_db", "responsivity_a_per_w", "load_ohm"},
        "detection");
    read_if(d, "obpf_bandwidth_nm", cfg.obpf_bandwidth_nm);
    read_if(d, "loss_db", cfg.loss_db);
    read_if(d, "responsivity_a_per_w", cfg.pd.responsivity);
    read_if(d, "load_ohm", cfg.pd.load_ohm);
  }
  if (doc.contains("calibration")) {
    const auto& c = doc.at("calibration");
    reject_unknown_keys(c,
                        {"static_p_a_dbm", "hd2_p_a_dbm", "odl_delay_steps",
                         "pi_shift_power_cap_w"},
                        "calibration");
    if (c.contains("static_p_a_dbm"))
      cfg.static_p_a_grid_dbm = parse_grid_spec(c.at("static_p_a_dbm"), "static_p_a_dbm");
    if (c.contains("hd2_p_a_dbm"))
      cfg.hd2_p_a_grid_dbm = parse_grid_spec(c.at("hd2_p_a_dbm"), "hd2_p_a_dbm");
    read_if(c, "odl_delay_steps", cfg.odl_delay_steps);
    read_if(c, "pi_shift_power_cap_w", cfg.pi_shift_power_cap);
  }

  cfg.validate();
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  if (path.empty()) {
    ScenarioConfig cfg;
    cfg.validate();
    return cfg;
  }
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string config_to_json(const ScenarioConfig& cfg) {
  json doc;
  doc["schema_version"] = cfg.schema_version;
  json archs = json::array();
  for (auto a : cfg.architectures) archs.push_back(to_string(a));
  doc["architectures"] = archs;
  doc["mi_grid"] = cfg.mi_grid;
  doc["grid"] = {{"f_rep_hz", cfg.f_rep},
                 {"f_if_hz", cfg.f_if},
                 {"n_samples", cfg.n_samples}};
  doc["sources"] = {{"pulse_fwhm_s", cfg.pulse_fwhm},
                    {"pump_wavelength_nm", cfg.pump_wavelength_nm},
                    {"data_wavelength_nm", cfg.data_wavelength_nm}};
  doc["ports_dbm"] = {{"switching_a", cfg.switching_port_a_dbm},
                      {"switching_c", cfg.switching_port_c_dbm},
                      {"switching_d", cfg.switching_port_d_dbm},
                      {"modulation_a", cfg.modulation_port_a_dbm},
                      {"modulation_c", cfg.modulation_port_c_dbm}};
  doc["soa_upper"] = {{"h0", cfg.soa_upper.h0},
                      {"tau_c_s", cfg.soa_upper.tau_c},
                      {"e_sat_j", cfg.soa_upper.e_sat},
                      {"alpha", cfg.soa_upper.alpha}};
  doc["soa_lower"] = {{"h0", cfg.soa_lower.h0},
                      {"tau_c_s", cfg.soa_lower.tau_c},
                      {"e_sat_j", cfg.soa_lower.e_sat},
                      {"alpha", cfg.soa_lower.alpha}};
  doc["odl_delay_s"] = cfg.odl_delay;
  doc["detection"] = {{"obpf_bandwidth_nm", cfg.obpf_bandwidth_nm},
                      {"loss_db", cfg.loss_db},
                      {"responsivity_a_per_w", cfg.pd.responsivity},
                      {"load_ohm", cfg.pd.load_ohm}};
  doc["calibration"] = {{"static_p_a_dbm", cfg.static_p_a_grid_dbm},
                        {"hd2_p_a_dbm", cfg.hd2_p_a_grid_dbm},
                        {"odl_delay_steps", cfg.odl_delay_steps},
                        {"pi_shift_power_cap_w", cfg.pi_shift_power_cap}};
  return doc.dump(2) + "\n";
}

}  // namespace soamzi
