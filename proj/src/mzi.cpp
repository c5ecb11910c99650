#include "soamzi/mzi.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "soamzi/errors.hpp"
#include "soamzi/units.hpp"
#include "soamzi/util.hpp"

namespace soamzi {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
const std::complex<double> kJ(0.0, 1.0);
}  // namespace

std::string to_string(Architecture arch) {
  switch (arch) {
    case Architecture::SwitchingStandard: return "switching_standard";
    case Architecture::SwitchingDifferential: return "switching_differential";
    case Architecture::Modulation: return "modulation";
  }
  throw std::logic_error("unknown architecture");
}

Architecture architecture_from_string(const std::string& name) {
  if (name == "switching_standard") return Architecture::SwitchingStandard;
  if (name == "switching_differential") return Architecture::SwitchingDifferential;
  if (name == "modulation") return Architecture::Modulation;
  throw ConfigError("unknown architecture '" + name +
                    "' (expected switching_standard, switching_differential or "
                    "modulation)");
}

void ArchitectureConfig::validate(const TimeGrid& grid) const {
  if (!(bias_phase >= 0.0 && bias_phase < kTwoPi))
    throw ConfigError("bias_phase must lie in [0, 2pi)");
  const bool differential = kind == Architecture::SwitchingDifferential;
  if (differential != odl_delay.has_value())
    throw ConfigError("odl_delay must be present exactly for switching_differential");
  if (odl_delay) {
    const double steps = *odl_delay / grid.dt;
    if (std::abs(steps - std::round(steps)) > 1e-6)
      throw ConfigError("odl_delay must be an integer multiple of the grid dt");
  }
}

std::pair<OpticalEnvelope, OpticalEnvelope> coupler_2x2(const OpticalEnvelope& e1,
                                                        const OpticalEnvelope& e2) {
  if (!(e1.grid == e2.grid))
    throw std::invalid_argument("coupler inputs must share one grid");
  if (e1.carrier_nm != e2.carrier_nm && !e1.is_zero() && !e2.is_zero())
    throw std::invalid_argument("coupler inputs must share one carrier wavelength");

  const double carrier = e1.is_zero() ? e2.carrier_nm : e1.carrier_nm;
  OpticalEnvelope o1 = zero_envelope(e1.grid, carrier);
  OpticalEnvelope o2 = zero_envelope(e1.grid, carrier);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < e1.grid.n_samples; ++i) {
    o1.samples[i] = (e1.samples[i] + kJ * e2.samples[i]) * inv_sqrt2;
    o2.samples[i] = (kJ * e1.samples[i] + e2.samples[i]) * inv_sqrt2;
  }
  return {std::move(o1), std::move(o2)};
}

OpticalEnvelope apply_delay(const OpticalEnvelope& e, double delay) {
  const double steps_real = delay / e.grid.dt;
  const double steps_rounded = std::round(steps_real);
  if (std::abs(steps_real - steps_rounded) > 1e-6)
    throw std::invalid_argument("delay must be an integer multiple of dt (no "
                                "interpolation)");
  const std::size_t n = e.grid.n_samples;
  const std::size_t shift =
      static_cast<std::size_t>(((static_cast<long long>(steps_rounded) %
                                 static_cast<long long>(n)) +
                                static_cast<long long>(n)) %
                               static_cast<long long>(n));
  OpticalEnvelope out = e;
  for (std::size_t i = 0; i < n; ++i) out.samples[(i + shift) % n] = e.samples[i];
  return out;
}

namespace {

OpticalEnvelope scaled_to_mean_power(const OpticalEnvelope& e, double target_w) {
  const double mean = e.mean_power();
  OpticalEnvelope out = e;
  if (mean <= 0.0) return out;
  const double s = std::sqrt(target_w / mean);
  for (auto& v : out.samples) v *= s;
  return out;
}

void apply_phase(OpticalEnvelope& e, double phase) {
  const std::complex<double> rot = std::exp(kJ * phase);
  for (auto& v : e.samples) v *= rot;
}

}  // namespace

MixerOutput run_mixer(const ArchitectureConfig& arch, const OpticalEnvelope& pump,
                      const OpticalEnvelope& probe, const SOAParams& soa_up,
                      const SOAParams& soa_low) {
  if (!(pump.grid == probe.grid))
    throw std::invalid_argument("pump and probe must share one grid");
  if (pump.carrier_nm == probe.carrier_nm)
    throw std::invalid_argument(
        "pump and probe must sit on distinct wavelength channels (the OBPF "
        "separates them downstream)");
  arch.validate(probe.grid);

  // Input coupler: probe at port C splits into the arms; the second coupler
  // input is unused.
  auto [arm_up_probe, arm_low_probe] =
      coupler_2x2(probe, zero_envelope(probe.grid, probe.carrier_nm));

  // Pump injection (idealized unity coupling): port A drives the upper SOA;
  // in the differential configuration a delayed copy (port D) drives the
  // lower SOA, rescaled to the configured port-D mean power when present.
  OpticalEnvelope pump_low = zero_envelope(pump.grid, pump.carrier_nm);
  if (arch.kind == Architecture::SwitchingDifferential) {
    pump_low = apply_delay(pump, *arch.odl_delay);
    const auto it = arch.port_powers_dbm.find(Port::D);
    if (it != arch.port_powers_dbm.end())
      pump_low = scaled_to_mean_power(pump_low, dbm_to_watt(it->second));
  }

  auto up = propagate(soa_up, {arm_up_probe, pump});
  auto low = propagate(soa_low, {arm_low_probe, pump_low});

  OpticalEnvelope up_probe = std::move(up.outputs[0]);
  OpticalEnvelope up_pump = std::move(up.outputs[1]);
  OpticalEnvelope low_probe = std::move(low.outputs[0]);
  OpticalEnvelope low_pump = std::move(low.outputs[1]);

  // Bias phase shifter sits on the lower arm.
  apply_phase(low_probe, arch.bias_phase);
  apply_phase(low_pump, arch.bias_phase);

  auto [port_i, port_j] = coupler_2x2(up_probe, low_probe);
  auto [pump_i, pump_j] = coupler_2x2(up_pump, low_pump);

  MixerOutput out;
  out.port_i = std::move(port_i);
  out.port_j = std::move(port_j);
  out.trace_upper = std::move(up.trace);
  out.trace_lower = std::move(low.trace);
  out.pump_i = std::move(pump_i);
  out.pump_j = std::move(pump_j);
  return out;
}

std::pair<double, double> static_port_powers(const SOAParams& soa_up,
                                             const SOAParams& soa_low,
                                             double bias_phase, double probe_power,
                                             double pump_up_power,
                                             double pump_low_power) {
  const double h_u = steady_state_h(soa_up, 0.5 * probe_power + pump_up_power);
  const double h_l = steady_state_h(soa_low, 0.5 * probe_power + pump_low_power);
  const std::complex<double> g_u =
      std::exp(std::complex<double>(0.5 * h_u, -0.5 * soa_up.alpha * h_u));
  const std::complex<double> g_l =
      std::exp(std::complex<double>(0.5 * h_l, -0.5 * soa_low.alpha * h_l));
  const std::complex<double> rot = std::exp(kJ * bias_phase);
  const double p_i = probe_power * std::norm(g_u - g_l * rot) / 4.0;
  const double p_j = probe_power * std::norm(g_u + g_l * rot) / 4.0;
  return {p_i, p_j};
}

double set_dark_port(const SOAParams& soa_up, const SOAParams& soa_low,
                     double probe_power) {
  if (!(probe_power > 0.0))
    throw std::invalid_argument("dark-port search needs positive probe power");

  const auto p_i = [&](double phase) {
    return static_port_powers(soa_up, soa_low, phase, probe_power, 0.0, 0.0).first;
  };

  // Coarse scan to bracket the global minimum (the response is 2pi-periodic
  // and the minimum can sit at the domain edge), then golden-section refine.
  const int n_scan = 256;
  int best = 0;
  double best_val = p_i(0.0);
  for (int k = 1; k < n_scan; ++k) {
    const double v = p_i(kTwoPi * k / n_scan);
    if (v < best_val) {
      best_val = v;
      best = k;
    }
  }
  const double step = kTwoPi / n_scan;
  const double lo = step * (best - 1);
  const double hi = step * (best + 1);
  const double phase = golden_section_min(
      [&](double x) { return p_i(x); }, lo, hi, 1e-7);
  double wrapped = std::fmod(phase + kTwoPi, kTwoPi);
  // A minimum at 0 found from the negative side wraps to just under 2pi;
  // snap it back so the symmetric-arm case reports 0 rather than 2pi - eps.
  if (kTwoPi - wrapped < 1e-6) wrapped = 0.0;
  return wrapped;
}

}  // namespace soamzi
