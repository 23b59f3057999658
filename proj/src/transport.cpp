#include "sqrtnot/transport.hpp"

#include <cmath>
#include <stdexcept>

#include "sqrtnot/constants.hpp"

namespace sqrtnot {

double QubitState::norm() const {
  double sum = 0.0;
  for (const Complex& c : amplitudes) sum += std::norm(c);
  return std::sqrt(sum);
}

QubitState output_state(const ScatteringMatrix& s, Lead input) {
  QubitState state;
  for (Lead out : all_leads) {
    state.amplitudes[index_of(out)] = s(out, input);
  }
  return state;
}

std::array<double, 4> output_probabilities(const ScatteringMatrix& s, Lead input) {
  std::array<double, 4> p{};
  for (Lead out : all_leads) {
    p[index_of(out)] = std::norm(s(out, input));
  }
  return p;
}

QubitState perfect_superposition_target() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  QubitState target;
  target.amplitudes = {Complex(0.0), Complex(0.0), Complex(inv_sqrt2), Complex(inv_sqrt2)};
  return target;
}

double fidelity(const QubitState& output, const QubitState& target) {
  if (std::abs(target.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("fidelity: target state must have unit norm");
  }
  Complex overlap = 0.0;
  for (int i = 0; i < 4; ++i) {
    overlap += std::conj(output.amplitudes[i]) * target.amplitudes[i];
  }
  return std::norm(overlap);
}

double noise_prefactor(const BiasConfig& bias) {
  const double v = bias.bias_voltage;
  const double t = bias.temperature;
  if (!std::isfinite(v) || v < 0.0) {
    throw std::invalid_argument("noise_prefactor: bias voltage must be finite and >= 0");
  }
  if (!std::isfinite(t) || t < 0.0) {
    throw std::invalid_argument("noise_prefactor: temperature must be finite and >= 0");
  }
  if (v == 0.0 && t == 0.0) {
    throw std::domain_error("noise_prefactor: limit V -> 0, T -> 0 is undefined");
  }
  using namespace constants;
  const double shot_scale = elementary_charge * elementary_charge *
                            elementary_charge * v / planck;
  if (v == 0.0) {
    // coth(x) ~ 1/x as x -> 0, so the V dependence cancels.
    return 2.0 * elementary_charge * elementary_charge * boltzmann * t / planck;
  }
  if (t == 0.0) return shot_scale;  // coth -> 1
  const double x = elementary_charge * v / (2.0 * boltzmann * t);  // beta e V / 2
  // coth(x) = 1 + 2/(e^{2x} - 1); expm1 keeps small x accurate and large x
  // saturates cleanly at 1.
  const double coth = 1.0 + 2.0 / std::expm1(2.0 * x);
  return shot_scale * coth;
}

namespace {

NoiseResult with_si(NoiseResult res, const std::optional<BiasConfig>& bias) {
  if (bias) res.si = res.prefactor_units * noise_prefactor(*bias);
  return res;
}

}  // namespace

NoiseResult shot_noise_auto(const ScatteringMatrix& s, Lead lead, Lead input,
                            const std::optional<BiasConfig>& bias) {
  if (lead == input) {
    throw std::invalid_argument("shot_noise_auto: measurement lead equals input lead");
  }
  double value = 0.0;
  for (Lead gamma : all_leads) {
    if (gamma == input) continue;
    value += std::norm(s(lead, input)) * std::norm(s(lead, gamma));
  }
  NoiseResult res;
  res.prefactor_units = value;
  res.kind = NoiseKind::Auto;
  res.lead_a = lead;
  res.lead_b = lead;
  return with_si(res, bias);
}

NoiseResult shot_noise_cross(const ScatteringMatrix& s, Lead lead1, Lead lead2,
                             Lead input, const std::optional<BiasConfig>& bias) {
  if (lead1 == lead2) {
    throw std::invalid_argument(
        "shot_noise_cross: leads must differ; use shot_noise_auto for a single lead");
  }
  Complex acc = 0.0;
  for (Lead gamma : all_leads) {
    if (gamma == input) continue;
    acc += std::conj(s(lead1, input)) * s(lead1, gamma) *
           std::conj(s(lead2, gamma)) * s(lead2, input);
  }
  NoiseResult res;
  res.prefactor_units = acc.real();
  res.kind = NoiseKind::Cross;
  res.lead_a = lead1;
  res.lead_b = lead2;
  return with_si(res, bias);
}

}  // namespace sqrtnot
