#pragma once

#include <array>
#include <optional>

#include "sqrtnot/smatrix.hpp"

namespace sqrtnot {

/// Single-reservoir bias: the reservoir feeding `input_lead` sits at
/// chemical potential mu0 - eV, the other three at mu0.
struct BiasConfig {
  double bias_voltage = 0.0;            // V
  double temperature = 0.0;             // K
  Lead input_lead = Lead::A;
  double base_chemical_potential = 0.0;  // J, informational
};

/// Outgoing amplitude vector (c_A, c_B, c_C, c_D) over the leads.
struct QubitState {
  std::array<Complex, 4> amplitudes{};

  double norm() const;
};

enum class NoiseKind { Auto, Cross };

struct NoiseResult {
  /// Noise divided by the scale (e^3 V/h) coth(beta e V / 2).
  double prefactor_units = 0.0;
  /// A^2/Hz; present only when a BiasConfig was supplied.
  std::optional<double> si{};
  NoiseKind kind = NoiseKind::Auto;
  Lead lead_a = Lead::D;
  Lead lead_b = Lead::D;  // equals lead_a for auto noise
};

/// Outgoing state for a unit-amplitude input in one lead: the corresponding
/// column of the scattering matrix.
QubitState output_state(const ScatteringMatrix& s, Lead input);

/// Per-lead exit probabilities |S_{lead,input}|^2.
std::array<double, 4> output_probabilities(const ScatteringMatrix& s, Lead input);

/// The ideal equal-superposition output (0, 0, 1/sqrt2, 1/sqrt2).
QubitState perfect_superposition_target();

/// Squared overlap |sum conj(c_a) target_a|^2. The output state may be
/// unnormalized (reflection losses lower the fidelity); the target must have
/// unit norm within 1e-12 or std::invalid_argument is thrown.
double fidelity(const QubitState& output, const QubitState& target);

/// The noise scale (e^3 V/h) coth(beta e V / 2) in A^2/Hz. Limits taken by
/// continuity: e^3 V/h at T = 0, 2 e^2 kB T/h at V = 0. Throws
/// std::domain_error when both V and T are zero, std::invalid_argument for
/// negative or non-finite inputs.
double noise_prefactor(const BiasConfig& bias);

/// Zero-frequency auto noise in `lead` for a unit current entering `input`,
/// in prefactor units:
///   |S_{lead,input}|^2 * sum_{g != input} |S_{lead,g}|^2.
/// For a row-normalized matrix this is T(1-T) with T = |S_{lead,input}|^2.
/// Throws std::invalid_argument when lead == input.
NoiseResult shot_noise_auto(const ScatteringMatrix& s, Lead lead, Lead input,
                            const std::optional<BiasConfig>& bias = std::nullopt);

/// Zero-frequency cross noise between two leads, in prefactor units:
///   Re sum_{g != input} conj(S_{l1,input}) S_{l1,g} conj(S_{l2,g}) S_{l2,input}.
/// Symmetric under swapping l1 and l2. The sign is reported exactly as the
/// formula yields. Throws std::invalid_argument when lead1 == lead2.
NoiseResult shot_noise_cross(const ScatteringMatrix& s, Lead lead1, Lead lead2,
                             Lead input,
                             const std::optional<BiasConfig>& bias = std::nullopt);

}  // namespace sqrtnot
