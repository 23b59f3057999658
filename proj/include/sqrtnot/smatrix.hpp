#pragma once

#include <array>
#include <complex>

#include "sqrtnot/leads.hpp"

namespace sqrtnot {

using Complex = std::complex<double>;

/// 4x4 matrix of scattering amplitudes over the leads A..D. Entry (out, in)
/// is the amplitude for an electron entering in lead `in` to leave in lead
/// `out`; same-side entries are reflection amplitudes r, cross-side entries
/// transmission amplitudes t. Immutable after construction.
class ScatteringMatrix {
 public:
  /// Zero matrix.
  ScatteringMatrix() = default;

  /// Row-major entries, rows = outgoing lead, columns = incoming lead.
  /// Throws std::invalid_argument on non-finite entries.
  explicit ScatteringMatrix(const std::array<Complex, 16>& entries);

  static ScatteringMatrix identity();

  const Complex& operator()(Lead out, Lead in) const {
    return entries_[4 * index_of(out) + index_of(in)];
  }
  const Complex& at(int row, int col) const { return entries_[4 * row + col]; }

  const std::array<Complex, 16>& entries() const { return entries_; }

 private:
  std::array<Complex, 16> entries_{};
};

/// The one-parameter sech/tanh gate family. The magnitudes are
///   r1 = sqrt( (1 - sech k)/4 )
///   r2 = sqrt( (1 - sech k)/2 )
///   t1 = sqrt( 5/64 + (sech k + 1/8)(tanh k + 3/4)/2 )
///   t2 = sqrt( 5/64 + (sech k + 1/8)(tanh(-k) + 3/4)/2 )
/// arranged with the sign pattern
///   r_AA = -r_BB = -r_CC = r_DD = r1
///   -r_BA = -r_AB = r_CD = r_DC = r2
///   -t_AD = t_BC = -t_CB = t_DA = t1
///   t_AC = t_BD = t_CA = -t_DB = t2
/// Every row and column of the result has unit norm for any finite kappa.
/// Throws std::invalid_argument for non-finite kappa.
ScatteringMatrix build_sqrt_not(double kappa);

/// Max-entry magnitude of S^dag S - I. Zero iff S is unitary to machine
/// precision. The sqrt-NOT family conserves per-lead probability (unit row
/// and column norms) but is not unitary: the deviation equals
/// max(2 t1 t2, 2 r2 t2, 2 r1 t2), which is 1 at kappa = 0.
double unitarity_deviation(const ScatteringMatrix& s);

struct NormDiagnostics {
  double row_error;  // max_row |sum_col |S|^2 - 1|
  double col_error;  // max_col |sum_row |S|^2 - 1|
};

/// Probability-conservation check for unit inputs in single leads.
NormDiagnostics norm_diagnostics(const ScatteringMatrix& s);

}  // namespace sqrtnot
