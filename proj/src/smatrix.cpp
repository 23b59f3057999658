#include "sqrtnot/smatrix.hpp"

#include <cmath>
#include <stdexcept>

namespace sqrtnot {

namespace {

// cosh overflows just above |k| ~ 710; sech is 0 to double precision long
// before that.
double stable_sech(double kappa) {
  if (std::abs(kappa) > 700.0) return 0.0;
  return 1.0 / std::cosh(kappa);
}

// Radicands are nonnegative for every kappa; clamp away floating-point dust
// so sqrt never sees a tiny negative argument.
double guarded_sqrt(double radicand) {
  if (radicand < 0.0 && radicand >= -1e-15) radicand = 0.0;
  return std::sqrt(radicand);
}

}  // namespace

ScatteringMatrix::ScatteringMatrix(const std::array<Complex, 16>& entries)
    : entries_(entries) {
  for (const Complex& e : entries_) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
      throw std::invalid_argument("ScatteringMatrix: entries must be finite");
    }
  }
}

ScatteringMatrix ScatteringMatrix::identity() {
  std::array<Complex, 16> e{};
  for (int i = 0; i < 4; ++i) e[4 * i + i] = 1.0;
  return ScatteringMatrix(e);
}

ScatteringMatrix build_sqrt_not(double kappa) {
  if (!std::isfinite(kappa)) {
    throw std::invalid_argument("build_sqrt_not: kappa must be finite");
  }
  const double sech = stable_sech(kappa);
  const double tanh_k = std::tanh(kappa);
  const double r1 = guarded_sqrt(0.25 * (1.0 - sech));
  const double r2 = guarded_sqrt(0.5 * (1.0 - sech));
  const double t1 = guarded_sqrt(5.0 / 64.0 + 0.5 * (sech + 0.125) * (tanh_k + 0.75));
  const double t2 = guarded_sqrt(5.0 / 64.0 + 0.5 * (sech + 0.125) * (-tanh_k + 0.75));

  // Rows: outgoing lead A..D; columns: incoming lead A..D.
  const std::array<Complex, 16> entries = {{
      r1, -r2, t2, -t1,   // A
      -r2, -r1, t1, t2,   // B
      t2, -t1, -r1, r2,   // C
      t1, -t2, r2, r1,    // D
  }};
  return ScatteringMatrix(entries);
}

double unitarity_deviation(const ScatteringMatrix& s) {
  double dev = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < 4; ++k) {
        acc += std::conj(s.at(k, i)) * s.at(k, j);  // (S^dag S)_{ij}
      }
      if (i == j) acc -= 1.0;
      dev = std::max(dev, std::abs(acc));
    }
  }
  return dev;
}

NormDiagnostics norm_diagnostics(const ScatteringMatrix& s) {
  double row_err = 0.0;
  double col_err = 0.0;
  for (int i = 0; i < 4; ++i) {
    double row = 0.0;
    double col = 0.0;
    for (int j = 0; j < 4; ++j) {
      row += std::norm(s.at(i, j));
      col += std::norm(s.at(j, i));
    }
    row_err = std::max(row_err, std::abs(row - 1.0));
    col_err = std::max(col_err, std::abs(col - 1.0));
  }
  return {row_err, col_err};
}

}  // namespace sqrtnot
