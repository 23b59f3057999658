#include "sqrtnot/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace sqrtnot {

namespace {

constexpr double kBracketTol = 1e-10;
constexpr double kTangentValueTol = 1e-9;

// Endpoint-exact linear grid; symmetric ranges hit the midpoint exactly.
double grid_point(double lo, double hi, int i, int points) {
  const double n1 = static_cast<double>(points - 1);
  return (lo * (n1 - i) + hi * i) / n1;
}

void check_range(double lo, double hi, int scan_points) {
  if (!(lo < hi)) {
    throw std::invalid_argument("scan range must satisfy lo < hi");
  }
  if (scan_points < 16) {
    throw std::invalid_argument("scan_points must be at least 16");
  }
}

std::pair<double, double> bisect_root(const Curve& f, double target, double lo,
                                      double hi, double flo) {
  // flo = f(lo) - target, opposite in sign to f(hi) - target.
  for (int iter = 0; iter < 200 && hi - lo > kBracketTol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid) - target;
    if (fmid == 0.0) return {mid, mid};
    if ((flo < 0.0) == (fmid < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

std::pair<double, double> golden_minimize(const Curve& f, double a, double b) {
  const double inv_phi = 2.0 / (1.0 + std::sqrt(5.0));
  for (int iter = 0; iter < 400 && b - a > kBracketTol; ++iter) {
    const double c = b - (b - a) * inv_phi;
    const double d = a + (b - a) * inv_phi;
    const double fc = f(c);
    const double fd = f(d);
    if (fc < fd) {
      b = d;
    } else if (fd < fc) {
      a = c;
    } else {
      a = c;  // exact tie: the minimum lies in [c, d]
      b = d;
    }
  }
  return {a, b};
}

// One parabolic-interpolation step. Near a smooth extremum the function is
// flat to machine precision over a width ~sqrt(eps), which limits what a
// comparison-based search can resolve; fitting through points a finite step
// away recovers the vertex to ~1e-11.
double polish_extremum(const Curve& f, double x, double lo, double hi, bool maximum) {
  double h = 1e-5 * std::max(1.0, std::abs(x));
  h = std::min({h, x - lo, hi - x});
  if (!(h > 0.0)) return x;
  const double fm = f(x - h);
  const double f0 = f(x);
  const double fp = f(x + h);
  const double denom = fm - 2.0 * f0 + fp;
  if (maximum ? !(denom < 0.0) : !(denom > 0.0)) return x;
  const double step = 0.5 * h * (fm - fp) / denom;
  if (!(std::abs(step) <= h)) return x;
  return x + step;
}

}  // namespace

SweepRecord evaluate_gate(double kappa, Lead input) {
  const ScatteringMatrix s = build_sqrt_not(kappa);
  SweepRecord rec;
  rec.kappa = kappa;
  rec.probabilities = output_probabilities(s, input);
  rec.fidelity = fidelity(output_state(s, input), perfect_superposition_target());
  rec.s_dd = shot_noise_auto(s, Lead::D, input).prefactor_units;
  rec.s_cd = shot_noise_cross(s, Lead::C, Lead::D, input).prefactor_units;
  rec.unitarity_dev = unitarity_deviation(s);
  const NormDiagnostics nd = norm_diagnostics(s);
  rec.norm_error = std::max(nd.row_error, nd.col_error);
  return rec;
}

std::vector<SweepRecord> sweep_kappa(double kappa_min, double kappa_max,
                                     int points, Lead input) {
  if (!(kappa_min < kappa_max)) {
    throw std::invalid_argument("sweep_kappa: range must satisfy kappa_min < kappa_max");
  }
  if (points < 2) {
    throw std::invalid_argument("sweep_kappa: at least 2 grid points required");
  }
  std::vector<SweepRecord> records;
  records.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    records.push_back(evaluate_gate(grid_point(kappa_min, kappa_max, i, points), input));
  }
  return records;
}

std::vector<ExtremumReport> find_roots(const Curve& curve, double target,
                                       double lo, double hi, int scan_points,
                                       std::string curve_label) {
  check_range(lo, hi, scan_points);
  std::vector<double> x(scan_points);
  std::vector<double> f(scan_points);
  for (int i = 0; i < scan_points; ++i) {
    x[i] = grid_point(lo, hi, i, scan_points);
    f[i] = curve(x[i]) - target;
  }

  std::vector<ExtremumReport> reports;
  auto add_root = [&](double location, double blo, double bhi) {
    reports.push_back({location, curve(location), ExtremumKind::Root, curve_label,
                       blo, bhi});
  };

  // Exact touches at sample points; a run of zeros counts once.
  for (int i = 0; i < scan_points; ++i) {
    if (f[i] == 0.0 && (i == 0 || f[i - 1] != 0.0)) add_root(x[i], x[i], x[i]);
  }
  // Strict sign changes between consecutive nonzero samples.
  for (int i = 0; i + 1 < scan_points; ++i) {
    if (f[i] != 0.0 && f[i + 1] != 0.0 && (f[i] < 0.0) != (f[i + 1] < 0.0)) {
      const auto [blo, bhi] = bisect_root(curve, target, x[i], x[i + 1], f[i]);
      add_root(0.5 * (blo + bhi), blo, bhi);
    }
  }

  // Tangent touches never produce a sign change; look for interior minima of
  // |curve - target| that reach the target within tolerance.
  const double step = (hi - lo) / (scan_points - 1);
  for (int i = 1; i + 1 < scan_points; ++i) {
    const double g = std::abs(f[i]);
    if (g == 0.0 || g >= std::abs(f[i - 1]) || g >= std::abs(f[i + 1])) continue;
    const Curve residual = [&](double k) { return std::abs(curve(k) - target); };
    const auto [blo, bhi] = golden_minimize(residual, x[i - 1], x[i + 1]);
    const double loc = 0.5 * (blo + bhi);
    if (residual(loc) > kTangentValueTol) continue;
    const bool duplicate = std::any_of(reports.begin(), reports.end(), [&](const auto& r) {
      return std::abs(r.location - loc) <= step;
    });
    if (!duplicate) add_root(loc, blo, bhi);
  }

  std::sort(reports.begin(), reports.end(),
            [](const auto& a, const auto& b) { return a.location < b.location; });
  return reports;
}

std::vector<ExtremumReport> find_extrema(const Curve& curve, double lo,
                                         double hi, int scan_points,
                                         std::string curve_label) {
  check_range(lo, hi, scan_points);
  std::vector<double> x(scan_points);
  std::vector<double> f(scan_points);
  for (int i = 0; i < scan_points; ++i) {
    x[i] = grid_point(lo, hi, i, scan_points);
    f[i] = curve(x[i]);
  }

  std::vector<ExtremumReport> reports;
  int i = 1;
  while (i + 1 < scan_points) {
    int j = i;
    while (j + 1 < scan_points - 1 && f[j + 1] == f[i]) ++j;
    const bool is_max = f[i - 1] < f[i] && f[j + 1] < f[i];
    const bool is_min = f[i - 1] > f[i] && f[j + 1] > f[i];
    if (is_max || is_min) {
      const ExtremumKind kind = is_max ? ExtremumKind::Maximum : ExtremumKind::Minimum;
      if (j > i) {
        // Plateau: smallest kappa wins, no refinement possible.
        reports.push_back({x[i], f[i], kind, curve_label, x[i], x[i]});
      } else {
        const Curve objective = is_max ? Curve([&](double k) { return -curve(k); })
                                       : curve;
        const auto [blo, bhi] = golden_minimize(objective, x[i - 1], x[i + 1]);
        double loc = 0.5 * (blo + bhi);
        loc = polish_extremum(curve, loc, lo, hi, is_max);
        reports.push_back({loc, curve(loc), kind, curve_label, loc - 0.5 * kBracketTol,
                           loc + 0.5 * kBracketTol});
      }
    }
    i = j + 1;
  }
  return reports;
}

}  // namespace sqrtnot
