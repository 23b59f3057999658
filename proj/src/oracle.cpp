#include "sqrtnot/oracle.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace sqrtnot {

namespace {

// 53-bit uniform in [0, 1); mt19937_64 output is fully specified by the
// standard, so this stream is identical on every conforming platform.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

McEstimate mc_partition_noise(const PartitionTrial& trial) {
  const double t = trial.transmission_probability;
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::invalid_argument("mc_partition_noise: transmission probability must be in [0, 1]");
  }
  if (trial.electron_count < 1) {
    throw std::invalid_argument("mc_partition_noise: at least one electron required");
  }
  std::mt19937_64 rng(trial.seed);
  std::uint64_t transmitted = 0;
  for (std::uint64_t i = 0; i < trial.electron_count; ++i) {
    transmitted += uniform01(rng) < t ? 1 : 0;
  }
  const double n = static_cast<double>(trial.electron_count);
  if (trial.electron_count == 1) return {0.0, 0.0};
  const double k = static_cast<double>(transmitted);
  const double p = k / n;
  const double q = 1.0 - p;
  // Unbiased sample variance of an indicator, in closed form.
  const double variance = k * (n - k) / (n * (n - 1.0));
  // Var(s^2) = mu4/n - sigma^4 (n-3)/(n(n-1)), with the moments plugged in
  // from the sample. The exact finite-n form matters: for p = 1/2 the leading
  // mu4 - sigma^4 term vanishes.
  const double m2 = p * q;
  const double m4 = p * q * (q * q * q + p * p * p);
  double var_s2 = m4 / n - m2 * m2 * (n - 3.0) / (n * (n - 1.0));
  if (var_s2 < 0.0) var_s2 = 0.0;
  return {variance, std::sqrt(var_s2)};
}

CrossCovarianceEstimate mc_cross_covariance(const std::array<double, 4>& probabilities,
                                            std::uint64_t electron_count,
                                            std::uint64_t seed, Lead lead_a,
                                            Lead lead_b) {
  double total = 0.0;
  for (double p : probabilities) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("mc_cross_covariance: probabilities must be in [0, 1]");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("mc_cross_covariance: probabilities must sum to 1");
  }
  if (lead_a == lead_b) {
    throw std::invalid_argument("mc_cross_covariance: leads must differ");
  }
  if (electron_count < 2) {
    throw std::invalid_argument("mc_cross_covariance: at least two electrons required");
  }

  std::mt19937_64 rng(seed);
  std::array<std::uint64_t, 4> counts{};
  for (std::uint64_t i = 0; i < electron_count; ++i) {
    const double u = uniform01(rng);
    double cum = 0.0;
    int chosen = 3;
    for (int lead = 0; lead < 4; ++lead) {
      cum += probabilities[static_cast<std::size_t>(lead)];
      if (u < cum) {
        chosen = lead;
        break;
      }
    }
    ++counts[static_cast<std::size_t>(chosen)];
  }

  const double n = static_cast<double>(electron_count);
  const double pa = static_cast<double>(counts[static_cast<std::size_t>(index_of(lead_a))]) / n;
  const double pb = static_cast<double>(counts[static_cast<std::size_t>(index_of(lead_b))]) / n;
  // The exit indicators are mutually exclusive, so I_a I_b = 0 for every
  // electron and the unbiased sample covariance reduces to -n/(n-1) pa pb.
  const double covariance = -(n / (n - 1.0)) * pa * pb;
  // Plug-in asymptotic variance of the sample covariance: (m22 - cov^2)/n.
  const double qa = 1.0 - pa;
  const double qb = 1.0 - pb;
  const double na = static_cast<double>(counts[static_cast<std::size_t>(index_of(lead_a))]);
  const double nb = static_cast<double>(counts[static_cast<std::size_t>(index_of(lead_b))]);
  const double m22 = (na * qa * qa * pb * pb + nb * pa * pa * qb * qb +
                      (n - na - nb) * pa * pa * pb * pb) / n;
  double var_cov = (m22 - pa * pa * pb * pb) / n;
  if (var_cov < 0.0) var_cov = 0.0;
  return {covariance, std::sqrt(var_cov)};
}

double ScanTable::kappa_at(std::size_t i) const {
  const double n1 = static_cast<double>(values.size() - 1);
  const double fi = static_cast<double>(i);
  return (lo * (n1 - fi) + hi * fi) / n1;
}

ScanTable brute_scan(const Curve& curve, double lo, double hi, std::size_t points) {
  if (!(lo < hi)) throw std::invalid_argument("brute_scan: range must satisfy lo < hi");
  if (points < 2) throw std::invalid_argument("brute_scan: at least 2 points required");
  ScanTable table;
  table.lo = lo;
  table.hi = hi;
  table.values.resize(points);
  for (std::size_t i = 0; i < points; ++i) {
    table.values[i] = curve(table.kappa_at(i));
  }
  return table;
}

int count_sign_changes(const ScanTable& table, double target) {
  int count = 0;
  int last_sign = 0;
  bool prev_zero = false;
  for (double v : table.values) {
    const double d = v - target;
    if (d == 0.0) {
      if (!prev_zero) ++count;  // a run touching the target counts once
      prev_zero = true;
      continue;
    }
    const int sign = d > 0.0 ? 1 : -1;
    if (!prev_zero && last_sign != 0 && sign != last_sign) ++count;
    last_sign = sign;
    prev_zero = false;
  }
  return count;
}

namespace {

int count_extrema(const ScanTable& table, bool maxima) {
  const auto& v = table.values;
  const int n = static_cast<int>(v.size());
  int count = 0;
  int i = 1;
  while (i + 1 < n) {
    int j = i;
    while (j + 1 < n - 1 && v[static_cast<std::size_t>(j + 1)] == v[static_cast<std::size_t>(i)]) ++j;
    const double mid = v[static_cast<std::size_t>(i)];
    const double left = v[static_cast<std::size_t>(i - 1)];
    const double right = v[static_cast<std::size_t>(j + 1)];
    if (maxima ? (left < mid && right < mid) : (left > mid && right > mid)) ++count;
    i = j + 1;
  }
  return count;
}

}  // namespace

int count_local_maxima(const ScanTable& table) { return count_extrema(table, true); }
int count_local_minima(const ScanTable& table) { return count_extrema(table, false); }

}  // namespace sqrtnot
