#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sqrtnot/sweep.hpp"

namespace sqrtnot {

/// One Monte-Carlo partition-noise run: `electron_count` independent
/// electrons, each transmitted with probability `transmission_probability`.
struct PartitionTrial {
  double transmission_probability = 0.5;
  std::uint64_t electron_count = 1;
  std::uint64_t seed = 0;
};

struct McEstimate {
  double variance;        // sample variance of the transmission indicator
  double standard_error;  // plug-in standard error of that estimate
};

/// Samples the transmission indicator N times and returns the unbiased sample
/// variance (expectation T(1-T)) with its standard error from the sample
/// moments. Uses std::mt19937_64, so a fixed seed reproduces bit-identical
/// results on any conforming platform.
McEstimate mc_partition_noise(const PartitionTrial& trial);

struct CrossCovarianceEstimate {
  double covariance;      // unbiased sample covariance of the two exit indicators
  double standard_error;
};

/// Multinomial check of the cross-lead correlation structure: each electron
/// exits one of the four leads according to `probabilities`; returns the
/// sample covariance of the (lead_a, lead_b) exit indicators. Expectation is
/// -P_a P_b. Checks correlation structure only, not the signed cross-noise
/// formula.
CrossCovarianceEstimate mc_cross_covariance(const std::array<double, 4>& probabilities,
                                            std::uint64_t electron_count,
                                            std::uint64_t seed,
                                            Lead lead_a = Lead::C,
                                            Lead lead_b = Lead::D);

/// Dense tabulation of a curve, used to count features independently of the
/// refined search in find_roots/find_extrema.
struct ScanTable {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> values;

  double kappa_at(std::size_t i) const;
};

ScanTable brute_scan(const Curve& curve, double lo, double hi, std::size_t points);

/// Number of times the sampled curve crosses or touches `target`. A run of
/// consecutive samples equal to the target counts once.
int count_sign_changes(const ScanTable& table, double target);

int count_local_maxima(const ScanTable& table);
int count_local_minima(const ScanTable& table);

}  // namespace sqrtnot
