#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "sqrtnot/sweep.hpp"

namespace sqrtnot {

inline constexpr std::string_view kSweepCsvHeader =
    "kappa,P_A,P_B,P_C,P_D,F,S_DD,S_CD,unitarity_dev,norm_error";

/// Fixed-decimal rendering, e.g. format_fixed(0.25, 12) == "0.250000000000".
std::string format_fixed(double value, int precision);

/// CSV with the exact header above, one row per record, LF line endings,
/// no trailing delimiter.
void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records,
                     int precision = 12);
void write_sweep_csv(const std::string& path, std::span<const SweepRecord> records,
                     int precision = 12);

/// Minimal self-contained SVG: one polyline for y(x) with labeled axes.
void write_curve_svg(const std::string& path, std::span<const double> x,
                     std::span<const double> y, std::string_view x_label,
                     std::string_view y_label);

}  // namespace sqrtnot
