#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sqrtnot/transport.hpp"

namespace sqrtnot {

/// One row of a kappa sweep: the plotted quantities plus diagnostics.
struct SweepRecord {
  double kappa;
  std::array<double, 4> probabilities;  // P_A..P_D for the chosen input
  double fidelity;
  double s_dd;           // auto noise in lead D, prefactor units
  double s_cd;           // cross noise across C and D, prefactor units
  double unitarity_dev;
  double norm_error;     // max of row/column norm errors
};

/// Evaluate all sweep quantities at a single kappa.
SweepRecord evaluate_gate(double kappa, Lead input = Lead::A);

/// Uniform grid over [kappa_min, kappa_max] inclusive of both endpoints;
/// symmetric ranges hit kappa = 0 exactly. Records are ordered ascending in
/// kappa. Throws std::invalid_argument for a degenerate range or points < 2.
std::vector<SweepRecord> sweep_kappa(double kappa_min, double kappa_max,
                                     int points, Lead input = Lead::A);

enum class ExtremumKind { Maximum, Minimum, Root };

struct ExtremumReport {
  double location;
  double value;
  ExtremumKind kind;
  std::string curve;     // label of the swept quantity, as given by the caller
  double bracket_lo;     // refined bracket containing `location`, width <= 1e-10
  double bracket_hi;
};

using Curve = std::function<double(double)>;

/// Locate solutions of curve(kappa) = target on [lo, hi]: dense scan for sign
/// changes followed by bisection. Tangent (non-crossing) touches are caught by
/// a |curve - target| minimization fallback with value tolerance 1e-9.
/// Returns an empty list when no root exists. scan_points must be >= 16.
std::vector<ExtremumReport> find_roots(const Curve& curve, double target,
                                       double lo, double hi, int scan_points,
                                       std::string curve_label = {});

/// Locate interior local maxima and minima on [lo, hi]: dense scan, then
/// golden-section refinement and a parabolic polish. Endpoints are excluded;
/// plateau ties resolve to the smallest kappa. scan_points must be >= 16.
std::vector<ExtremumReport> find_extrema(const Curve& curve, double lo,
                                         double hi, int scan_points,
                                         std::string curve_label = {});

}  // namespace sqrtnot
