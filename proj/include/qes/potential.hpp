#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <optional>

namespace qes {

/// Closed real interval; infinite ends use +/- infinity.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double x) const { return x >= lo && x <= hi; }
  bool bounded() const { return std::isfinite(lo) && std::isfinite(hi); }
};

/// V(x) in units with hbar = 2m = 1.
struct PotentialModel {
  std::function<double(double)> value;
  Interval domain;
  std::optional<double> period;
  /// Constant folded into V by the energy convention used to build it.
  double additive_constant = 0.0;

  double operator()(double x) const { return value(x); }
};

}  // namespace qes
