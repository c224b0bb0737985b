#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "qes/algebra.hpp"
#include "qes/polynomial.hpp"
#include "qes/potential.hpp"

namespace qes {

/// The x -> u change of variable: u = x - a, or u = 2 sqrt(x) on x > 0.
class CoordinateChange {
 public:
  enum class Kind { shift, two_sqrt };

  static CoordinateChange shift(double offset) { return CoordinateChange(Kind::shift, offset); }
  static CoordinateChange two_sqrt() { return CoordinateChange(Kind::two_sqrt, 0.0); }

  Kind kind() const { return kind_; }
  double offset() const { return offset_; }

  double u(double x) const;
  double x(double u) const;
  /// du/dx, d2u/dx2, d3u/dx3.
  double d1(double x) const;
  double d2(double x) const;
  double d3(double x) const;
  Interval x_domain() const;

 private:
  CoordinateChange(Kind kind, double offset) : kind_(kind), offset_(offset) {}
  Kind kind_;
  double offset_;
};

/// Interval of xi on which B4 > 0 and the sign s in dxi/du = s sqrt(B4).
struct Branch {
  RationalInterval xi;
  int root_sign = 0;  ///< 0 picks the shape's natural sign
};

enum class MappingShape {
  linear,       ///< B4 = c:            xi = sqrt(c) u
  exponential,  ///< B4 = c xi^2:       xi = +/- exp(sqrt(c) u)
  cosh,         ///< B4 = c(xi^2 - s^2): xi = +/- s cosh(sqrt(c) u)
  sinh,         ///< B4 = c(xi^2 + s^2): xi = s sinh(sqrt(c) u)
  quadratic,    ///< B4 = c xi:         xi = c u^2 / 4, u >= 0
  cosine,       ///< B4 = c(s^2 - xi^2): xi = s cos(sqrt(c) u)
  numeric,      ///< anything else: tabulated integral, inverted by root finding
};

const char* to_string(MappingShape shape);

namespace detail {
struct NumericMap;
}

/// The chain xi(u(x)). Integration constants are pinned by xi(u = 0): 0 for
/// the linear, sinh and quadratic shapes, +/-1 for exponential, +/-s for cosh,
/// s for cosine, and the reference point for numeric maps.
class Mapping {
 public:
  MappingShape shape() const { return shape_; }
  const Branch& branch() const { return branch_; }
  const CoordinateChange& coordinate() const { return coordinate_; }
  /// Sign of dxi/du relative to sqrt(B4) on principal_u_range().
  int root_sign() const { return sign_; }

  double xi_of_u(double u) const;
  double dxi_du(double u) const;
  double u_of_x(double x) const { return coordinate_.u(x); }
  double xi_of_x(double x) const { return xi_of_u(coordinate_.u(x)); }

  /// Range of u on which xi_of_u is defined.
  Interval u_domain() const;
  /// Range of u on which xi stays inside the branch with the recorded sign.
  Interval principal_u_range() const;
  Interval x_domain() const;

  /// True when B4(xi(u)) vanishes somewhere on the closed u-path.
  bool path_hits_b4_zero(double u0, double u1) const;

 private:
  friend Mapping build_mapping(const BPolynomials&, const Branch&, const CoordinateChange&, std::optional<double>);
  Mapping(MappingShape shape, Branch branch, CoordinateChange coordinate)
      : shape_(shape), branch_(std::move(branch)), coordinate_(coordinate) {}

  MappingShape shape_;
  Branch branch_;
  CoordinateChange coordinate_;
  int sign_ = +1;
  double rate_ = 1.0;   // sqrt(c)
  double scale_ = 1.0;  // s, or the sign of xi for exponential
  double c_ = 1.0;      // quadratic coefficient
  std::shared_ptr<const detail::NumericMap> numeric_;
};

/// Builds the xi <-> u <-> x chain. B4 must be positive on the open branch
/// interval (checked exactly), otherwise BranchError. xi_reference pins
/// xi(u = 0) for numeric maps.
Mapping build_mapping(const BPolynomials& b, const Branch& branch, const CoordinateChange& coordinate,
                      std::optional<double> xi_reference = std::nullopt);

/// Maximal open intervals where B4 > 0, ascending.
std::vector<RationalInterval> positive_intervals(const Polynomial& b4);

/// Default branch: the positive interval containing 0, else the first one.
/// Throws BranchError when B4 <= 0 everywhere.
Branch default_branch(const Polynomial& b4);

}  // namespace qes
