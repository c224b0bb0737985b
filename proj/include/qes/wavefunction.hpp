#pragma once

#include <functional>
#include <vector>

#include "qes/algebra.hpp"
#include "qes/mapping.hpp"

namespace qes {

/// Non-polynomial factor g(x) of psi = g(x) chi(xi(u(x))), normalized so that
/// g(x0) = 1.
struct GaugeFactor {
  std::function<double(double)> evaluate;
  double x0 = 0.0;

  double operator()(double x) const { return evaluate(x); }
};

/// g(x) = (u'(x)/u'(x0))^{-1/2} exp[ (1/2) int_{u(x0)}^{u(x)} (2B3 - B4')/(2 sqrt B4) du ],
/// the square root carrying the mapping's sign. Throws SingularPointError
/// when the path meets a zero of B4.
double gauge_factor(const BPolynomials& b, const Mapping& mapping, double x0, double x);

GaugeFactor numeric_gauge(const BPolynomials& b, const Mapping& mapping, double x0);

/// Closed-form multiplier some families put in front of the gauge exponential.
class Prefactor {
 public:
  enum class Kind {
    none,
    half_angle,         ///< sin(k pi/2 + beta (x-a)/2), k = 1 for the upper branch
    full_angle,         ///< sin(beta (x-a))
    hyperbolic_half,    ///< sinh(gamma (x-a)) upper branch, cosh(gamma (x-a)) lower
    hyperbolic_double,  ///< sinh(2 gamma (x-a))
  };

  static Prefactor none() { return {}; }
  static Prefactor half_angle(double beta, double a, bool upper) { return {Kind::half_angle, beta, a, upper}; }
  static Prefactor full_angle(double beta, double a) { return {Kind::full_angle, beta, a, false}; }
  static Prefactor hyperbolic_half(double gamma, double a, bool upper) {
    return {Kind::hyperbolic_half, gamma, a, upper};
  }
  static Prefactor hyperbolic_double(double gamma, double a) { return {Kind::hyperbolic_double, gamma, a, false}; }

  Kind kind() const { return kind_; }
  bool upper() const { return upper_; }
  double operator()(double x) const;

 private:
  Prefactor() = default;
  Prefactor(Kind kind, double rate, double offset, bool upper)
      : kind_(kind), rate_(rate), offset_(offset), upper_(upper) {}
  Kind kind_ = Kind::none;
  double rate_ = 0.0;
  double offset_ = 0.0;
  bool upper_ = false;
};

/// psi(x) = prefactor(x) * g(x) * sum_r b^(r) xi(u(x))^r.
struct WaveFunction {
  GaugeFactor gauge;
  std::vector<double> coefficients;
  Mapping mapping;
  Prefactor prefactor;

  double chi(double xi) const;
  double operator()(double x) const;
};

WaveFunction assemble_wavefunction(GaugeFactor gauge, std::vector<double> coefficients, Mapping mapping,
                                   Prefactor prefactor = Prefactor::none());

}  // namespace qes
