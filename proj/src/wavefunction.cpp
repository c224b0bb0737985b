#include "qes/wavefunction.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qes/errors.hpp"
#include "qes/quadrature.hpp"

namespace qes {

double gauge_factor(const BPolynomials& b, const Mapping& mapping, double x0, double x) {
  const CoordinateChange& cc = mapping.coordinate();
  const double u0 = cc.u(x0);
  const double u1 = cc.u(x);
  if (mapping.path_hits_b4_zero(u0, u1)) {
    std::ostringstream os;
    os << "gauge integrand is singular: B4 vanishes between x0 = " << x0 << " and x = " << x;
    throw SingularPointError(os.str());
  }
  const std::vector<double> num = (Rational(2) * b.b3 - b.b4.derivative()).to_doubles();
  const std::vector<double> den = (Rational(2) * b.b4).to_doubles();
  auto ratio = [&](double xi) {
    double n = 0.0, d = 0.0;
    for (auto it = num.rbegin(); it != num.rend(); ++it) n = n * xi + *it;
    for (auto it = den.rbegin(); it != den.rend(); ++it) d = d * xi + *it;
    return n / d;
  };

  double exponent;
  if (mapping.shape() == MappingShape::numeric) {
    // xi(u) is monotone on a numeric branch, so integrate in xi directly
    exponent = integrate(ratio, mapping.xi_of_u(u0), mapping.xi_of_u(u1), 1e-12);
  } else {
    // (2B3 - B4')/(2 sqrt B4) du with the signed root equals ratio(xi) dxi/du du
    exponent = integrate([&](double u) { return ratio(mapping.xi_of_u(u)) * mapping.dxi_du(u); }, u0, u1, 1e-12);
  }
  return std::sqrt(cc.d1(x0) / cc.d1(x)) * std::exp(0.5 * exponent);
}

GaugeFactor numeric_gauge(const BPolynomials& b, const Mapping& mapping, double x0) {
  return GaugeFactor{[b, mapping, x0](double x) { return gauge_factor(b, mapping, x0, x); }, x0};
}

double Prefactor::operator()(double x) const {
  const double y = x - offset_;
  switch (kind_) {
    case Kind::none: return 1.0;
    case Kind::half_angle: return std::sin((upper_ ? 0.5 * std::numbers::pi : 0.0) + 0.5 * rate_ * y);
    case Kind::full_angle: return std::sin(rate_ * y);
    case Kind::hyperbolic_half: return upper_ ? std::sinh(rate_ * y) : std::cosh(rate_ * y);
    case Kind::hyperbolic_double: return std::sinh(2.0 * rate_ * y);
  }
  return 1.0;
}

double WaveFunction::chi(double xi) const {
  double acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * xi + *it;
  return acc;
}

double WaveFunction::operator()(double x) const { return prefactor(x) * gauge(x) * chi(mapping.xi_of_x(x)); }

WaveFunction assemble_wavefunction(GaugeFactor gauge, std::vector<double> coefficients, Mapping mapping,
                                   Prefactor prefactor) {
  return WaveFunction{std::move(gauge), std::move(coefficients), std::move(mapping), prefactor};
}

}  // namespace qes
