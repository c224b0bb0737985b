#include "qes/master_equation.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

#include "qes/errors.hpp"

namespace qes {

namespace {

double horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double magnitude_bound(const std::vector<double>& c, double x) {
  double acc = 0.0;
  const double ax = std::abs(x);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * ax + std::abs(*it);
  return acc;
}

}  // namespace

MasterEquation::MasterEquation(const BPolynomials& b) {
  const Polynomial db4 = b.b4.derivative();
  const Polynomial two_b3 = Rational(2) * b.b3;
  const Polynomial numerator = (two_b3 - db4) * (two_b3 - Rational(3) * db4);
  const Polynomial common = gcd(numerator, b.b4);
  const Polynomial reduced_num = divmod(numerator, common).first;
  denominator_ = divmod(b.b4, common).first;
  auto [quotient, remainder] = divmod(reduced_num, denominator_);

  const Polynomial poly = b.b2_base - Rational(1, 4) * (Rational(2) * b.b3.derivative() - b.b4.derivative(2)) -
                          Rational(1, 16) * quotient;
  polynomial_part_ = poly.to_doubles();
  remainder_ = (Rational(1, 16) * remainder).to_doubles();
  denominator_d_ = denominator_.to_doubles();
}

double MasterEquation::bracket(double xi, double d) const {
  double value = horner(polynomial_part_, xi) + d;
  if (remainder_.empty()) return value;
  const double den = horner(denominator_d_, xi);
  const double tiny = 8.0 * std::numeric_limits<double>::epsilon() * magnitude_bound(denominator_d_, xi);
  if (std::abs(den) <= tiny) {
    std::ostringstream os;
    os << "B4 vanishes at xi = " << xi << " and the singularity is not removable";
    throw SingularPointError(os.str());
  }
  return value - horner(remainder_, xi) / den;
}

double MasterEquation::potential(const Mapping& mapping, double d, double energy, double x) const {
  const CoordinateChange& cc = mapping.coordinate();
  const double u1 = cc.d1(x);
  const double u2 = cc.d2(x);
  const double u3 = cc.d3(x);
  const double xi = mapping.xi_of_x(x);
  return energy - u3 / (2.0 * u1) + 0.75 * (u2 / u1) * (u2 / u1) - u1 * u1 * bracket(xi, d);
}

double evaluate_potential(const BPolynomials& b, double d, const Mapping& mapping, double energy, double x) {
  return MasterEquation(b).potential(mapping, d, energy, x);
}

PotentialModel master_potential(const BPolynomials& b, double d, const Mapping& mapping, double energy) {
  auto eq = std::make_shared<const MasterEquation>(b);
  PotentialModel model;
  model.value = [eq, mapping, d, energy](double x) { return eq->potential(mapping, d, energy, x); };
  model.domain = mapping.x_domain();
  model.additive_constant = energy;
  return model;
}

}  // namespace qes
