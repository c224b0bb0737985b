#pragma once

#include <vector>

#include "qes/algebra.hpp"
#include "qes/mapping.hpp"
#include "qes/potential.hpp"

namespace qes {

/// Potential generated by the B-polynomials through the coordinate chain:
///
///   V(x) = E - u'''/(2u') + (3/4)(u''/u')^2
///          - u'^2 { B2 - (2B3' - B4'')/4 - (2B3 - B4')(2B3 - 3B4')/(16 B4) }
///
/// with primes on u meaning d/dx and on B meaning d/dxi, evaluated at
/// xi(u(x)). The rational part is reduced exactly over Q first, so only zeros
/// of B4 that survive the reduction are singular.
class MasterEquation {
 public:
  explicit MasterEquation(const BPolynomials& b);

  /// The braced expression at xi, with B2 = B2_base + d.
  double bracket(double xi, double d) const;
  double potential(const Mapping& mapping, double d, double energy, double x) const;

  /// Denominator left after cancelling common factors with B4 (monic).
  const Polynomial& reduced_denominator() const { return denominator_; }

 private:
  std::vector<double> polynomial_part_;
  std::vector<double> remainder_;
  std::vector<double> denominator_d_;
  Polynomial denominator_;
};

/// One-shot evaluation; throws SingularPointError at surviving B4 zeros.
double evaluate_potential(const BPolynomials& b, double d, const Mapping& mapping, double energy, double x);

/// V(x) as a PotentialModel over the mapping's x-domain.
PotentialModel master_potential(const BPolynomials& b, double d, const Mapping& mapping, double energy);

}  // namespace qes
