#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qes/rational.hpp"

namespace qes {

/// Univariate polynomial in xi with exact rational coefficients.
///
/// coefficient(r) multiplies xi^r. Trailing zeros are always trimmed, so the
/// zero polynomial has no stored coefficients and degree() == -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(int power, const Rational& c = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(int power) const;
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Polynomial derivative(int order = 1) const;
  Rational operator()(const Rational& xi) const;
  double evaluate(double xi) const;
  /// Coefficients rounded to double, lowest power first.
  std::vector<double> to_doubles() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scale);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string(std::string_view var = "xi") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of a / b over Q. Throws on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// p / gcd(p, p'), made monic.
Polynomial square_free_part(const Polynomial& p);

/// Real interval, either end may be unbounded.
struct RationalInterval {
  std::optional<Rational> lo;  ///< nullopt = -infinity
  std::optional<Rational> hi;  ///< nullopt = +infinity
};

/// Number of distinct real roots in the open interval, counted exactly with
/// a Sturm sequence.
int count_real_roots(const Polynomial& p, const RationalInterval& open_interval);

/// Distinct real roots, ascending. A root is flagged exact when a rational
/// value was found that annihilates p; otherwise value is accurate to about
/// 1e-15 relative.
struct RealRoot {
  double value;
  bool exact;
  Rational exact_value;
};
std::vector<RealRoot> real_roots(const Polynomial& p);

}  // namespace qes
