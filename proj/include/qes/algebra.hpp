#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "qes/polynomial.hpp"
#include "qes/rational.hpp"

namespace qes {

/// Spin index n of the representation: P_n has dimension n + 1.
class SpinIndex {
 public:
  constexpr SpinIndex() = default;
  explicit SpinIndex(int n);
  constexpr int value() const { return n_; }
  constexpr int dimension() const { return n_ + 1; }
  friend constexpr bool operator==(SpinIndex, SpinIndex) = default;

 private:
  int n_ = 0;
};

enum class Generator { plus, minus, zero };

/// Hamiltonian data H = -sum C_ab T^a T^b - sum C_a T^a - d.
///
/// C_ab is symmetric; the C_{+-} entry is not part of the model. An empty d
/// means "free": the matrix is assembled with d = 0 and the spectral solver
/// reports the admissible values of d.
struct AlgebraCoefficients {
  Rational c_pp, c_p0, c_00, c_0m, c_mm;
  Rational c_p, c_0, c_m;
  std::optional<Rational> d;
  SpinIndex n;

  bool d_is_free() const { return !d.has_value(); }
  /// Throws ParameterError when every quadratic coefficient vanishes.
  void validate() const;

  /// Component-wise sum; both operands must share n. Free + free stays free,
  /// a free d counts as zero otherwise.
  friend AlgebraCoefficients operator+(const AlgebraCoefficients& a, const AlgebraCoefficients& b);
  friend bool operator==(const AlgebraCoefficients&, const AlgebraCoefficients&) = default;
};

struct BPolynomials {
  Polynomial b4;       ///< degree <= 4
  Polynomial b3;       ///< degree <= 3
  Polynomial b2_base;  ///< degree <= 2, constant d excluded
  Polynomial a2;       ///< C_+ xi^2 + C_0 xi + C_-

  Polynomial b2(const Rational& d) const { return b2_base + Polynomial::constant(d); }
  friend bool operator==(const BPolynomials&, const BPolynomials&) = default;
};

/// Dense square matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  explicit RationalMatrix(int size) : size_(size), data_(static_cast<std::size_t>(size * size)) {}
  int size() const { return size_; }
  Rational& operator()(int row, int col) { return data_[static_cast<std::size_t>(row * size_ + col)]; }
  const Rational& operator()(int row, int col) const { return data_[static_cast<std::size_t>(row * size_ + col)]; }
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  int size_;
  std::vector<Rational> data_;
};

/// T^g p on P_n. Throws RepresentationError when deg(p) > n.
Polynomial apply_generator(Generator g, const Polynomial& p, SpinIndex n);

/// (T^{g1} T^{g2} - T^{g2} T^{g1}) p.
Polynomial commutator(Generator g1, Generator g2, const Polynomial& p, SpinIndex n);

BPolynomials b_polynomials(const AlgebraCoefficients& c);

/// Matrix of H on the ascending monomial basis {1, xi, ..., xi^n}; column r is
/// the image of xi^r. Built by composing generator actions; a free d counts as 0.
RationalMatrix hamiltonian_matrix(const AlgebraCoefficients& c);

/// Same matrix from -(B4 D^2 + B3 D + B2) with the B-polynomials.
RationalMatrix differential_operator_matrix(const BPolynomials& b, const Rational& d, SpinIndex n);

void to_json(nlohmann::ordered_json& j, const AlgebraCoefficients& c);
void from_json(const nlohmann::ordered_json& j, AlgebraCoefficients& c);
AlgebraCoefficients algebra_from_json(const nlohmann::ordered_json& j);

}  // namespace qes
