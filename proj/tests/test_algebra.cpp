#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "qes/algebra.hpp"
#include "qes/errors.hpp"

using namespace qes;
using oracle::Q;

namespace {

Polynomial xi_pow(int r) { return Polynomial::monomial(r); }

bool same_matrix(const RationalMatrix& a, const oracle::Mat& b) {
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (a(i, j) != b[i][j]) return false;
  return true;
}

}  // namespace

TEST_CASE("generator actions on monomials") {
  CHECK(apply_generator(Generator::minus, xi_pow(2), SpinIndex(3)) == Polynomial{0, 2});
  for (int n = 0; n <= 6; ++n) CHECK(apply_generator(Generator::plus, xi_pow(n), SpinIndex(n)).is_zero());
  CHECK(apply_generator(Generator::zero, xi_pow(1), SpinIndex(2)).is_zero());
  CHECK(apply_generator(Generator::zero, xi_pow(0), SpinIndex(3)) == Polynomial{Q(-3, 2)});
  CHECK(apply_generator(Generator::plus, xi_pow(1), SpinIndex(3)) == Polynomial::monomial(2, -2));
}

TEST_CASE("generators reject polynomials outside P_n") {
  CHECK_THROWS_AS(apply_generator(Generator::minus, xi_pow(4), SpinIndex(3)), RepresentationError);
  CHECK_THROWS_AS(commutator(Generator::plus, Generator::zero, xi_pow(2), SpinIndex(1)), RepresentationError);
  CHECK_THROWS_AS(SpinIndex(-1), ParameterError);
}

TEST_CASE("commutation relations hold exactly up to n = 12") {
  for (int n = 0; n <= 12; ++n) {
    const SpinIndex sn(n);
    for (int r = 0; r <= n; ++r) {
      const Polynomial p = xi_pow(r);
      const Polynomial t0 = apply_generator(Generator::zero, p, sn);
      const Polynomial tp = apply_generator(Generator::plus, p, sn);
      const Polynomial tm = apply_generator(Generator::minus, p, sn);
      CHECK(commutator(Generator::plus, Generator::minus, p, sn) == -(t0 * Q(2)));
      CHECK(commutator(Generator::zero, Generator::plus, p, sn) == tp);
      CHECK(commutator(Generator::zero, Generator::minus, p, sn) == -tm);
      CHECK(commutator(Generator::plus, Generator::plus, p, sn).is_zero());
      CHECK(commutator(Generator::minus, Generator::plus, p, sn) == t0 * Q(2));
    }
  }
}

TEST_CASE("commutators are linear on random polynomials") {
  oracle::RationalSource src(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = src.integer(0, 8);
    std::vector<Rational> coeffs(n + 1);
    for (auto& c : coeffs) c = src.next();
    const Polynomial p(coeffs);
    Polynomial expected;
    for (int r = 0; r <= n; ++r) expected += commutator(Generator::plus, Generator::minus, xi_pow(r), SpinIndex(n)) * coeffs[r];
    CHECK(commutator(Generator::plus, Generator::minus, p, SpinIndex(n)) == expected);
  }
}

TEST_CASE("b-polynomials of catalog-style data") {
  SUBCASE("harmonic, omega = 2, n = 3") {
    AlgebraCoefficients c;
    c.c_mm = 1;
    c.c_0 = -2;
    c.n = SpinIndex(3);
    const BPolynomials b = b_polynomials(c);
    CHECK(b.b4 == Polynomial{1});
    CHECK(b.b3 == Polynomial{0, -2});
    CHECK(b.b2_base == Polynomial{3});
    CHECK(b.b2(3) == Polynomial{6});
  }
  SUBCASE("periodic B4") {
    AlgebraCoefficients c;
    c.c_00 = -1;
    c.c_mm = 1;
    c.n = SpinIndex(2);
    CHECK(b_polynomials(c).b4 == Polynomial{1, 0, -1});
  }
  SUBCASE("free particle kernel") {
    for (int n = 0; n <= 5; ++n) {
      AlgebraCoefficients c;
      c.c_mm = 1;
      c.n = SpinIndex(n);
      const BPolynomials b = b_polynomials(c);
      CHECK(b.b4 == Polynomial{1});
      CHECK(b.b3.is_zero());
      CHECK(b.b2_base.is_zero());
    }
  }
}

TEST_CASE("hamiltonian matrix examples") {
  AlgebraCoefficients c;
  c.c_mm = 1;
  c.c_0 = -2;
  c.n = SpinIndex(1);
  const RationalMatrix m = hamiltonian_matrix(c);
  CHECK(m(0, 0) == -1);
  CHECK(m(1, 1) == 1);
  CHECK(m(0, 1) == 0);
  CHECK(m(1, 0) == 0);

  oracle::RationalSource src(3);
  for (int trial = 0; trial < 20; ++trial) {
    AlgebraCoefficients z = oracle::random_algebra(src, 0);
    const RationalMatrix m0 = hamiltonian_matrix(z);
    REQUIRE(m0.size() == 1);
    CHECK(m0(0, 0) == -b_polynomials(z).b2_base.coefficient(0));
  }
}

TEST_CASE("matrix matches an independent generator composition") {
  oracle::RationalSource src(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const AlgebraCoefficients c = oracle::random_algebra(src, src.integer(0, 8), trial % 2 == 0);
    CHECK(same_matrix(hamiltonian_matrix(c), oracle::generator_matrix(c)));
  }
}

TEST_CASE("dual construction: generators versus differential operator") {
  oracle::RationalSource src(77);
  for (int trial = 0; trial < 100; ++trial) {
    const AlgebraCoefficients c = oracle::random_algebra(src, src.integer(0, 8), trial % 3 == 0);
    const Rational d = c.d.value_or(Rational(0));
    CHECK(hamiltonian_matrix(c) == differential_operator_matrix(b_polynomials(c), d, c.n));
  }
}

TEST_CASE("B-polynomial identities") {
  oracle::RationalSource src(5);
  for (int trial = 0; trial < 100; ++trial) {
    const AlgebraCoefficients c = oracle::random_algebra(src, src.integer(0, 8));
    const int n = c.n.value();
    const BPolynomials b = b_polynomials(c);
    const Polynomial b4 = Polynomial{c.c_mm, 2 * c.c_0m, c.c_00, 2 * c.c_p0, c.c_pp};
    const Polynomial a2 = Polynomial{c.c_m, c.c_0, c.c_p};
    CHECK(b.b4 == b4);
    CHECK(b.a2 == a2);
    CHECK(b.b3 == b4.derivative() * oracle::frac(1 - n, 2) + a2);
    CHECK(b.b2_base == b4.derivative(2) * oracle::frac(n * (n - 1), 12) - a2.derivative() * oracle::frac(n, 2) +
                           Polynomial::constant(oracle::frac(n * (n + 2), 12) * c.c_00));
    CHECK(b.b4.degree() <= 4);
    CHECK(b.b3.degree() <= 3);
    CHECK(b.b2_base.degree() <= 2);
  }
}

TEST_CASE("P_n closure: no coefficient leaks past xi^n") {
  oracle::RationalSource src(99);
  for (int trial = 0; trial < 100; ++trial) {
    const AlgebraCoefficients c = oracle::random_algebra(src, src.integer(0, 8), false);
    const int n = c.n.value();
    const BPolynomials b = b_polynomials(c);
    for (int r = 0; r <= n; ++r) {
      const Polynomial p = xi_pow(r);
      const Polynomial image =
          -(b.b4 * p.derivative(2) + b.b3 * p.derivative() + b.b2(*c.d) * p);
      CHECK(image.degree() <= n);
    }
  }
}

TEST_CASE("b-polynomials are linear in the coefficients") {
  oracle::RationalSource src(123);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = src.integer(0, 8);
    const bool free1 = trial % 2 == 0, free2 = trial % 3 == 0;
    const AlgebraCoefficients c1 = oracle::random_algebra(src, n, free1);
    const AlgebraCoefficients c2 = oracle::random_algebra(src, n, free2);
    const AlgebraCoefficients sum = c1 + c2;
    const BPolynomials b1 = b_polynomials(c1), b2 = b_polynomials(c2), bs = b_polynomials(sum);
    CHECK(bs.b4 == b1.b4 + b2.b4);
    CHECK(bs.b3 == b1.b3 + b2.b3);
    CHECK(bs.b2_base == b1.b2_base + b2.b2_base);
    const Rational d1 = c1.d.value_or(0), d2 = c2.d.value_or(0);
    CHECK(bs.b2(sum.d.value_or(0)) == b1.b2(d1) + b2.b2(d2));
    CHECK(sum.d_is_free() == (free1 && free2));
  }
}

TEST_CASE("validation and JSON round trip") {
  AlgebraCoefficients empty;
  empty.c_p = 1;
  CHECK_THROWS_AS(empty.validate(), ParameterError);

  oracle::RationalSource src(8);
  for (int trial = 0; trial < 50; ++trial) {
    const AlgebraCoefficients c = oracle::random_algebra(src, src.integer(0, 8), trial % 2 == 0);
    nlohmann::ordered_json j = c;
    CHECK(algebra_from_json(j) == c);
    CHECK(algebra_from_json(nlohmann::ordered_json::parse(j.dump())) == c);
  }

  const auto parsed = algebra_from_json(nlohmann::ordered_json::parse(
      R"({"C--": "1", "C0": -0.5, "C00": "3/4", "n": 2, "d": "free"})"));
  CHECK(parsed.c_mm == 1);
  CHECK(parsed.c_0 == Q(-1, 2));
  CHECK(parsed.c_00 == Q(3, 4));
  CHECK(parsed.d_is_free());

  CHECK_THROWS_AS(algebra_from_json(nlohmann::ordered_json::parse(R"({"C--": 1, "C+-": 1, "n": 1})")),
                  ParameterError);
  CHECK_THROWS_AS(algebra_from_json(nlohmann::ordered_json::parse(R"({"C--": 1})")), ParameterError);
  CHECK_THROWS_AS(algebra_from_json(nlohmann::ordered_json::parse(R"({"C+": 1, "n": 1})")), ParameterError);
}
