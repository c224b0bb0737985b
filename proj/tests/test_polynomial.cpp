#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "qes/errors.hpp"
#include "qes/polynomial.hpp"
#include "qes/rational.hpp"

using namespace qes;
using oracle::Q;

namespace {

Polynomial random_poly(oracle::RationalSource& src, int max_degree) {
  std::vector<Rational> c(src.integer(0, max_degree) + 1);
  for (auto& v : c) v = src.next();
  return Polynomial(c);
}

}  // namespace

TEST_CASE("rationals parse and print exactly") {
  CHECK(parse_rational("3/4") == Q(3, 4));
  CHECK(parse_rational(" -6/8 ") == Q(-3, 4));
  CHECK(parse_rational("-0.125") == Q(-1, 8));
  CHECK(parse_rational("2") == 2);
  CHECK(parse_rational("1e-2") == Q(1, 100));
  CHECK_THROWS_AS(parse_rational("abc"), ParameterError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParameterError);
  CHECK(to_string(Q(-3, 4)) == "-3/4");
  CHECK(to_string(Q(5)) == "5");
  CHECK(rational_from_double(0.1).get_d() == 0.1);
  CHECK(rational_from_double(0.75) == Q(3, 4));
}

TEST_CASE("trimming and degree") {
  CHECK(Polynomial{}.degree() == -1);
  CHECK(Polynomial{0, 0, 0}.is_zero());
  CHECK(Polynomial{1, 2, 0}.degree() == 1);
  CHECK((Polynomial{1, 1} - Polynomial{0, 1}) == Polynomial{1});
  CHECK(Polynomial{1, 2, 3}.leading() == 3);
  CHECK(Polynomial::monomial(3, 2).coefficient(3) == 2);
  CHECK(Polynomial::monomial(3, 2).coefficient(7) == 0);
}

TEST_CASE("ring axioms on random polynomials") {
  oracle::RationalSource src(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial a = random_poly(src, 5), b = random_poly(src, 5), c = random_poly(src, 5);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    CHECK((a - a).is_zero());
    const Q x = src.next();
    CHECK((a * b)(x) == a(x) * b(x));
    CHECK((a + b)(x) == a(x) + b(x));
    if (!b.is_zero()) {
      const auto [q, r] = divmod(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
    }
  }
}

TEST_CASE("derivatives") {
  const Polynomial p{1, 2, 3, 4};
  CHECK(p.derivative() == Polynomial{2, 6, 12});
  CHECK(p.derivative(2) == Polynomial{6, 24});
  CHECK(p.derivative(4).is_zero());
  CHECK(p.evaluate(0.5) == doctest::Approx(1 + 1 + 0.75 + 0.5));
}

TEST_CASE("gcd and square-free part") {
  const Polynomial x_minus_1{-1, 1}, x_plus_2{2, 1};
  const Polynomial p = x_minus_1 * x_minus_1 * x_plus_2;
  CHECK(gcd(p, p.derivative()) == x_minus_1);
  CHECK(square_free_part(p) == x_minus_1 * x_plus_2);
  CHECK(gcd(Polynomial{1, 0, -1}, Polynomial{0, 0, 1}) == Polynomial{1});
  CHECK(gcd(Polynomial{}, Polynomial{2, 4}) == Polynomial{Q(1, 2), 1});
  CHECK_THROWS_AS(divmod(p, Polynomial{}), Error);

  oracle::RationalSource src(4);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial a = random_poly(src, 3), b = random_poly(src, 3), common{src.next(), 1};
    const Polynomial g = gcd(a * common, b * common);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(divmod(g, common).second.is_zero());
    CHECK(divmod(a * common, g).second.is_zero());
    CHECK(divmod(b * common, g).second.is_zero());
    CHECK(g.leading() == 1);
  }
}

TEST_CASE("real roots and Sturm counts") {
  const Polynomial b4{1, 0, -1};  // 1 - xi^2
  CHECK(count_real_roots(b4, {}) == 2);
  CHECK(count_real_roots(b4, {Q(0), std::nullopt}) == 1);
  CHECK(count_real_roots(b4, {Q(-1), Q(1)}) == 0);
  const auto roots = real_roots(b4);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].exact);
  CHECK(roots[0].value == -1.0);
  CHECK(roots[1].value == 1.0);

  const Polynomial irrational{-2, 0, 1};
  const auto r2 = real_roots(irrational);
  REQUIRE(r2.size() == 2);
  CHECK_FALSE(r2[1].exact);
  CHECK(r2[1].value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  CHECK(real_roots(Polynomial{1, 0, 1}).empty());
  CHECK(count_real_roots(Polynomial{1, 0, 1}, {}) == 0);

  // Double root counted once.
  const Polynomial sq = Polynomial{-3, 1} * Polynomial{-3, 1};
  CHECK(count_real_roots(sq, {}) == 1);
  REQUIRE(real_roots(sq).size() == 1);
  CHECK(real_roots(sq)[0].value == 3.0);
}

TEST_CASE("real roots agree with the independent Sturm oracle") {
  oracle::RationalSource src(31);
  for (int trial = 0; trial < 60; ++trial) {
    const Polynomial p = random_poly(src, 5);
    if (p.degree() < 1) continue;
    const auto mine = real_roots(p);
    const auto ref = oracle::real_roots(p.coefficients());
    REQUIRE(mine.size() == ref.roots.size());
    for (std::size_t i = 0; i < mine.size(); ++i)
      CHECK(std::abs(mine[i].value - ref.roots[i]) <= 1e-12 * (1 + std::abs(ref.roots[i])));
  }
}
