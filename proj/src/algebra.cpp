#include "qes/algebra.hpp"

#include <string>

#include "qes/errors.hpp"

namespace qes {

SpinIndex::SpinIndex(int n) : n_(n) {
  if (n < 0) throw ParameterError("spin index n must be non-negative, got " + std::to_string(n));
}

void AlgebraCoefficients::validate() const {
  if (c_pp == 0 && c_p0 == 0 && c_00 == 0 && c_0m == 0 && c_mm == 0)
    throw ParameterError("at least one of C++, C+0, C00, C0-, C-- must be nonzero");
}

AlgebraCoefficients operator+(const AlgebraCoefficients& a, const AlgebraCoefficients& b) {
  if (a.n != b.n) throw ParameterError("cannot add algebra data with different n");
  AlgebraCoefficients s;
  s.c_pp = a.c_pp + b.c_pp;
  s.c_p0 = a.c_p0 + b.c_p0;
  s.c_00 = a.c_00 + b.c_00;
  s.c_0m = a.c_0m + b.c_0m;
  s.c_mm = a.c_mm + b.c_mm;
  s.c_p = a.c_p + b.c_p;
  s.c_0 = a.c_0 + b.c_0;
  s.c_m = a.c_m + b.c_m;
  if (a.d || b.d) s.d = a.d.value_or(0) + b.d.value_or(0);
  s.n = a.n;
  return s;
}

Polynomial apply_generator(Generator g, const Polynomial& p, SpinIndex n) {
  const int dim = n.value();
  if (p.degree() > dim)
    throw RepresentationError("polynomial of degree " + std::to_string(p.degree()) + " is outside P_" +
                              std::to_string(dim));
  Rational half_n(dim, 2);
  half_n.canonicalize();
  std::vector<Rational> out(static_cast<std::size_t>(dim) + 1);
  for (int r = 0; r <= p.degree(); ++r) {
    const Rational& c = p.coefficient(r);
    if (c == 0) continue;
    switch (g) {
      case Generator::minus:  // d/dxi
        if (r > 0) out[static_cast<std::size_t>(r - 1)] += c * r;
        break;
      case Generator::zero:  // xi d/dxi - n/2
        out[static_cast<std::size_t>(r)] += c * (Rational(r) - half_n);
        break;
      case Generator::plus:  // xi^2 d/dxi - n xi
        if (r < dim) out[static_cast<std::size_t>(r + 1)] += c * (r - dim);
        break;
    }
  }
  return Polynomial(std::move(out));
}

Polynomial commutator(Generator g1, Generator g2, const Polynomial& p, SpinIndex n) {
  return apply_generator(g1, apply_generator(g2, p, n), n) - apply_generator(g2, apply_generator(g1, p, n), n);
}

BPolynomials b_polynomials(const AlgebraCoefficients& c) {
  c.validate();
  const Rational n = c.n.value();
  BPolynomials b;
  b.b4 = Polynomial({c.c_mm, 2 * c.c_0m, c.c_00, 2 * c.c_p0, c.c_pp});
  b.a2 = Polynomial({c.c_m, c.c_0, c.c_p});
  b.b3 = Rational((1 - n) / 2) * b.b4.derivative() + b.a2;
  b.b2_base = Rational(n * (n - 1) / 12) * b.b4.derivative(2) - Rational(n / 2) * b.a2.derivative() +
              Polynomial::constant(n * (n + 2) / 12 * c.c_00);
  return b;
}

RationalMatrix hamiltonian_matrix(const AlgebraCoefficients& c) {
  c.validate();
  const SpinIndex n = c.n;
  const int dim = n.dimension();
  const Rational d = c.d.value_or(0);
  auto T = [&](Generator g, const Polynomial& p) { return apply_generator(g, p, n); };
  using G = Generator;

  RationalMatrix m(dim);
  for (int r = 0; r < dim; ++r) {
    const Polynomial basis = Polynomial::monomial(r);
    Polynomial quad = c.c_pp * T(G::plus, T(G::plus, basis));
    quad += c.c_p0 * (T(G::plus, T(G::zero, basis)) + T(G::zero, T(G::plus, basis)));
    quad += c.c_00 * T(G::zero, T(G::zero, basis));
    quad += c.c_0m * (T(G::zero, T(G::minus, basis)) + T(G::minus, T(G::zero, basis)));
    quad += c.c_mm * T(G::minus, T(G::minus, basis));
    Polynomial lin = c.c_p * T(G::plus, basis) + c.c_0 * T(G::zero, basis) + c.c_m * T(G::minus, basis);
    Polynomial image = -(quad + lin + d * basis);
    if (image.degree() > n.value()) throw RepresentationError("Hamiltonian image left P_n");
    for (int row = 0; row < dim; ++row) m(row, r) = image.coefficient(row);
  }
  return m;
}

RationalMatrix differential_operator_matrix(const BPolynomials& b, const Rational& d, SpinIndex n) {
  const int dim = n.dimension();
  const Polynomial b2 = b.b2(d);
  RationalMatrix m(dim);
  for (int r = 0; r < dim; ++r) {
    const Polynomial chi = Polynomial::monomial(r);
    Polynomial image = -(b.b4 * chi.derivative(2) + b.b3 * chi.derivative() + b2 * chi);
    if (image.degree() > n.value()) throw RepresentationError("differential operator image left P_n");
    for (int row = 0; row < dim; ++row) m(row, r) = image.coefficient(row);
  }
  return m;
}

namespace {

const char* const kKeys[] = {"C++", "C+0", "C00", "C0-", "C--", "C+", "C0", "C-"};

Rational read_rational(const nlohmann::ordered_json& value, const std::string& key) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long>());
  if (value.is_number()) return rational_from_double(value.get<double>());
  throw ParameterError("key '" + key + "' must be a rational string or a number");
}

}  // namespace

void to_json(nlohmann::ordered_json& j, const AlgebraCoefficients& c) {
  const Rational* values[] = {&c.c_pp, &c.c_p0, &c.c_00, &c.c_0m, &c.c_mm, &c.c_p, &c.c_0, &c.c_m};
  j = nlohmann::ordered_json::object();
  for (int k = 0; k < 8; ++k) j[kKeys[k]] = to_string(*values[k]);
  j["d"] = c.d ? to_string(*c.d) : std::string("free");
  j["n"] = c.n.value();
}

void from_json(const nlohmann::ordered_json& j, AlgebraCoefficients& c) {
  if (!j.is_object()) throw ParameterError("algebra data must be a JSON object");
  Rational* values[] = {&c.c_pp, &c.c_p0, &c.c_00, &c.c_0m, &c.c_mm, &c.c_p, &c.c_0, &c.c_m};
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    bool known = key == "d" || key == "n";
    for (const char* k : kKeys) known = known || key == k;
    if (!known) throw ParameterError("unknown algebra key '" + key + "'");
  }
  for (int k = 0; k < 8; ++k) *values[k] = j.contains(kKeys[k]) ? read_rational(j.at(kKeys[k]), kKeys[k]) : Rational(0);
  if (!j.contains("n") || !j.at("n").is_number_integer()) throw ParameterError("algebra data needs an integer 'n'");
  c.n = SpinIndex(j.at("n").get<int>());
  c.d.reset();
  if (j.contains("d")) {
    const auto& dv = j.at("d");
    if (!(dv.is_string() && dv.get<std::string>() == "free")) c.d = read_rational(dv, "d");
  }
  c.validate();
}

AlgebraCoefficients algebra_from_json(const nlohmann::ordered_json& j) {
  AlgebraCoefficients c;
  from_json(j, c);
  return c;
}

}  // namespace qes
