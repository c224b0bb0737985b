#include "qes/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "qes/errors.hpp"
#include "qes/special_functions.hpp"

namespace qes {

namespace {

using std::numbers::pi;

std::vector<FamilyInfo> build_family_table() {
  const std::string line = "(-inf, inf)";
  const std::string half = "(0, inf)";
  const std::vector<ParameterSpec> periodic = {
      {"alpha", "nonzero", 1.0}, {"beta", "nonzero", 1.0}, {"a", "real", 0.0}};
  auto hyperbolic = [](const std::string& eta_range, double eta) {
    return std::vector<ParameterSpec>{{"gamma", "nonzero", 1.0}, {"eta", eta_range, eta}, {"a", "real", 0.0}};
  };
  const std::string per = "2*pi/|beta|";
  return {
      {Family::harmonic, "harmonic", "Harmonic", false, {{"omega", "> 0", 2.0}}, line, {}, {}},
      {Family::morse, "morse", "Morse", false,
       {{"A", "real", 3.0}, {"B", "> 0", 1.0}, {"alpha", "> 0", 1.0}}, line, {}, {}},
      {Family::poschl_teller, "poschl-teller", "PoschlTeller", false,
       {{"A", "real", 3.0}, {"B", "> 0", 1.0}, {"alpha", "> 0", 1.0}}, half, {}, {}},
      {Family::scarf2, "scarf-ii", "ScarfII", false,
       {{"A", "real", 2.0}, {"B", "real", 1.0}, {"alpha", "> 0", 1.0}}, line, {}, {}},
      {Family::coulomb, "coulomb", "Coulomb", false,
       {{"e2", "> 0", 2.0}, {"l", "integer >= 0", 0.0}}, half, {}, {}},
      {Family::periodic_v1, "periodic-v1", "PeriodicV1", true, periodic, line, per, "2(n+1)"},
      {Family::periodic_v2, "periodic-v2", "PeriodicV2", true, periodic, line, per, "2(n+1)"},
      {Family::periodic_v3, "periodic-v3", "PeriodicV3", true, periodic, line, per, "2n+3"},
      {Family::periodic_v4, "periodic-v4", "PeriodicV4", true, periodic, line, per, "2n+1"},
      {Family::hyperbolic_v1, "hyperbolic-v1", "HyperbolicV1", true, hyperbolic("< 0", -2.0), line, {}, "2(n+1)"},
      {Family::hyperbolic_v2, "hyperbolic-v2", "HyperbolicV2", true, hyperbolic("> 0", 2.0), line, {}, "2(n+1)"},
      {Family::hyperbolic_v3, "hyperbolic-v3", "HyperbolicV3", true, hyperbolic("sign * eta > 0", 2.0), line, {},
       "2n+1"},
      {Family::hyperbolic_v4, "hyperbolic-v4", "HyperbolicV4", true, hyperbolic("sign * eta > 0", 2.0), line, {},
       "2n+3"},
  };
}

bool is_periodic(Family f) {
  return f == Family::periodic_v1 || f == Family::periodic_v2 || f == Family::periodic_v3 || f == Family::periodic_v4;
}

bool is_hyperbolic(Family f) {
  return f == Family::hyperbolic_v1 || f == Family::hyperbolic_v2 || f == Family::hyperbolic_v3 ||
         f == Family::hyperbolic_v4;
}

[[noreturn]] void reject(const CatalogEntry& e, const std::string& predicate) {
  throw ParameterError(e.info().key + ": parameter predicate failed: " + predicate);
}

Rational q(double v) { return rational_from_double(v); }

// Coefficient of alpha cos(beta y) (periodic) or 2 eta gamma^2 cosh(2 gamma y)
// (hyperbolic) in V.
double cosine_weight(const CatalogEntry& e) {
  const double n = e.n.value();
  const double s = e.sign;
  switch (e.family) {
    case Family::periodic_v1: return -(n + 1);
    case Family::periodic_v2: return n + 1;
    case Family::periodic_v3: return s * (n + 1.5);
    case Family::periodic_v4: return s * (n + 0.5);
    case Family::hyperbolic_v1: return n + 1;
    case Family::hyperbolic_v2: return -(n + 1);
    case Family::hyperbolic_v3: return -s * (n + 0.5);
    case Family::hyperbolic_v4: return -s * (n + 1.5);
    default: throw NotApplicableError(e.info().key + " is exactly solvable");
  }
}

AlgebraCoefficients es_algebra(const CatalogEntry& e) {
  AlgebraCoefficients c;
  c.n = e.n;
  const Rational n = e.n.value();
  switch (e.family) {
    case Family::harmonic: {
      const Rational w = q(e.param("omega"));
      c.c_mm = 1;
      c.c_0 = -w;
      c.d = n * w / 2;
      break;
    }
    case Family::morse: {
      const Rational A = q(e.param("A")), B = q(e.param("B")), al = q(e.param("alpha"));
      c.c_00 = al * al;
      c.c_0 = al * (n * al - 2 * A);
      c.c_m = 2 * B * al;
      c.d = A * n * al - Rational(3, 4) * n * n * al * al;
      break;
    }
    case Family::poschl_teller: {
      const Rational A = q(e.param("A")), B = q(e.param("B")), al = q(e.param("alpha"));
      c.c_00 = 4 * al * al;
      c.c_mm = -4 * al * al;
      c.c_m = 4 * al * (B - A - al);
      c.c_0 = 4 * al * (A + B + al * (n + 1));
      c.d = 4 * A * B + al * al * (1 + 3 * n) * (1 - n) + 2 * n * al * (3 * A - B) + 2 * al * (A + B);
      break;
    }
    case Family::scarf2: {
      const Rational A = q(e.param("A")), B = q(e.param("B")), al = q(e.param("alpha"));
      c.c_00 = al * al;
      c.c_mm = al * al;
      c.c_0 = al * al * (n + 2) + 2 * A * al;
      c.c_m = 2 * B * al;
      c.d = al * al + A * al * (3 * n + 2) + n * al * al * (4 - 3 * n) / 4;
      break;
    }
    case Family::coulomb: {
      const Rational e2 = q(e.param("e2")), l = q(e.param("l"));
      c.c_0m = 2;
      c.c_0 = e2 / (n + l + 1);
      c.c_m = 2 * (4 * l + n + 3);
      c.d = e2 * (3 * n + 4 * l + 4) / (2 * (n + l + 1));
      break;
    }
    default: break;
  }
  return c;
}

AlgebraCoefficients qes_algebra(const CatalogEntry& e) {
  AlgebraCoefficients c;
  c.n = e.n;
  const Rational n = e.n.value();
  const Rational s = e.sign;
  if (is_periodic(e.family)) {
    const Rational al = q(e.param("alpha")), be2 = q(e.param("beta")) * q(e.param("beta"));
    c.c_00 = -be2;
    c.c_mm = be2;
    switch (e.family) {
      case Family::periodic_v1:
        c.c_p = -al;
        c.c_m = al + s * be2;
        c.c_0 = -(n + 1) * be2;
        break;
      case Family::periodic_v2:
        c.c_p = al;
        c.c_m = s * be2 - al;
        c.c_0 = -(n + 1) * be2;
        break;
      case Family::periodic_v3:
        c.c_p = s * al;
        c.c_m = -s * al;
        c.c_0 = -(n + 2) * be2;
        break;
      default:
        c.c_p = s * al;
        c.c_m = -s * al;
        c.c_0 = -n * be2;
        break;
    }
  } else {
    const Rational g2 = q(e.param("gamma")) * q(e.param("gamma")), eta = q(e.param("eta"));
    c.c_00 = 4 * g2;
    c.c_mm = -4 * g2;
    switch (e.family) {
      case Family::hyperbolic_v1:
        c.c_p = 2 * g2 * eta;
        c.c_m = 4 * s * g2 - 2 * g2 * eta;
        c.c_0 = 4 * g2 * (n + 1);
        break;
      case Family::hyperbolic_v2:
        c.c_p = -2 * g2 * eta;
        c.c_m = 4 * s * g2 + 2 * g2 * eta;
        c.c_0 = 4 * g2 * (n + 1);
        break;
      case Family::hyperbolic_v3:
        c.c_p = -2 * s * g2 * eta;
        c.c_m = 2 * s * g2 * eta;
        c.c_0 = 4 * n * g2;
        break;
      default:
        c.c_p = -2 * s * g2 * eta;
        c.c_m = 2 * s * g2 * eta;
        c.c_0 = 4 * g2 * (n + 2);
        break;
    }
  }
  return c;
}

void validate(const CatalogEntry& e) {
  for (const auto& [name, value] : e.params)
    if (!std::isfinite(value)) reject(e, name + " is finite");
  switch (e.family) {
    case Family::harmonic:
      if (!(e.param("omega") > 0)) reject(e, "omega > 0");
      break;
    case Family::morse:
      if (!(e.param("alpha") > 0)) reject(e, "alpha > 0");
      if (!(e.param("B") > 0)) reject(e, "B > 0 (normalizability)");
      break;
    case Family::poschl_teller:
      if (!(e.param("alpha") > 0)) reject(e, "alpha > 0");
      if (!(e.param("B") > 0)) reject(e, "B > 0 (regular solution at the origin)");
      break;
    case Family::scarf2:
      if (!(e.param("alpha") > 0)) reject(e, "alpha > 0");
      break;
    case Family::coulomb: {
      const double l = e.param("l");
      if (!(e.param("e2") > 0)) reject(e, "e2 > 0");
      if (!(l >= 0 && std::floor(l) == l)) reject(e, "l is a non-negative integer");
      break;
    }
    default:
      if (is_periodic(e.family)) {
        if (e.param("alpha") == 0) reject(e, "alpha != 0");
        if (e.param("beta") == 0) reject(e, "beta != 0");
      } else {
        const double eta = e.param("eta");
        if (e.param("gamma") == 0) reject(e, "gamma != 0");
        if (eta == 0) reject(e, "eta != 0");
        if (e.family == Family::hyperbolic_v1 && !(eta < 0)) reject(e, "eta < 0 (normalizability)");
        if (e.family == Family::hyperbolic_v2 && !(eta > 0)) reject(e, "eta > 0 (normalizability)");
        if ((e.family == Family::hyperbolic_v3 || e.family == Family::hyperbolic_v4) && !(e.sign * eta > 0))
          reject(e, "sign * eta > 0 (normalizability)");
      }
  }
}

double log_sinh(double t) { return t + std::log1p(-std::exp(-2.0 * t)) - std::numbers::ln2; }
double log_cosh(double t) {
  t = std::abs(t);
  return t + std::log1p(std::exp(-2.0 * t)) - std::numbers::ln2;
}

// log|f| bookkeeping so huge exponentials do not overflow before cancelling
double combine(double log_magnitude, double finite_part) {
  if (finite_part == 0.0) return 0.0;
  return finite_part * std::exp(log_magnitude);
}

}  // namespace

const std::vector<FamilyInfo>& families() {
  static const std::vector<FamilyInfo> table = build_family_table();
  return table;
}

const FamilyInfo& family_info(Family family) { return families()[static_cast<std::size_t>(family)]; }

Family parse_family(std::string_view text) {
  for (const auto& info : families())
    if (text == info.key || text == info.name) return info.family;
  throw ParameterError("unknown family '" + std::string(text) + "' (see list-families)");
}

nlohmann::ordered_json list_families_json() {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& info : families()) {
    nlohmann::ordered_json f;
    f["name"] = info.name;
    f["key"] = info.key;
    f["kind"] = info.qes ? "QES" : "ES";
    nlohmann::ordered_json params = nlohmann::ordered_json::array();
    for (const auto& p : info.parameters) params.push_back({{"name", p.name}, {"range", p.range}, {"default", p.default_value}});
    f["params"] = params;
    f["sign_branches"] = info.qes ? nlohmann::ordered_json::array({"+", "-"}) : nlohmann::ordered_json::array();
    f["domain"] = info.domain;
    if (info.period) f["period"] = *info.period;
    f["sector_count"] = info.sector_count ? nlohmann::ordered_json(*info.sector_count) : nlohmann::ordered_json();
    out.push_back(f);
  }
  return out;
}

double CatalogEntry::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end()) throw ParameterError(info().key + ": missing parameter " + name);
  return it->second;
}

CatalogEntry make_entry(Family family, const Params& params, int sign, int n) {
  CatalogEntry e;
  e.family = family;
  const FamilyInfo& info = family_info(family);
  for (const auto& p : info.parameters) e.params[p.name] = p.default_value;
  for (const auto& [name, value] : params) {
    if (!e.params.count(name)) throw ParameterError(info.key + ": unknown parameter " + name);
    e.params[name] = value;
  }
  if (sign != 1 && sign != -1) throw ParameterError("sign must be + or -");
  e.sign = info.qes ? sign : +1;
  e.n = SpinIndex(n);
  validate(e);

  e.algebra = info.qes ? qes_algebra(e) : es_algebra(e);
  switch (family) {
    case Family::harmonic:
    case Family::scarf2:
      e.branch = Branch{};
      break;
    case Family::morse:
      e.branch = Branch{RationalInterval{Rational(0), std::nullopt}, 0};
      break;
    case Family::poschl_teller:
      e.branch = Branch{RationalInterval{Rational(1), std::nullopt}, 0};
      e.domain = Interval{0.0, std::numeric_limits<double>::infinity()};
      e.gauge_reference = 1.0 / e.param("alpha");
      break;
    case Family::coulomb:
      e.branch = Branch{RationalInterval{Rational(0), std::nullopt}, 0};
      e.coordinate = CoordinateChange::two_sqrt();
      e.domain = Interval{0.0, std::numeric_limits<double>::infinity()};
      e.gauge_reference = 1.0;
      break;
    default: {
      const double a = e.param("a");
      e.coordinate = CoordinateChange::shift(a);
      if (is_periodic(family)) {
        const double beta = std::abs(e.param("beta"));
        e.branch = Branch{RationalInterval{Rational(-1), Rational(1)}, 0};
        e.period = 2.0 * pi / beta;
        e.gauge_reference = a + 0.5 * pi / beta;
      } else {
        e.branch = Branch{RationalInterval{Rational(1), std::nullopt}, 0};
        e.gauge_reference = a + 0.5 / std::abs(e.param("gamma"));
      }
    }
  }
  return e;
}

double energy_formula(const CatalogEntry& e, int j) {
  switch (e.family) {
    case Family::harmonic: return (j + 0.5) * e.param("omega");
    case Family::morse:
    case Family::scarf2: {
      const double t = e.param("A") - j * e.param("alpha");
      return -t * t;
    }
    case Family::poschl_teller: {
      const double t = e.param("A") - e.param("B") - 2.0 * j * e.param("alpha");
      return -t * t;
    }
    case Family::coulomb: {
      const double e2 = e.param("e2"), big_n = j + e.param("l") + 1.0;
      return -e2 * e2 / (4.0 * big_n * big_n);
    }
    default: throw NotApplicableError(e.info().key + " energies come from the algebraic sector");
  }
}

std::optional<int> bound_state_count(const CatalogEntry& e) {
  // number of j >= 0 with j < limit
  auto below = [](double limit) { return limit <= 0 ? 0 : static_cast<int>(std::ceil(limit)); };
  switch (e.family) {
    case Family::harmonic:
    case Family::coulomb: return std::nullopt;
    case Family::morse:
    case Family::scarf2: return below(e.param("A") / e.param("alpha"));
    case Family::poschl_teller: return below((e.param("A") - e.param("B")) / (2.0 * e.param("alpha")));
    default: throw NotApplicableError(e.info().key + " is quasi-exactly solvable");
  }
}

double closed_form_energy(const CatalogEntry& e, int j) {
  if (e.is_qes()) throw NotApplicableError(e.info().key + " energies need the algebraic sector");
  if (j < 0) throw NoBoundStateError("level index must be non-negative");
  const auto count = bound_state_count(e);
  if (count && j >= *count) {
    std::ostringstream os;
    os << e.info().key << ": level " << j << " is not bound (" << *count << " bound states)";
    throw NoBoundStateError(os.str());
  }
  return energy_formula(e, j);
}

double energy_offset(const CatalogEntry& e) {
  const double n = e.n.value();
  const double s = e.sign;
  if (is_periodic(e.family)) {
    const double al = e.param("alpha"), be2 = e.param("beta") * e.param("beta");
    const double base = -al * al / (8.0 * be2);
    switch (e.family) {
      case Family::periodic_v1: return n * (n + 2) * be2 / 4 + base - s * al / 2;
      case Family::periodic_v2: return n * (n + 2) * be2 / 4 + base + s * al / 2;
      case Family::periodic_v3: return (n * (n + 4) + 3) * be2 / 4 + base;
      default: return (n * n - 1) * be2 / 4 + base;
    }
  }
  if (is_hyperbolic(e.family)) {
    const double g2 = e.param("gamma") * e.param("gamma"), eta = e.param("eta");
    switch (e.family) {
      case Family::hyperbolic_v1: return -((n + 1) * (n + 1) + s * eta) * g2;
      case Family::hyperbolic_v2: return -((n + 1) * (n + 1) - s * eta) * g2;
      case Family::hyperbolic_v3: return -n * n * g2;
      default: return -(n + 2) * (n + 2) * g2;
    }
  }
  throw NotApplicableError(e.info().key + " has no energy offset");
}

double closed_form_energy(const CatalogEntry& e, const SpectralResult& sector, int j) {
  if (!e.is_qes()) return closed_form_energy(e, j);
  if (j < 0 || j >= static_cast<int>(sector.levels.size())) throw NoBoundStateError("level outside the algebraic sector");
  return energy_offset(e) + sector.levels[static_cast<std::size_t>(j)].d;
}

double closed_form_potential(const CatalogEntry& e, double x) {
  switch (e.family) {
    case Family::harmonic: {
      const double w = e.param("omega");
      return 0.25 * w * w * x * x;
    }
    case Family::morse: {
      const double A = e.param("A"), B = e.param("B"), al = e.param("alpha");
      return B * B * std::exp(-2.0 * al * x) - B * (2.0 * A + al) * std::exp(-al * x);
    }
    case Family::poschl_teller: {
      const double A = e.param("A"), B = e.param("B"), al = e.param("alpha");
      const double sh = std::sinh(al * x), ch = std::cosh(al * x);
      return B * (B - al) / (sh * sh) - A * (A + al) / (ch * ch);
    }
    case Family::scarf2: {
      const double A = e.param("A"), B = e.param("B"), al = e.param("alpha");
      const double sech = 1.0 / std::cosh(al * x);
      return (B * B - A * (A + al)) * sech * sech + B * (2.0 * A + al) * sech * std::tanh(al * x);
    }
    case Family::coulomb: {
      const double e2 = e.param("e2"), l = e.param("l");
      return -e2 / x + l * (l + 1) / (x * x);
    }
    default: break;
  }
  const double y = x - e.param("a");
  const double k = cosine_weight(e);
  if (is_periodic(e.family)) {
    const double al = e.param("alpha"), be = e.param("beta");
    return -(al * al / (8.0 * be * be)) * std::cos(2.0 * be * y) + k * al * std::cos(be * y) - 0.25 * be * be;
  }
  const double g = e.param("gamma"), eta = e.param("eta");
  const double c = g * g * eta * eta / 8.0;
  return c * std::cosh(4.0 * g * y) + k * 2.0 * eta * g * g * std::cosh(2.0 * g * y) - c;
}

PotentialModel potential_model(const CatalogEntry& e) {
  PotentialModel model;
  model.value = [e](double x) { return closed_form_potential(e, x); };
  model.domain = e.domain;
  model.period = e.period;
  model.additive_constant = 0.0;
  return model;
}

std::pair<double, double> master_convention(const CatalogEntry& e) {
  if (e.is_qes()) return {0.0, energy_offset(e)};
  return {to_double(*e.algebra.d), energy_formula(e, e.n.value())};
}

double closed_form_wavefunction(const CatalogEntry& e, int j, double x) {
  if (e.is_qes()) throw NotApplicableError(e.info().key + " wavefunctions need coefficient vectors");
  if (j < 0) throw NoBoundStateError("level index must be non-negative");
  switch (e.family) {
    case Family::harmonic: {
      const double w = e.param("omega");
      return combine(-0.25 * w * x * x, std::hermite(static_cast<unsigned>(j), std::sqrt(0.5 * w) * x));
    }
    case Family::morse: {
      const double A = e.param("A"), B = e.param("B"), al = e.param("alpha");
      const double z = std::exp(-al * x);
      const double log_mag = (j * al - A) * x - (B / al) * z;
      return combine(log_mag, laguerre(j, 2.0 * A / al - 2.0 * j, 2.0 * B / al * z));
    }
    case Family::poschl_teller: {
      if (x < 0) throw DomainError("Poschl-Teller wavefunctions live on x > 0");
      if (x == 0) return 0.0;
      const double A = e.param("A"), B = e.param("B"), al = e.param("alpha");
      const double log_mag = (B / al) * log_sinh(al * x) - (A / al) * log_cosh(al * x);
      return combine(log_mag, jacobi(j, B / al - 0.5, -A / al - 0.5, std::cosh(2.0 * al * x)));
    }
    case Family::scarf2: {
      using C = std::complex<double>;
      const double A = e.param("A"), B = e.param("B"), al = e.param("alpha");
      const double sh = std::sinh(al * x);
      const C upper(-A / al - 0.5, -B / al), lower(-A / al - 0.5, B / al);
      C p = jacobi(j, upper, lower, C(0.0, sh));
      // P_j at an imaginary argument with conjugate parameters is i^j times a real number
      p *= std::pow(C(0.0, -1.0), j);
      if (std::abs(p.imag()) > 1e-10 * std::max(1.0, std::abs(p))) {
        std::ostringstream os;
        os.precision(17);
        os << "Scarf II wavefunction is not real at x = " << x << " (imaginary part " << p.imag() << ")";
        throw Error(os.str());
      }
      const double log_mag = -(A / al) * log_cosh(al * x) - (B / al) * std::atan(sh);
      return combine(log_mag, p.real());
    }
    case Family::coulomb: {
      if (x < 0) throw DomainError("Coulomb wavefunctions live on x > 0");
      if (x == 0) return 0.0;
      const double e2 = e.param("e2"), l = e.param("l"), big_n = j + l + 1.0;
      const double log_mag = (l + 1) * std::log(x) - e2 * x / (2.0 * big_n);
      return combine(log_mag, laguerre(j, 2.0 * l + 1.0, e2 * x / big_n));
    }
    default: return 0.0;
  }
}

GaugeFactor closed_form_gauge(const CatalogEntry& e) {
  if (!e.is_qes()) throw NotApplicableError(e.info().key + " uses the numeric gauge");
  const double a = e.param("a");
  const double s = e.sign;
  if (is_periodic(e.family)) {
    const double al = e.param("alpha"), be = e.param("beta");
    double k = 0;
    switch (e.family) {
      case Family::periodic_v1: k = -1; break;
      case Family::periodic_v2: k = +1; break;
      default: k = s;
    }
    const double w = k * al / (be * be);
    return GaugeFactor{[w, be, a](double x) {
                         const double h = std::sin(0.5 * be * (x - a));
                         return std::exp(w * h * h);
                       },
                       a};
  }
  const double g = e.param("gamma"), eta = e.param("eta");
  double k = 0;
  switch (e.family) {
    case Family::hyperbolic_v1: k = +1; break;
    case Family::hyperbolic_v2: k = -1; break;
    default: k = -s;
  }
  const double w = k * eta / 4.0;
  return GaugeFactor{[w, g, a](double x) { return std::exp(w * (std::cosh(2.0 * g * (x - a)) - 1.0)); }, a};
}

Prefactor prefactor(const CatalogEntry& e) {
  switch (e.family) {
    case Family::periodic_v1:
    case Family::periodic_v2: return Prefactor::half_angle(e.param("beta"), e.param("a"), e.sign > 0);
    case Family::periodic_v3: return Prefactor::full_angle(e.param("beta"), e.param("a"));
    case Family::hyperbolic_v1:
    case Family::hyperbolic_v2: return Prefactor::hyperbolic_half(e.param("gamma"), e.param("a"), e.sign > 0);
    case Family::hyperbolic_v4: return Prefactor::hyperbolic_double(e.param("gamma"), e.param("a"));
    default: return Prefactor::none();
  }
}

double closed_form_wavefunction(const CatalogEntry& e, std::span<const double> b, double x) {
  if (!e.is_qes()) throw NotApplicableError(e.info().key + " wavefunctions are indexed by level");
  if (static_cast<int>(b.size()) != e.n.dimension()) throw ParameterError("coefficient vector must have n+1 entries");
  const double y = x - e.param("a");
  const double xi = is_periodic(e.family) ? std::cos(e.param("beta") * y) : std::cosh(2.0 * e.param("gamma") * y);
  double chi = 0.0;
  for (auto it = b.rbegin(); it != b.rend(); ++it) chi = chi * xi + *it;
  return prefactor(e)(x) * closed_form_gauge(e)(x) * chi;
}

WaveFunction qes_wavefunction(const CatalogEntry& e, std::vector<double> b) {
  return assemble_wavefunction(closed_form_gauge(e), std::move(b), e.mapping(), prefactor(e));
}

int sector_count(const CatalogEntry& e) {
  return static_cast<int>(std::lround(2.0 * std::abs(cosine_weight(e))));
}

}  // namespace qes
