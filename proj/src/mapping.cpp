#include "qes/mapping.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/tools/roots.hpp>

#include "qes/errors.hpp"
#include "qes/quadrature.hpp"

namespace qes {

double CoordinateChange::u(double x) const {
  if (kind_ == Kind::shift) return x - offset_;
  if (!(x > 0)) throw DomainError("u = 2 sqrt(x) needs x > 0");
  return 2.0 * std::sqrt(x);
}

double CoordinateChange::x(double u) const {
  if (kind_ == Kind::shift) return u + offset_;
  if (u < 0) throw DomainError("u = 2 sqrt(x) has no preimage for u < 0");
  return 0.25 * u * u;
}

double CoordinateChange::d1(double x) const {
  if (kind_ == Kind::shift) return 1.0;
  return 1.0 / std::sqrt(x);
}

double CoordinateChange::d2(double x) const {
  if (kind_ == Kind::shift) return 0.0;
  return -0.5 / (x * std::sqrt(x));
}

double CoordinateChange::d3(double x) const {
  if (kind_ == Kind::shift) return 0.0;
  return 0.75 / (x * x * std::sqrt(x));
}

Interval CoordinateChange::x_domain() const {
  if (kind_ == Kind::shift) return {};
  return {0.0, std::numeric_limits<double>::infinity()};
}

const char* to_string(MappingShape shape) {
  switch (shape) {
    case MappingShape::linear: return "linear";
    case MappingShape::exponential: return "exponential";
    case MappingShape::cosh: return "cosh";
    case MappingShape::sinh: return "sinh";
    case MappingShape::quadratic: return "quadratic";
    case MappingShape::cosine: return "cosine";
    case MappingShape::numeric: return "numeric";
  }
  return "unknown";
}

namespace detail {

// t(xi) = integral from xi_ref to xi of B4^{-1/2}, tabulated on panels and
// inverted by bracketed root finding.
struct NumericMap {
  enum class End { exact_zero, regular };

  std::vector<double> b4;
  std::vector<double> quotient_lo;  // B4 / (xi - lo) when B4(lo) = 0
  std::vector<double> quotient_hi;  // B4 / (hi - xi) when B4(hi) = 0
  double lo = 0.0, hi = 0.0;
  End lo_end = End::regular, hi_end = End::regular;
  std::vector<double> nodes;
  std::vector<double> t;

  static double horner(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  double b4_at(double xi) const { return horner(b4, xi); }

  // integral of B4^{-1/2} from lo to xi, lo being a simple zero: xi = lo + s^2
  double from_lo(double xi) const {
    double top = std::sqrt(std::max(0.0, xi - lo));
    return integrate([&](double s) { return 2.0 / std::sqrt(horner(quotient_lo, lo + s * s)); }, 0.0, top, 1e-13);
  }

  // integral from xi to hi, hi being a simple zero: xi = hi - s^2
  double to_hi(double xi) const {
    double top = std::sqrt(std::max(0.0, hi - xi));
    return integrate([&](double s) { return 2.0 / std::sqrt(horner(quotient_hi, hi - s * s)); }, 0.0, top, 1e-13);
  }

  double plain(double a, double b) const {
    return integrate([&](double xi) { return 1.0 / std::sqrt(b4_at(xi)); }, a, b, 1e-13);
  }

  // integral over [a, b] inside panel i
  double panel_integral(std::size_t i, double a, double b) const {
    const bool first = i == 0 && lo_end == End::exact_zero;
    const bool last = i + 2 == nodes.size() && hi_end == End::exact_zero;
    if (first) return from_lo(b) - from_lo(a);
    if (last) return to_hi(a) - to_hi(b);
    return plain(a, b);
  }

  std::size_t panel_of_xi(double xi) const {
    auto it = std::upper_bound(nodes.begin(), nodes.end(), xi);
    std::size_t i = it == nodes.begin() ? 0 : static_cast<std::size_t>(it - nodes.begin()) - 1;
    return std::min(i, nodes.size() - 2);
  }

  double t_of_xi(double xi) const {
    if (xi < nodes.front() || xi > nodes.back()) throw DomainError("xi outside the tabulated branch");
    std::size_t i = panel_of_xi(xi);
    return t[i] + panel_integral(i, nodes[i], xi);
  }

  double xi_of_t(double target) const {
    if (target < t.front() || target > t.back()) throw DomainError("u outside the range covered by the mapping");
    auto it = std::upper_bound(t.begin(), t.end(), target);
    std::size_t i = it == t.begin() ? 0 : static_cast<std::size_t>(it - t.begin()) - 1;
    i = std::min(i, t.size() - 2);
    if (target == t[i]) return nodes[i];
    if (target == t[i + 1]) return nodes[i + 1];
    auto f = [&](double xi) { return t[i] + panel_integral(i, nodes[i], xi) - target; };
    std::uintmax_t max_iter = 200;
    auto tol = boost::math::tools::eps_tolerance<double>(50);
    auto [a, b] = boost::math::tools::toms748_solve(f, nodes[i], nodes[i + 1], t[i] - target, t[i + 1] - target, tol,
                                                    max_iter);
    return 0.5 * (a + b);
  }
};

}  // namespace detail

namespace {

Rational interior_point(const RationalInterval& iv) {
  if (iv.lo && iv.hi) return (*iv.lo + *iv.hi) / 2;
  if (iv.lo) return *iv.lo + 1;
  if (iv.hi) return *iv.hi - 1;
  return 0;
}

void check_branch(const Polynomial& b4, const RationalInterval& iv) {
  if (iv.lo && iv.hi && *iv.lo >= *iv.hi) throw BranchError("empty branch interval");
  if (b4.is_zero()) throw BranchError("B4 vanishes identically");
  if (count_real_roots(b4, iv) != 0) throw BranchError("B4 has a zero inside the branch interval");
  if (b4(interior_point(iv)) <= 0) throw BranchError("B4 is not positive on the branch interval");
}

double quotient_sqrt(const Rational& num, const Rational& den) { return std::sqrt(Rational(num / den).get_d()); }

std::shared_ptr<detail::NumericMap> build_numeric(const Polynomial& b4, const RationalInterval& iv,
                                                  std::optional<double> xi_reference) {
  auto map = std::make_shared<detail::NumericMap>();
  map->b4 = b4.to_doubles();
  using End = detail::NumericMap::End;

  const bool lo_zero = iv.lo && b4(*iv.lo) == 0;
  const bool hi_zero = iv.hi && b4(*iv.hi) == 0;
  if (lo_zero) {
    const Polynomial q = divmod(b4, Polynomial({-*iv.lo, 1})).first;
    if (q(*iv.lo) == 0) throw BranchError("B4 has a multiple zero at the branch end; u diverges there");
    map->quotient_lo = q.to_doubles();
    map->lo_end = End::exact_zero;
  }
  if (hi_zero) {
    const Polynomial q = divmod(b4, Polynomial({*iv.hi, -1})).first;
    if (q(*iv.hi) == 0) throw BranchError("B4 has a multiple zero at the branch end; u diverges there");
    map->quotient_hi = q.to_doubles();
    map->hi_end = End::exact_zero;
  }

  double ref;
  if (xi_reference) {
    ref = *xi_reference;
  } else if (lo_zero) {
    ref = iv.lo->get_d();
  } else if (hi_zero) {
    ref = iv.hi->get_d();
  } else {
    const bool zero_inside = (!iv.lo || *iv.lo < 0) && (!iv.hi || *iv.hi > 0);
    ref = zero_inside ? 0.0 : interior_point(iv).get_d();
  }
  const double lo_d = iv.lo ? iv.lo->get_d() : -std::numeric_limits<double>::infinity();
  const double hi_d = iv.hi ? iv.hi->get_d() : std::numeric_limits<double>::infinity();
  if (!(ref >= lo_d && ref <= hi_d)) throw BranchError("xi reference point lies outside the branch");

  const double cap = 1e6 * std::max(1.0, std::abs(ref));
  auto side_nodes = [&](double end, bool finite, int direction) {
    std::vector<double> pts;
    if (finite) {
      const int panels = 48;
      for (int k = 1; k <= panels; ++k) pts.push_back(ref + (end - ref) * k / panels);
      pts.back() = end;
    } else {
      double step = 0.05;
      double offset = 0.0;
      while (offset < cap) {
        offset += step;
        step *= 1.2;
        pts.push_back(ref + direction * std::min(offset, cap));
      }
    }
    return pts;
  };

  std::vector<double> nodes;
  if (ref > lo_d) {
    auto left = side_nodes(lo_d, iv.lo.has_value(), -1);
    nodes.assign(left.rbegin(), left.rend());
  }
  nodes.push_back(ref);
  if (ref < hi_d) {
    auto right = side_nodes(hi_d, iv.hi.has_value(), +1);
    nodes.insert(nodes.end(), right.begin(), right.end());
  }
  if (nodes.size() < 3) throw BranchError("branch interval too small to tabulate");
  map->nodes = std::move(nodes);
  map->lo = map->nodes.front();
  map->hi = map->nodes.back();
  if (map->lo_end == End::exact_zero && map->lo != lo_d) map->lo_end = End::regular;
  if (map->hi_end == End::exact_zero && map->hi != hi_d) map->hi_end = End::regular;

  // cumulative integral, zero at the reference node
  const auto& x = map->nodes;
  std::vector<double> t(x.size(), 0.0);
  const std::size_t ref_index = static_cast<std::size_t>(std::find(x.begin(), x.end(), ref) - x.begin());
  for (std::size_t i = ref_index; i + 1 < x.size(); ++i) t[i + 1] = t[i] + map->panel_integral(i, x[i], x[i + 1]);
  for (std::size_t i = ref_index; i > 0; --i) t[i - 1] = t[i] - map->panel_integral(i - 1, x[i - 1], x[i]);
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (!(t[i + 1] > t[i]) || !std::isfinite(t[i + 1])) throw BranchError("u(xi) is not monotone on the branch");
  }
  map->t = std::move(t);
  return map;
}

}  // namespace

std::vector<RationalInterval> positive_intervals(const Polynomial& b4) {
  std::vector<RationalInterval> out;
  if (b4.is_zero()) return out;
  std::vector<std::optional<Rational>> cuts{std::nullopt};
  std::vector<bool> exact{true};
  for (const auto& r : real_roots(b4)) {
    cuts.emplace_back(r.exact ? r.exact_value : rational_from_double(r.value));
    exact.push_back(r.exact);
  }
  cuts.emplace_back(std::nullopt);
  exact.push_back(true);

  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    RationalInterval iv{cuts[k], cuts[k + 1]};
    // nudge inexact root approximations strictly inside
    if (iv.lo && !exact[k]) {
      double v = iv.lo->get_d();
      iv.lo = rational_from_double(v + 1e-12 * std::max(1.0, std::abs(v)));
    }
    if (iv.hi && !exact[k + 1]) {
      double v = iv.hi->get_d();
      iv.hi = rational_from_double(v - 1e-12 * std::max(1.0, std::abs(v)));
    }
    if (iv.lo && iv.hi && *iv.lo >= *iv.hi) continue;
    if (b4(interior_point(iv)) <= 0) continue;
    if (count_real_roots(b4, iv) != 0) continue;
    out.push_back(iv);
  }
  return out;
}

Branch default_branch(const Polynomial& b4) {
  auto intervals = positive_intervals(b4);
  if (intervals.empty()) throw BranchError("B4 <= 0 everywhere: no valid mapping branch");
  for (const auto& iv : intervals) {
    if ((!iv.lo || *iv.lo < 0) && (!iv.hi || *iv.hi > 0)) return Branch{iv, 0};
  }
  return Branch{intervals.front(), 0};
}

Mapping build_mapping(const BPolynomials& b, const Branch& branch, const CoordinateChange& coordinate,
                      std::optional<double> xi_reference) {
  const Polynomial& b4 = b.b4;
  check_branch(b4, branch.xi);
  if (branch.root_sign != 0 && branch.root_sign != 1 && branch.root_sign != -1)
    throw BranchError("root sign must be +1, -1 or 0 (natural)");

  const Rational c0 = b4.coefficient(0);
  const Rational c1 = b4.coefficient(1);
  const Rational c2 = b4.coefficient(2);
  const bool positive_sheet = interior_point(branch.xi) > 0;

  MappingShape shape = MappingShape::numeric;
  int canonical = +1;
  double rate = 1.0, scale = 1.0, c = 1.0;
  if (b4.degree() == 0) {
    shape = MappingShape::linear;
    rate = std::sqrt(c0.get_d());
  } else if (b4.degree() == 2 && c1 == 0) {
    if (c0 == 0) {
      shape = MappingShape::exponential;
      rate = std::sqrt(c2.get_d());
      scale = positive_sheet ? 1.0 : -1.0;
      canonical = positive_sheet ? 1 : -1;
    } else if (c2 > 0 && c0 < 0) {
      shape = MappingShape::cosh;
      rate = std::sqrt(c2.get_d());
      scale = (positive_sheet ? 1.0 : -1.0) * quotient_sqrt(-c0, c2);
      canonical = positive_sheet ? 1 : -1;
    } else if (c2 > 0 && c0 > 0) {
      shape = MappingShape::sinh;
      rate = std::sqrt(c2.get_d());
      scale = quotient_sqrt(c0, c2);
    } else if (c2 < 0 && c0 > 0) {
      shape = MappingShape::cosine;
      rate = std::sqrt(Rational(-c2).get_d());
      scale = quotient_sqrt(c0, -c2);
      canonical = -1;
    }
  } else if (b4.degree() == 1 && c0 == 0) {
    shape = MappingShape::quadratic;
    c = c1.get_d();
    canonical = c1 > 0 ? 1 : -1;
  }

  Mapping m(shape, branch, coordinate);
  m.rate_ = rate;
  m.scale_ = scale;
  m.c_ = c;
  if (shape == MappingShape::numeric) {
    m.numeric_ = build_numeric(b4, branch.xi, xi_reference);
    canonical = 1;
  }
  m.sign_ = branch.root_sign == 0 ? canonical : branch.root_sign;
  m.branch_.root_sign = m.sign_;
  return m;
}

namespace {

// parameter flip so that xi(u) = f(flip * u) realizes the requested sign
int flip_of(int recorded, MappingShape shape, double scale, double c) {
  int canonical = 1;
  switch (shape) {
    case MappingShape::exponential:
    case MappingShape::cosh: canonical = scale > 0 ? 1 : -1; break;
    case MappingShape::quadratic: canonical = c > 0 ? 1 : -1; break;
    case MappingShape::cosine: canonical = -1; break;
    default: break;
  }
  return recorded * canonical;
}

}  // namespace

double Mapping::xi_of_u(double u) const {
  const double v = flip_of(sign_, shape_, scale_, c_) * u;
  switch (shape_) {
    case MappingShape::linear: return rate_ * v;
    case MappingShape::exponential: return scale_ * std::exp(rate_ * v);
    case MappingShape::cosh: return scale_ * std::cosh(rate_ * v);
    case MappingShape::sinh: return scale_ * std::sinh(rate_ * v);
    case MappingShape::quadratic:
      if (v < 0) throw DomainError("quadratic mapping defined for one sign of u only");
      return 0.25 * c_ * v * v;
    case MappingShape::cosine: return scale_ * std::cos(rate_ * v);
    case MappingShape::numeric: return numeric_->xi_of_t(v);
  }
  return 0.0;
}

double Mapping::dxi_du(double u) const {
  const int flip = flip_of(sign_, shape_, scale_, c_);
  const double v = flip * u;
  switch (shape_) {
    case MappingShape::linear: return flip * rate_;
    case MappingShape::exponential: return flip * rate_ * scale_ * std::exp(rate_ * v);
    case MappingShape::cosh: return flip * rate_ * scale_ * std::sinh(rate_ * v);
    case MappingShape::sinh: return flip * rate_ * scale_ * std::cosh(rate_ * v);
    case MappingShape::quadratic: return flip * 0.5 * c_ * v;
    case MappingShape::cosine: return -flip * rate_ * scale_ * std::sin(rate_ * v);
    case MappingShape::numeric: {
      double xi = numeric_->xi_of_t(v);
      return flip * std::sqrt(std::max(0.0, numeric_->b4_at(xi)));
    }
  }
  return 0.0;
}

Interval Mapping::u_domain() const {
  const int flip = flip_of(sign_, shape_, scale_, c_);
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (shape_ == MappingShape::quadratic) return flip > 0 ? Interval{0.0, inf} : Interval{-inf, 0.0};
  if (shape_ == MappingShape::numeric) {
    double a = flip * numeric_->t.front();
    double b = flip * numeric_->t.back();
    return {std::min(a, b), std::max(a, b)};
  }
  return {};
}

Interval Mapping::principal_u_range() const {
  const int flip = flip_of(sign_, shape_, scale_, c_);
  constexpr double inf = std::numeric_limits<double>::infinity();
  Interval canonical;
  switch (shape_) {
    case MappingShape::cosh:
    case MappingShape::quadratic: canonical = {0.0, inf}; break;
    case MappingShape::cosine: canonical = {0.0, std::numbers::pi / rate_}; break;
    case MappingShape::numeric: canonical = {numeric_->t.front(), numeric_->t.back()}; break;
    default: return {};
  }
  if (flip > 0) return canonical;
  return {-canonical.hi, -canonical.lo};
}

Interval Mapping::x_domain() const {
  Interval u = u_domain();
  if (coordinate_.kind() == CoordinateChange::Kind::shift) return {u.lo + coordinate_.offset(), u.hi + coordinate_.offset()};
  // u = 2 sqrt(x) covers u > 0 only
  double lo = std::max(u.lo, 0.0);
  if (u.hi <= 0) throw DomainError("mapping has no u > 0 part for u = 2 sqrt(x)");
  return {0.25 * lo * lo, std::isfinite(u.hi) ? 0.25 * u.hi * u.hi : u.hi};
}

bool Mapping::path_hits_b4_zero(double u0, double u1) const {
  const double a = std::min(u0, u1);
  const double b = std::max(u0, u1);
  switch (shape_) {
    case MappingShape::cosh:
    case MappingShape::quadratic: return a <= 0.0 && b >= 0.0;
    case MappingShape::cosine: {
      const double period = std::numbers::pi / rate_;
      return std::floor(b / period) >= std::ceil(a / period);
    }
    case MappingShape::numeric: {
      using End = detail::NumericMap::End;
      const int flip = flip_of(sign_, shape_, scale_, c_);
      auto hits = [&](double t_end) {
        double u_end = flip * t_end;
        return u_end >= a && u_end <= b;
      };
      return (numeric_->lo_end == End::exact_zero && hits(numeric_->t.front())) ||
             (numeric_->hi_end == End::exact_zero && hits(numeric_->t.back()));
    }
    default: return false;
  }
}

}  // namespace qes
