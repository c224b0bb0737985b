#include "qes/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qes/errors.hpp"

namespace qes {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(int power, const Rational& c) {
  if (power < 0) throw std::invalid_argument("negative monomial power");
  std::vector<Rational> coeffs(static_cast<std::size_t>(power) + 1);
  coeffs.back() = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

Polynomial Polynomial::derivative(int order) const {
  Polynomial result = *this;
  for (int k = 0; k < order && !result.is_zero(); ++k) {
    std::vector<Rational> next(result.coeffs_.size() - 1);
    for (std::size_t r = 1; r < result.coeffs_.size(); ++r) next[r - 1] = result.coeffs_[r] * static_cast<long>(r);
    result = Polynomial(std::move(next));
  }
  return result;
}

Rational Polynomial::operator()(const Rational& xi) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * xi + *it;
  return acc;
}

double Polynomial::evaluate(double xi) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * xi + it->get_d();
  return acc;
}

std::vector<double> Polynomial::to_doubles() const {
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_d());
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t r = 0; r < other.coeffs_.size(); ++r) coeffs_[r] += other.coeffs_[r];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t r = 0; r < other.coeffs_.size(); ++r) coeffs_[r] -= other.coeffs_[r];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scale) {
  for (auto& c : coeffs_) c *= scale;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int r = degree(); r >= 0; --r) {
    const Rational& c = coeffs_[static_cast<std::size_t>(r)];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rational mag = abs(c);
    if (r == 0 || mag != 1) os << mag.get_str();
    if (r > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (r > 1) os << "^" << r;
    }
    first = false;
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational& lead = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + db)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k + i)] -= q * b.coefficient(i);
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

namespace {

Polynomial make_monic(Polynomial p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading();
  return p * inv;
}

int sign_of(const Rational& q) { return sgn(q); }

// Sign of p at -inf / +inf.
int sign_at_infinity(const Polynomial& p, bool positive) {
  if (p.is_zero()) return 0;
  int s = sign_of(p.leading());
  if (!positive && p.degree() % 2 == 1) s = -s;
  return s;
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    auto [q, r] = divmod(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int variations(const std::vector<Polynomial>& seq, const std::optional<Rational>& at, bool positive_infinity) {
  int count = 0;
  int last = 0;
  for (const auto& s : seq) {
    int v = at ? sign_of(s(*at)) : sign_at_infinity(s, positive_infinity);
    if (v == 0) continue;
    if (last != 0 && v != last) ++count;
    last = v;
  }
  return count;
}

// Distinct roots of a square-free p in (lo, hi].
int sturm_count(const std::vector<Polynomial>& seq, const std::optional<Rational>& lo,
                const std::optional<Rational>& hi) {
  return variations(seq, lo, false) - variations(seq, hi, true);
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    auto [q, r] = divmod(x, y);
    x = std::move(y);
    y = make_monic(std::move(r));
  }
  return make_monic(std::move(x));
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.degree() <= 0) return make_monic(p);
  Polynomial g = gcd(p, p.derivative());
  return make_monic(divmod(p, g).first);
}

int count_real_roots(const Polynomial& p, const RationalInterval& interval) {
  if (p.is_zero()) throw std::domain_error("zero polynomial has infinitely many roots");
  Polynomial sf = square_free_part(p);
  for (const auto& end : {interval.lo, interval.hi}) {
    if (end && sf.degree() > 0 && sf(*end) == 0) sf = divmod(sf, Polynomial({-*end, 1})).first;
  }
  if (sf.degree() <= 0) return 0;
  if (interval.lo && interval.hi && *interval.lo >= *interval.hi) return 0;
  return sturm_count(sturm_sequence(sf), interval.lo, interval.hi);
}

std::vector<RealRoot> real_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("zero polynomial has infinitely many roots");
  Polynomial sf = square_free_part(p);
  std::vector<RealRoot> roots;
  if (sf.degree() <= 0) return roots;

  // Cauchy bound; the +1 keeps both ends away from the roots.
  Rational bound = 0;
  for (int r = 0; r < sf.degree(); ++r) bound = std::max(bound, Rational(abs(sf.coefficient(r) / sf.leading())));
  bound += 2;
  const auto seq = sturm_sequence(sf);

  struct Pending {
    Rational lo, hi;
  };
  std::vector<Pending> stack{{-bound, bound}};
  std::vector<Pending> isolated;
  while (!stack.empty()) {
    Pending iv = stack.back();
    stack.pop_back();
    int n = sturm_count(seq, iv.lo, iv.hi);
    if (n == 0) continue;
    if (n == 1) {
      isolated.push_back(iv);
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    stack.push_back({iv.lo, mid});
    stack.push_back({mid, iv.hi});
  }

  for (auto iv : isolated) {
    // (lo, hi] holds one root; sf changes sign across it unless hi is the root
    if (sf(iv.hi) == 0) {
      roots.push_back({iv.hi.get_d(), true, iv.hi});
      continue;
    }
    int sign_hi = sgn(sf(iv.hi));
    bool exact = false;
    Rational exact_value;
    for (int it = 0; it < 200; ++it) {
      Rational mid = (iv.lo + iv.hi) / 2;
      int s = sgn(sf(mid));
      if (s == 0) {
        exact = true;
        exact_value = mid;
        break;
      }
      if (s == sign_hi) iv.hi = mid;
      else iv.lo = mid;
      double width = Rational(iv.hi - iv.lo).get_d();
      double scale = std::max(1.0, std::abs(iv.hi.get_d()));
      if (width < 1e-17 * scale) break;
    }
    if (!exact) {
      // get_d truncates, so the nearest double may be one ulp away
      const double guess = Rational((iv.lo + iv.hi) / 2).get_d();
      for (double d : {guess, std::nextafter(guess, HUGE_VAL), std::nextafter(guess, -HUGE_VAL)}) {
        const Rational candidate = rational_from_double(d);
        if (sf(candidate) == 0) {
          exact = true;
          exact_value = candidate;
          break;
        }
      }
    }
    double value = exact ? exact_value.get_d() : Rational((iv.lo + iv.hi) / 2).get_d();
    roots.push_back({value, exact, exact ? exact_value : Rational((iv.lo + iv.hi) / 2)});
  }
  std::sort(roots.begin(), roots.end(), [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
  return roots;
}

}  // namespace qes
