#pragma once

// Reference computations for the tests. Nothing here calls into the library's
// algebra or polynomial code, so agreement is a genuine cross-check.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "qes/algebra.hpp"

namespace oracle {

using Q = mpq_class;
using Vec = std::vector<Q>;
using Mat = std::vector<Vec>;  // row-major, square

inline Q frac(long num, long den) {
  Q q(num, den);
  q.canonicalize();
  return q;
}

// Hand-rolled generator of small rationals p/q with |p| <= span, q in 1..4.
class RationalSource {
 public:
  explicit RationalSource(std::uint64_t seed) : rng_(seed) {}

  Q next(int span = 5) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, 4);
    Q q(num(rng_), den(rng_));
    q.canonicalize();
    return q;
  }
  Q nonzero(int span = 5) {
    Q q;
    do q = next(span);
    while (q == 0);
    return q;
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

inline qes::AlgebraCoefficients random_algebra(RationalSource& src, int n, bool free_d = true) {
  qes::AlgebraCoefficients c;
  do {
    c.c_pp = src.next();
    c.c_p0 = src.next();
    c.c_00 = src.next();
    c.c_0m = src.next();
    c.c_mm = src.next();
  } while (c.c_pp == 0 && c.c_p0 == 0 && c.c_00 == 0 && c.c_0m == 0 && c.c_mm == 0);
  c.c_p = src.next();
  c.c_0 = src.next();
  c.c_m = src.next();
  if (!free_d) c.d = src.next();
  c.n = qes::SpinIndex(n);
  return c;
}

// Generator actions on coefficient vectors of length n+1, straight from
// T- x^r = r x^(r-1), T0 x^r = (r - n/2) x^r, T+ x^r = (r - n) x^(r+1).
inline Vec act(char g, const Vec& p, int n) {
  Vec out(p.size(), 0);
  for (int r = 0; r <= n; ++r) {
    if (p[r] == 0) continue;
    if (g == '-' && r > 0) out[r - 1] += r * p[r];
    if (g == '0') out[r] += (Q(r) - frac(n, 2)) * p[r];
    if (g == '+' && r < n) out[r + 1] += (r - n) * p[r];
  }
  return out;
}

inline Mat generator_matrix(const qes::AlgebraCoefficients& c) {
  const int n = c.n.value();
  const struct {
    char a, b;
    Q coef;
  } quad[] = {{'+', '+', c.c_pp}, {'+', '0', c.c_p0}, {'0', '+', c.c_p0}, {'0', '0', c.c_00},
              {'0', '-', c.c_0m}, {'-', '0', c.c_0m}, {'-', '-', c.c_mm}};
  const struct {
    char a;
    Q coef;
  } lin[] = {{'+', c.c_p}, {'0', c.c_0}, {'-', c.c_m}};
  const Q d = c.d.value_or(Q(0));

  Mat m(n + 1, Vec(n + 1, 0));
  for (int r = 0; r <= n; ++r) {
    Vec basis(n + 1, 0);
    basis[r] = 1;
    Vec img(n + 1, 0);
    for (const auto& t : quad) {
      const Vec v = act(t.a, act(t.b, basis, n), n);
      for (int k = 0; k <= n; ++k) img[k] -= t.coef * v[k];
    }
    for (const auto& t : lin) {
      const Vec v = act(t.a, basis, n);
      for (int k = 0; k <= n; ++k) img[k] -= t.coef * v[k];
    }
    img[r] -= d;
    for (int k = 0; k <= n; ++k) m[k][r] = img[k];
  }
  return m;
}

// det(lambda I - M) by Faddeev-LeVerrier, coefficients lowest power first.
inline Vec characteristic_polynomial(const Mat& m) {
  const int size = static_cast<int>(m.size());
  Vec coeff(size + 1, 0);
  coeff[size] = 1;
  Mat acc(size, Vec(size, 0));  // M_k
  Mat prev(size, Vec(size, 0));
  for (int i = 0; i < size; ++i) prev[i][i] = 1;  // M_1 = I (before multiplying)
  for (int k = 1; k <= size; ++k) {
    // acc = M * prev
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) {
        Q s = 0;
        for (int l = 0; l < size; ++l) s += m[i][l] * prev[l][j];
        acc[i][j] = s;
      }
    Q trace = 0;
    for (int i = 0; i < size; ++i) trace += acc[i][i];
    const Q c = -trace / k;
    coeff[size - k] = c;
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) prev[i][j] = acc[i][j];
      prev[i][i] += c;
    }
  }
  return coeff;
}

inline void trim(Vec& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Q eval(const Vec& p, const Q& x) {
  Q acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline Vec derivative(const Vec& p) {
  Vec out;
  for (std::size_t r = 1; r < p.size(); ++r) out.push_back(static_cast<long>(r) * p[r]);
  return out;
}

inline Vec remainder(Vec a, const Vec& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Q f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

inline Vec gcd(Vec a, Vec b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Vec r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Vec quotient(Vec a, const Vec& b) {
  trim(a);
  Vec q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (a.size() >= b.size() && !a.empty()) {
    const Q f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return q;
}

inline int sign(const Q& q) { return sgn(q); }

// Sign changes of the Sturm chain at x.
inline int variations(const std::vector<Vec>& chain, const Q& x) {
  int count = 0, last = 0;
  for (const auto& p : chain) {
    const int s = sign(eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

struct RootSet {
  std::vector<double> roots;  // distinct real roots, ascending
  int degree = 0;
  bool square_free = true;
};

// Distinct real roots of p to about `width`, by exact Sturm bisection.
inline RootSet real_roots(Vec p, double width = 1e-13) {
  trim(p);
  RootSet out;
  out.degree = static_cast<int>(p.size()) - 1;
  const Vec g = gcd(p, derivative(p));
  out.square_free = g.size() <= 1;
  if (!out.square_free) p = quotient(p, g);
  std::vector<Vec> chain{p, derivative(p)};
  while (chain.back().size() > 1) {
    Vec r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  // Cauchy bound.
  Q bound = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    Q ratio = p[i] / p.back();
    if (ratio < 0) ratio = -ratio;
    if (ratio > bound) bound = ratio;
  }
  bound += 1;

  struct Bracket {
    Q lo, hi;
  };
  std::vector<Bracket> work{{-bound, bound}};
  while (!work.empty()) {
    Bracket b = work.back();
    work.pop_back();
    const int k = variations(chain, b.lo) - variations(chain, b.hi);
    if (k == 0) continue;
    if (k == 1 && Q(b.hi - b.lo).get_d() < width) {
      out.roots.push_back(Q((b.lo + b.hi) / 2).get_d());
      continue;
    }
    Q mid = (b.lo + b.hi) / 2;
    if (eval(p, mid) == 0) {
      // Root exactly at mid: record it and shrink both halves off it.
      out.roots.push_back(mid.get_d());
      const Q eps = Q(b.hi - b.lo) / 1024;
      work.push_back({b.lo, mid - eps});
      work.push_back({mid + eps, b.hi});
      continue;
    }
    work.push_back({b.lo, mid});
    work.push_back({mid, b.hi});
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

inline double max_abs(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace oracle
