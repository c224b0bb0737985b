#pragma once

#include <cmath>
#include <complex>

namespace qes {

/// Generalized Laguerre L_n^{(a)}(x) by the three-term recurrence; a may be
/// any real (or complex) order.
template <class T>
T laguerre(int n, T a, T x) {
  T prev(1);
  if (n == 0) return prev;
  T cur = T(1) + a - x;
  for (int k = 1; k < n; ++k) {
    const T next = ((T(2 * k + 1) + a - x) * cur - (T(k) + a) * prev) / T(k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Generalized binomial coefficient C(top, k) for integer k >= 0.
template <class T>
T binomial(T top, int k) {
  T acc(1);
  for (int i = 0; i < k; ++i) acc *= (top - T(i)) / T(i + 1);
  return acc;
}

/// Jacobi P_n^{(a,b)}(z) from the finite sum
///   sum_s C(n+a, n-s) C(n+b, s) ((z-1)/2)^s ((z+1)/2)^(n-s),
/// which has no parameter denominators and so works for complex a, b, z.
template <class T>
T jacobi(int n, T a, T b, T z) {
  const T lower = (z - T(1)) / T(2);
  const T upper = (z + T(1)) / T(2);
  T sum(0);
  for (int s = 0; s <= n; ++s) {
    T term = binomial(T(n) + a, n - s) * binomial(T(n) + b, s);
    for (int i = 0; i < s; ++i) term *= lower;
    for (int i = 0; i < n - s; ++i) term *= upper;
    sum += term;
  }
  return sum;
}

}  // namespace qes
