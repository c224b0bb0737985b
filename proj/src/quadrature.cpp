#include "qes/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace qes {

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol, double* error_estimate) {
  if (a == b) {
    if (error_estimate) *error_estimate = 0.0;
    return 0.0;
  }
  double err = 0.0;
  double l1 = 0.0;
  double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 15, rel_tol, &err, &l1);
  if (error_estimate) *error_estimate = err;
  return value;
}

}  // namespace qes
