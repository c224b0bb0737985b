#pragma once

#include <functional>

namespace qes {

/// Adaptive Gauss-Kronrod (15-point) integral of f over [a, b]; a > b flips
/// the sign. Integrable endpoint singularities must be removed by the caller.
double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-10,
                 double* error_estimate = nullptr);

}  // namespace qes
