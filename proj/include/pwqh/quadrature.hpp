#pragma once

#include <functional>

#include "pwqh/errors.hpp"

namespace pwqh {

// Double-exponential (tanh-sinh) quadrature of f over (a, b). The integrand is
// called as f(x, xc) where xc > 0 is the distance from x to the nearest
// endpoint, computed without cancellation so integrable endpoint
// singularities like xc^(-2/3) can be evaluated accurately.
//
// Levels are refined until two successive trapezoid sums agree to tol
// (relative to max(1, |I|)); throws QuadratureFailureError when max_level
// refinements are not enough.
double tanh_sinh(const std::function<double(double, double)>& f, double a, double b,
                 double tol = 1e-10, int max_level = 12);

// Convenience overload for integrands that do not need the endpoint distance.
double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-10, int max_level = 12);

} // namespace pwqh
