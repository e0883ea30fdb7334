#pragma once

#include <vector>

namespace pwqh {

// Univariate real polynomial as ascending coefficients: c[0] + c[1] x + ...
using Poly = std::vector<double>;

double poly_eval(const Poly& p, double x);
Poly poly_derivative(const Poly& p);
// Remove a leading (highest-degree) tail of negligible coefficients.
Poly poly_trimmed(const Poly& p, double rel_eps = 1e-14);
bool poly_is_zero(const Poly& p, double rel_eps = 1e-14);

// Sign variations of the sequence, zeros skipped.
int sign_variations(const std::vector<double>& coeffs);

struct RootEstimate {
    double x;
    bool simple; // true when a sign change across the root was verified
};

// All roots in (0, inf), isolated by Descartes-guided interval subdivision and
// refined by bisection to a relative width of `tol`. Clustered or
// even-multiplicity roots are reported once with simple = false.
std::vector<RootEstimate> isolate_positive_roots(const Poly& p, double tol = 1e-12);

// All real roots (positive, negative, and zero).
std::vector<RootEstimate> all_real_roots(const Poly& p, double tol = 1e-12);

} // namespace pwqh
