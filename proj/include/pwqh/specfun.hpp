#pragma once

namespace pwqh {

// Gamma function by the g=7, 9-term Lanczos approximation with the reflection
// formula for z < 1/2. Absolute error below 1e-13 on (0, 10].
double lanczos_gamma(double z);

// Euler beta via the Lanczos gamma.
double beta_fn(double a, double b);

// Real cube root, negative arguments allowed.
double real_cbrt(double u);

// u^(j/3) under the real cube-root convention, integer j (may be negative).
double real_pow_third(double u, int j);

} // namespace pwqh
