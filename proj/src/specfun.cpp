#include "pwqh/specfun.hpp"

#include <cmath>

namespace pwqh {

double lanczos_gamma(double z) {
    static const double p[] = {
        676.5203681218851,     -1259.1392167224028,  771.32342877765313,
        -176.61502916214059,   12.507343278686905,   -0.13857109526572012,
        9.9843695780195716e-6, 1.5056327351493116e-7};
    static const double pi = 3.14159265358979323846;

    if (z < 0.5) {
        // Reflection formula
        return pi / (std::sin(pi * z) * lanczos_gamma(1.0 - z));
    }
    z -= 1.0;
    double x = 0.99999999999980993;
    for (std::size_t i = 0; i < sizeof(p) / sizeof(p[0]); ++i) x += p[i] / (z + double(i) + 1.0);
    const double t = z + 7.5;
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

double beta_fn(double a, double b) {
    return lanczos_gamma(a) * lanczos_gamma(b) / lanczos_gamma(a + b);
}

double real_cbrt(double u) { return std::cbrt(u); }

double real_pow_third(double u, int j) {
    if (j == 0) return 1.0;
    const double m = std::pow(std::abs(u), double(j) / 3.0);
    // sign of cbrt(u)^j
    const bool neg = u < 0.0 && (j % 2 != 0);
    return neg ? -m : m;
}

} // namespace pwqh
