#pragma once

#include <map>
#include <vector>

#include "pwqh/canonical.hpp"

namespace pwqh {

// Piecewise polynomial perturbation of degree n:
//   x' += eps * sum c_ij x^i y^j,  y' += eps * sum d_ij x^i y^j
// with independent coefficient families above (+) and below (-) the axis.
struct PerturbationSpec {
    int n = 0;
    std::map<std::pair<int, int>, double> c_plus, c_minus, d_plus, d_minus;

    // Throws DegreeMismatchError when an index violates 0 <= i+j <= n.
    void validate() const;
};

// The first-order Melnikov function of a perturbed Form I center, stored as
// exponent/coefficient pairs:  M(h) = sum xi_{2k,j} h^(k + j/3 + 1/2).
struct MelnikovPoly {
    FormI form{};
    int n = 0;
    std::map<std::pair<int, int>, double> terms; // (2k, j) -> xi

    double eval(double h) const;
    // Coefficients grouped by the integer exponent e = 3k + j of s = h^(1/3),
    // i.e. M(h) = h^(1/2) * q(s) with q(s) = sum_e coeff_e s^e.
    std::map<int, double> s_coefficients() const;
    // Distinct exponents 3i + 2j (i = 2k) in the h = hhat^6 scaling, ascending.
    std::vector<int> exponents() const;
};

// I(k, j) = int_0^1 x^(2k) (x^2 - 1)^(j/3) dx under the real cube-root
// convention; equals (-1)^j B(k + 1/2, j/3 + 1) / 2. Defined for j >= -2.
double base_integral(int k, int j);

struct HatCoefficients {
    double d_plus;  // multiplies d^+_{2k,j}
    double c_plus;  // multiplies c^+_{2k+1,j}
    double d_minus; // multiplies d^-_{2k,j}
    double c_minus; // multiplies c^-_{2k+1,j}
};

// The four closed-form integral coefficients for index (2k, j); all nonzero.
// Requires the center condition on the form.
HatCoefficients hat_coefficients(const FormI& form, int k, int j);

// Assemble the Melnikov coefficients xi_{2k,j} for a perturbation; entries
// with |xi| < 1e-14 are dropped as structural zeros.
MelnikovPoly melnikov_poly(const FormI& form, const PerturbationSpec& pert);

// Distinct values 3i + 2j over even i >= 0, 0 <= j < 3, i + j <= n, ascending.
std::vector<int> exponent_set(int n);

// Maximal number of limit cycles from degree-n perturbations at first order;
// equals |exponent_set(n)| - 1.
int xi_max(int n);

// Sign variations of a coefficient sequence ordered by ascending exponent,
// zeros skipped; bounds the positive roots of the generalized polynomial.
int descartes_variations(const std::vector<double>& coeffs);

struct MelnikovRoot {
    double h;
    bool simple; // false when multiplicity could not be resolved
};

// Positive zeros of M, found on the ordinary polynomial in s = h^(1/3) after
// dividing by h^(1/2), then mapped back via h = s^3.
std::vector<MelnikovRoot> positive_roots(const MelnikovPoly& m);

// Build a degree-n perturbation whose Melnikov function has exactly the given
// positive simple zeros (at most xi_max(n) of them, pairwise distinct). Only
// the d_plus family is used; the xi -> d_plus map is diagonal with nonzero
// diagonal.
PerturbationSpec realize_roots(const FormI& form, int n, const std::vector<double>& roots_h);

} // namespace pwqh
