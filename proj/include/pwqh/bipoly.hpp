#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pwqh {

// Bivariate real polynomial, stored as a sparse exponent->coefficient map.
// Coefficients below the structural-zero threshold are never stored, so two
// polynomials with equal maps are structurally identical.
class BiPoly {
public:
    // Treat anything smaller than this (absolute) as a structural zero.
    static constexpr double kZeroTol = 1e-14;

    using Key = std::pair<int, int>; // (i, j) for x^i y^j

    BiPoly() = default;
    static BiPoly monomial(int i, int j, double c);

    void add_term(int i, int j, double c);
    double coeff(int i, int j) const;

    bool is_zero() const { return terms_.empty(); }
    // Total degree; -1 marks the zero polynomial.
    int degree() const;

    double eval(double x, double y) const;

    const std::map<Key, double>& terms() const { return terms_; }

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly scaled(double c) const;

    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }

    // Coefficients of p(x, 0) in ascending powers of x (empty if identically 0).
    std::vector<double> restrict_y0() const;
    // Coefficients of p(0, y) in ascending powers of y.
    std::vector<double> restrict_x0() const;

    // p(sx*x, sy*y), then multiplied by c.
    BiPoly substituted_scaled(double sx, double sy, double c) const;

    std::string to_string() const;

private:
    std::map<Key, double> terms_;
};

} // namespace pwqh
