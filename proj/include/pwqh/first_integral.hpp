#pragma once

#include "pwqh/canonical.hpp"

namespace pwqh {

enum class IntegralBranch { power, logarithmic };

// Closed-form first integral of one zone of a canonical system. Fractional
// powers and logarithms of the half-plane coordinate are taken of its absolute
// value, which leaves the level sets invariant on either side of the singular
// locus; the domain predicate excludes that locus (x <= 0 for Form II, y = 0
// and the wrong half-plane for Form III).
class FirstIntegral {
public:
    FirstIntegral(Variant variant, Zone zone, IntegralBranch branch,
                  std::vector<double> params);

    Zone zone() const { return zone_; }
    IntegralBranch branch() const { return branch_; }

    bool in_domain(double x, double y) const;
    // Evaluate; throws IntegralDomainError outside the domain predicate.
    double operator()(double x, double y) const;

private:
    Variant variant_;
    Zone zone_;
    IntegralBranch branch_;
    std::vector<double> params_;
};

// The first integral of the requested zone, selecting the logarithmic branch
// at the resonant parameter values (a2 = 2 b22, a2_tilde = 2, a31 = 2 b3,
// a31_tilde = 2).
FirstIntegral first_integral(const CanonicalForm& form, Zone zone);

} // namespace pwqh
