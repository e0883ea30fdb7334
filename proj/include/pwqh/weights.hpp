#pragma once

#include <optional>

#include "pwqh/bipoly.hpp"

namespace pwqh {

// Weight vector (s1, s2, d) of a quasi-homogeneous vector field:
//   P(a^s1 x, a^s2 y) = a^(s1+d-1) P(x, y),
//   Q(a^s1 x, a^s2 y) = a^(s2+d-1) Q(x, y)
// for all a > 0, with s1, s2, d positive integers.
struct WeightVector {
    int s1 = 1, s2 = 1, d = 1;
    bool operator==(const WeightVector&) const = default;
};

// Componentwise-minimal weight vector of (P, Q), searching s1, s2, d up to
// `bound`. Returns nullopt when no weight vector exists within the bound.
// Throws ZeroFieldError when P or Q is identically zero.
std::optional<WeightVector> minimal_weight_vector(const BiPoly& p, const BiPoly& q,
                                                  int bound = 12);

// True when (s1,s2,d) satisfies both weighted-scaling identities term by term.
bool is_weight_vector(const BiPoly& p, const BiPoly& q, const WeightVector& w);

} // namespace pwqh
