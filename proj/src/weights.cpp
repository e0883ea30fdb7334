#include "pwqh/weights.hpp"

#include <limits>

#include "pwqh/errors.hpp"

namespace pwqh {

bool is_weight_vector(const BiPoly& p, const BiPoly& q, const WeightVector& w) {
    if (w.s1 < 1 || w.s2 < 1 || w.d < 1) return false;
    for (const auto& [k, c] : p.terms())
        if (w.s1 * k.first + w.s2 * k.second != w.s1 + w.d - 1) return false;
    for (const auto& [k, c] : q.terms())
        if (w.s1 * k.first + w.s2 * k.second != w.s2 + w.d - 1) return false;
    return true;
}

std::optional<WeightVector> minimal_weight_vector(const BiPoly& p, const BiPoly& q,
                                                  int bound) {
    if (p.is_zero() || q.is_zero())
        throw ZeroFieldError("minimal_weight_vector requires P*Q != 0");

    // The exponent equations are linear in (s1, s2, d), so d follows from any
    // single monomial once (s1, s2) are fixed; the remaining monomials are
    // verification only.
    const auto& [k0, c0] = *p.terms().begin();
    std::optional<WeightVector> best;
    long best_sum = std::numeric_limits<long>::max();
    for (int s1 = 1; s1 <= bound; ++s1) {
        for (int s2 = 1; s2 <= bound; ++s2) {
            const int d = s1 * k0.first + s2 * k0.second - s1 + 1;
            if (d < 1 || d > bound) continue;
            WeightVector w{s1, s2, d};
            if (!is_weight_vector(p, q, w)) continue;
            const long sum = static_cast<long>(s1) + s2 + d;
            if (sum < best_sum ||
                (sum == best_sum && (s1 < best->s1 || (s1 == best->s1 && s2 < best->s2)))) {
                best = w;
                best_sum = sum;
            }
        }
    }
    return best;
}

} // namespace pwqh
