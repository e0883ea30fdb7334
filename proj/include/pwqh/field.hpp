#pragma once

#include "pwqh/bipoly.hpp"
#include "pwqh/errors.hpp"

namespace pwqh {

enum class Zone { upper, lower };

// Two planar polynomial vector fields glued along y = 0: the upper pair
// governs y >= 0, the lower pair y < 0.
struct PiecewiseField {
    BiPoly upper_p, upper_q, lower_p, lower_q;

    PiecewiseField() = default;
    PiecewiseField(BiPoly up, BiPoly uq, BiPoly lp, BiPoly lq)
        : upper_p(std::move(up)), upper_q(std::move(uq)),
          lower_p(std::move(lp)), lower_q(std::move(lq)) {
        if (upper_p.is_zero() && upper_q.is_zero())
            throw ZeroFieldError("upper zone field is identically zero");
        if (lower_p.is_zero() && lower_q.is_zero())
            throw ZeroFieldError("lower zone field is identically zero");
    }

    const BiPoly& p(Zone z) const { return z == Zone::upper ? upper_p : lower_p; }
    const BiPoly& q(Zone z) const { return z == Zone::upper ? upper_q : lower_q; }

    // Field value of the zone containing (x, y); y = 0 uses the upper field.
    void eval(double x, double y, double& dx, double& dy) const {
        const Zone z = y >= 0.0 ? Zone::upper : Zone::lower;
        dx = p(z).eval(x, y);
        dy = q(z).eval(x, y);
    }

    void eval_zone(Zone z, double x, double y, double& dx, double& dy) const {
        dx = p(z).eval(x, y);
        dy = q(z).eval(x, y);
    }
};

} // namespace pwqh
