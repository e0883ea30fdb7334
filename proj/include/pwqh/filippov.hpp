#pragma once

#include <vector>

#include "pwqh/field.hpp"

namespace pwqh {

// Symbolic subset of the switching line y = 0, described over the x coordinate.
struct AxisSet {
    enum class Kind { empty, whole_axis, points, axis_minus_points, intervals };

    Kind kind = Kind::empty;
    // points: the finite set itself (kind points) or the removed set
    // (kind axis_minus_points) or isolated extras (kind intervals).
    std::vector<double> points;
    // open intervals, possibly unbounded (quiet +-inf endpoints)
    std::vector<std::pair<double, double>> intervals;

    bool contains(double x) const;

    static AxisSet empty_set() { return {}; }
    static AxisSet whole() { return {Kind::whole_axis, {}, {}}; }
};

// Singular sliding points: solutions of Q^-(x,0) - Q^+(x,0) = 0 inside the
// sliding set. When the equation holds identically on a sliding set with
// interior, the points are non-isolated and flagged as all_of_sliding.
struct SingularSet {
    bool all_of_sliding = false;
    std::vector<double> points; // the isolated solutions otherwise
};

struct SwitchingAnalysis {
    AxisSet crossing; // sigma > 0
    AxisSet sliding;  // sigma <= 0
    SingularSet singular;
    std::vector<double> boundary_equilibria; // singular points where both zone fields vanish
    bool boundary_equilibria_whole_axis = false;
};

// sigma(x) = Q^+(x,0) Q^-(x,0), the product of normal components along y = 0.
double sigma_at(const PiecewiseField& f, double x);

// Crossing/sliding decomposition of the x-axis by exact sign analysis of the
// univariate polynomial sigma, plus the singular sliding points.
SwitchingAnalysis switching_analysis(const PiecewiseField& f);

} // namespace pwqh
