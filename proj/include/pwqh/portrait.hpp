#pragma once

#include <string>
#include <vector>

#include "pwqh/canonical.hpp"

namespace pwqh {

enum class Chart { U1, U2, U3 };

// One zone field pushed to a local chart of the sphere compactification, with
// the z denominators cleared. The U3 chart is the field itself.
struct ChartField {
    Chart chart;
    BiPoly u_dot, z_dot; // polynomials in (u, z)
};

// Chart expressions for a polynomial field (P, Q) of degree n:
//   U1: u' = z^n [ -u P(1/z, u/z) + Q(1/z, u/z) ],  z' = -z^(n+1) P(1/z, u/z)
//   U2: u' = z^n [ P(u/z, 1/z) - u Q(u/z, 1/z) ],   z' = -z^(n+1) Q(u/z, 1/z)
ChartField chart_transform(const BiPoly& p, const BiPoly& q, Chart chart, int degree);

enum class InfinityLocation { x_axis_end, y_axis_end, whole_equator };
enum class InfinityType {
    node,
    saddle,
    hyperbolic_elliptic, // one hyperbolic and one elliptic sector
    two_elliptic_one_parabolic,
    two_hyperbolic_two_parabolic,
    two_hyperbolic_four_parabolic,
    equator_of_singularities,
};

std::string infinity_location_name(InfinityLocation l);
std::string infinity_type_name(InfinityType t);

struct InfinityEquilibrium {
    Zone zone;
    InfinityLocation location;
    InfinityType type;
};

// Equilibria at infinity of each zone, typed from the parameter signs.
std::vector<InfinityEquilibrium> infinity_equilibria(const CanonicalForm& form);

// One of the 8 / 64 / 36 sign cases of the three families. The signature is
// the ordered tuple of classifying signs (-1, 0, +1 entries); it determines
// case_id bijectively.
struct PortraitCase {
    Variant variant;
    std::vector<int> signature;
    int case_id;
    std::vector<InfinityEquilibrium> infinity;
    bool has_center;
};

PortraitCase classify_case(const CanonicalForm& form);

struct RenderOptions {
    int grid = 12;          // seeds per axis on the seed lattice
    double radius = 4.0;    // clip disk radius
    double tol = 1e-8;      // integration tolerance for trajectories
    long step_budget = 5000000;
    int size_px = 640;      // output width = height
};

// Deterministic SVG phase portrait: grid-seeded trajectories clipped to a
// disk, the switching line with sliding segments styled distinctly, and the
// case metadata embedded as a JSON <desc> blob. Identical inputs give
// byte-identical output.
std::string render(const CanonicalForm& form, const RenderOptions& opts = {});

} // namespace pwqh
