#include "pwqh/portrait.hpp"

#include <cmath>

#include "pwqh/center.hpp"

namespace pwqh {
namespace {

int sgn(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

int require_sign(double v, const char* what) {
    const int s = sgn(v);
    if (s == 0)
        throw DegenerateParameterError(std::string("classifying quantity is zero: ") + what);
    return s;
}

// z^n P(1/z, u/z) as a polynomial in (u, z)
BiPoly homogenize_u1(const BiPoly& p, int n) {
    BiPoly out;
    for (const auto& [k, c] : p.terms()) {
        if (k.first + k.second > n)
            throw DegreeMismatchError("field degree exceeds the chart degree");
        out.add_term(k.second, n - k.first - k.second, c);
    }
    return out;
}

// z^n P(u/z, 1/z) as a polynomial in (u, z)
BiPoly homogenize_u2(const BiPoly& p, int n) {
    BiPoly out;
    for (const auto& [k, c] : p.terms()) {
        if (k.first + k.second > n)
            throw DegreeMismatchError("field degree exceeds the chart degree");
        out.add_term(k.first, n - k.first - k.second, c);
    }
    return out;
}

InfinityType form_iii_end_type(double a31, double b3) {
    const double prod = a31 * b3;
    if (prod < 0.0) return InfinityType::two_elliptic_one_parabolic;
    if (prod <= 2.0 * b3 * b3) return InfinityType::two_hyperbolic_two_parabolic;
    return InfinityType::two_hyperbolic_four_parabolic;
}

void form_ii_zone_equilibria(Zone zone, double a2, double b22,
                             std::vector<InfinityEquilibrium>& out) {
    if (b22 == a2) {
        out.push_back({zone, InfinityLocation::whole_equator,
                       InfinityType::equator_of_singularities});
        return;
    }
    const double diff = b22 - a2;
    out.push_back({zone, InfinityLocation::x_axis_end,
                   diff * a2 > 0.0 ? InfinityType::saddle : InfinityType::hyperbolic_elliptic});
    out.push_back({zone, InfinityLocation::y_axis_end,
                   diff * b22 < 0.0 ? InfinityType::saddle : InfinityType::node});
}

} // namespace

std::string infinity_location_name(InfinityLocation l) {
    switch (l) {
        case InfinityLocation::x_axis_end: return "x-axis-end";
        case InfinityLocation::y_axis_end: return "y-axis-end";
        case InfinityLocation::whole_equator: return "whole-equator";
    }
    return "?";
}

std::string infinity_type_name(InfinityType t) {
    switch (t) {
        case InfinityType::node: return "node";
        case InfinityType::saddle: return "saddle";
        case InfinityType::hyperbolic_elliptic: return "hyperbolic+elliptic";
        case InfinityType::two_elliptic_one_parabolic: return "two-elliptic-one-parabolic";
        case InfinityType::two_hyperbolic_two_parabolic: return "two-hyperbolic-two-parabolic";
        case InfinityType::two_hyperbolic_four_parabolic: return "two-hyperbolic-four-parabolic";
        case InfinityType::equator_of_singularities: return "equator-of-singularities";
    }
    return "?";
}

ChartField chart_transform(const BiPoly& p, const BiPoly& q, Chart chart, int degree) {
    ChartField out;
    out.chart = chart;
    switch (chart) {
        case Chart::U1: {
            const BiPoly hp = homogenize_u1(p, degree), hq = homogenize_u1(q, degree);
            out.u_dot = hq - BiPoly::monomial(1, 0, 1.0) * hp;
            out.z_dot = (BiPoly::monomial(0, 1, 1.0) * hp).scaled(-1.0);
            break;
        }
        case Chart::U2: {
            const BiPoly hp = homogenize_u2(p, degree), hq = homogenize_u2(q, degree);
            out.u_dot = hp - BiPoly::monomial(1, 0, 1.0) * hq;
            out.z_dot = (BiPoly::monomial(0, 1, 1.0) * hq).scaled(-1.0);
            break;
        }
        case Chart::U3:
            out.u_dot = p;
            out.z_dot = q;
            break;
    }
    return out;
}

std::vector<InfinityEquilibrium> infinity_equilibria(const CanonicalForm& form) {
    std::vector<InfinityEquilibrium> out;
    switch (form.variant()) {
        case Variant::I:
            // both zone fields have their only equilibria at the x-axis ends,
            // and those are nodes
            out.push_back({Zone::upper, InfinityLocation::x_axis_end, InfinityType::node});
            out.push_back({Zone::lower, InfinityLocation::x_axis_end, InfinityType::node});
            break;
        case Variant::II: {
            const FormII f = form.form_ii();
            form_ii_zone_equilibria(Zone::upper, f.a2, f.b22, out);
            form_ii_zone_equilibria(Zone::lower, f.a2_tilde, 1.0, out);
            break;
        }
        case Variant::III: {
            const FormIII f = form.form_iii();
            out.push_back({Zone::upper, InfinityLocation::x_axis_end,
                           form_iii_end_type(f.a31, f.b3)});
            out.push_back({Zone::lower, InfinityLocation::x_axis_end,
                           form_iii_end_type(f.a31_tilde, 1.0)});
            break;
        }
    }
    return out;
}

PortraitCase classify_case(const CanonicalForm& form) {
    PortraitCase out;
    out.variant = form.variant();
    out.infinity = infinity_equilibria(form);
    out.has_center = false;

    switch (form.variant()) {
        case Variant::I: {
            const FormI f = form.form_i();
            const int sb = require_sign(f.b1, "b1");
            const int sa = require_sign(f.a1, "a1");
            const int st = require_sign(f.a1_tilde, "a1_tilde");
            out.signature = {sb, sa, st};
            // per-block order: (a1,at1) = (+,+), (+,-), (-,-), (-,+)
            const int idx = sa > 0 ? (st > 0 ? 0 : 1) : (st < 0 ? 2 : 3);
            out.case_id = (sb > 0 ? 0 : 4) + idx + 1;
            out.has_center = sb > 0 && sa < 0 && st > 0;
            break;
        }
        case Variant::II: {
            const FormII f = form.form_ii();
            const int sb21 = require_sign(f.b21, "b21");
            const int sb22 = require_sign(f.b22, "b22");
            const int sa2 = require_sign(f.a2, "a2");
            const int sat = require_sign(f.a2_tilde, "a2_tilde");
            const int tdiff = sgn(f.b22 - f.a2);
            const int tam1 = sgn(f.a2_tilde - 1.0);
            out.signature = {sb21, tdiff, sb22, sa2, sat, tam1};

            // eight (b22-a2, b22, a2) sign classes in a fixed order
            static const int upper_table[8][3] = {
                {+1, +1, +1}, {+1, +1, -1}, {+1, -1, -1}, {0, +1, +1},
                {0, -1, -1},  {-1, +1, +1}, {-1, -1, +1}, {-1, -1, -1},
            };
            int upper_idx = -1;
            for (int i = 0; i < 8; ++i)
                if (upper_table[i][0] == tdiff && upper_table[i][1] == sb22 &&
                    upper_table[i][2] == sa2)
                    upper_idx = i;
            // four (a2_tilde, a2_tilde-1) sign classes
            static const int lower_table[4][2] = {{+1, +1}, {+1, 0}, {+1, -1}, {-1, -1}};
            int lower_idx = -1;
            for (int i = 0; i < 4; ++i)
                if (lower_table[i][0] == sat && lower_table[i][1] == tam1) lower_idx = i;
            if (upper_idx < 0 || lower_idx < 0)
                throw DegenerateParameterError("inconsistent Form II sign tuple");
            out.case_id = (sb21 > 0 ? 0 : 32) + upper_idx * 4 + lower_idx + 1;
            break;
        }
        case Variant::III: {
            const FormIII f = form.form_iii();
            const int sa31 = require_sign(f.a31, "a31");
            const int sb3 = require_sign(f.b3, "b3");
            const int sa32 = require_sign(f.a32, "a32");
            const int sat = require_sign(f.a31_tilde, "a31_tilde");
            const int tgap = sgn(f.a31 - 2.0 * f.b3);
            const int tam2 = sgn(f.a31_tilde - 2.0);
            out.signature = {sa31, sb3, tgap, sa32, sat, tam2};

            // a31_tilde ranges in table order: > 2, (0, 2], < 0
            const int acls = (sat > 0 && tam2 > 0) ? 0 : (sat > 0 ? 1 : 2);
            int base, sub;
            if (sa31 < 0 && sb3 < 0) {
                const bool geq = f.a31 >= 2.0 * f.b3;
                // rows 1-6: a31 >= 2 b3 with a32 < 0 then a32 > 0;
                // rows 7-12: a31 < 2 b3 with a32 > 0 then a32 < 0
                base = 0;
                sub = geq ? (sa32 < 0 ? 0 : 1) : (sa32 > 0 ? 2 : 3);
            } else if (sa31 > 0 && sb3 > 0) {
                const bool leq = f.a31 <= 2.0 * f.b3;
                // rows 13-18: a31 <= 2 b3 with a32 < 0 then a32 > 0;
                // rows 19-24: a31 > 2 b3 likewise
                base = 12;
                sub = leq ? (sa32 < 0 ? 0 : 1) : (sa32 < 0 ? 2 : 3);
            } else if (sa31 > 0 && sb3 < 0) {
                base = 24;
                sub = sa32 < 0 ? 0 : 1;
            } else {
                base = 30;
                sub = sa32 < 0 ? 0 : 1;
            }
            out.case_id = base + sub * 3 + acls + 1;
            break;
        }
    }
    return out;
}

} // namespace pwqh
