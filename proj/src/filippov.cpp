#include "pwqh/filippov.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "pwqh/polyroots.hpp"

namespace pwqh {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Poly poly_product(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Poly poly_diff(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return poly_trimmed(r);
}

} // namespace

bool AxisSet::contains(double x) const {
    auto is_point = [&](double p) { return x == p; };
    switch (kind) {
        case Kind::empty: return false;
        case Kind::whole_axis: return true;
        case Kind::points: return std::any_of(points.begin(), points.end(), is_point);
        case Kind::axis_minus_points:
            return std::none_of(points.begin(), points.end(), is_point);
        case Kind::intervals:
            if (std::any_of(points.begin(), points.end(), is_point)) return true;
            for (const auto& [a, b] : intervals)
                if (x > a && x < b) return true;
            return false;
    }
    return false;
}

double sigma_at(const PiecewiseField& f, double x) {
    return f.upper_q.eval(x, 0.0) * f.lower_q.eval(x, 0.0);
}

SwitchingAnalysis switching_analysis(const PiecewiseField& f) {
    SwitchingAnalysis out;

    const Poly sigma = poly_trimmed(poly_product(f.upper_q.restrict_y0(), f.lower_q.restrict_y0()));

    if (sigma.empty()) {
        out.crossing = AxisSet::empty_set();
        out.sliding = AxisSet::whole();
    } else {
        const auto roots = all_real_roots(sigma);
        std::vector<double> xs;
        for (const auto& r : roots) xs.push_back(r.x);

        // sign of sigma on each gap between consecutive roots
        std::vector<std::pair<double, double>> pos, neg;
        auto probe = [&](double a, double b) {
            double m;
            if (std::isinf(a) && std::isinf(b)) m = 0.0;
            else if (std::isinf(a)) m = b - 1.0 - std::abs(b);
            else if (std::isinf(b)) m = a + 1.0 + std::abs(a);
            else m = 0.5 * (a + b);
            return poly_eval(sigma, m);
        };
        double prev = -kInf;
        for (std::size_t i = 0; i <= xs.size(); ++i) {
            const double next = i < xs.size() ? xs[i] : kInf;
            (probe(prev, next) > 0.0 ? pos : neg).emplace_back(prev, next);
            prev = next;
        }
        if (pos.empty()) {
            out.crossing = AxisSet::empty_set();
            out.sliding = AxisSet::whole();
        } else if (neg.empty()) {
            // sigma >= 0 everywhere: crossing is the axis minus the roots
            if (xs.empty()) {
                out.crossing = AxisSet::whole();
                out.sliding = AxisSet::empty_set();
            } else {
                out.crossing = {AxisSet::Kind::axis_minus_points, xs, {}};
                out.sliding = {AxisSet::Kind::points, xs, {}};
            }
        } else {
            out.crossing = {AxisSet::Kind::intervals, {}, pos};
            // sliding = the open negative gaps plus every sigma = 0 point
            out.sliding = {AxisSet::Kind::intervals, xs, neg};
        }
    }

    // singular sliding points: Q^-(x,0) - Q^+(x,0) = 0 restricted to sliding
    const Poly diff = poly_diff(f.lower_q.restrict_y0(), f.upper_q.restrict_y0());
    if (diff.empty()) {
        switch (out.sliding.kind) {
            case AxisSet::Kind::empty: break;
            case AxisSet::Kind::points: out.singular.points = out.sliding.points; break;
            default: out.singular.all_of_sliding = true; break;
        }
    } else {
        for (const auto& r : all_real_roots(diff))
            if (sigma_at(f, r.x) <= 1e-14) out.singular.points.push_back(r.x);
    }

    // boundary equilibria: both zone fields vanish on the axis
    const std::array<Poly, 4> restr = {
        poly_trimmed(f.upper_p.restrict_y0()), poly_trimmed(f.upper_q.restrict_y0()),
        poly_trimmed(f.lower_p.restrict_y0()), poly_trimmed(f.lower_q.restrict_y0())};
    const Poly* lead = nullptr;
    for (const auto& p : restr)
        if (!p.empty()) {
            lead = &p;
            break;
        }
    if (lead == nullptr) {
        out.boundary_equilibria_whole_axis = true;
    } else {
        for (const auto& r : all_real_roots(*lead)) {
            bool common = true;
            for (const auto& p : restr)
                if (!p.empty() && std::abs(poly_eval(p, r.x)) > 1e-9 * std::max(1.0, std::abs(r.x)))
                    common = false;
            if (common) out.boundary_equilibria.push_back(r.x);
        }
    }
    return out;
}

} // namespace pwqh
