#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pwqh/filippov.hpp"
#include "pwqh/portrait.hpp"
#include "pwqh/simulate.hpp"

namespace pwqh {
namespace {

struct Mapper {
    double radius;
    double size;
    double pad = 12.0;

    double sx(double x) const { return 0.5 * size + x * (0.5 * size - pad) / radius; }
    double sy(double y) const { return 0.5 * size - y * (0.5 * size - pad) / radius; }
};

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    // avoid the "-0.000" artifact
    if (std::string(buf) == "-0.000") return "0.000";
    return buf;
}

struct SvgPath {
    std::vector<std::pair<double, double>> pts; // plane coordinates
    bool closed = false;
    const char* cls = "orbit";
};

// Split a polyline into the parts inside the disk of the given radius,
// interpolating the boundary crossings.
std::vector<std::vector<std::pair<double, double>>> clip_to_disk(
    const std::vector<std::pair<double, double>>& pts, double radius) {
    std::vector<std::vector<std::pair<double, double>>> runs;
    std::vector<std::pair<double, double>> cur;
    auto inside = [&](const std::pair<double, double>& p) {
        return p.first * p.first + p.second * p.second <= radius * radius;
    };
    auto boundary_point = [&](const std::pair<double, double>& a,
                              const std::pair<double, double>& b) {
        // solve |a + t (b-a)| = radius on t in [0,1] by bisection
        double lo = 0.0, hi = 1.0;
        const bool a_in = inside(a);
        for (int i = 0; i < 40; ++i) {
            const double m = 0.5 * (lo + hi);
            const std::pair<double, double> p{a.first + m * (b.first - a.first),
                                              a.second + m * (b.second - a.second)};
            if (inside(p) == a_in) lo = m; else hi = m;
        }
        const double m = 0.5 * (lo + hi);
        return std::pair<double, double>{a.first + m * (b.first - a.first),
                                         a.second + m * (b.second - a.second)};
    };
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const bool in = inside(pts[i]);
        if (in) {
            if (cur.empty() && i > 0 && !inside(pts[i - 1]))
                cur.push_back(boundary_point(pts[i - 1], pts[i]));
            cur.push_back(pts[i]);
        } else if (!cur.empty()) {
            cur.push_back(boundary_point(pts[i - 1], pts[i]));
            runs.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) runs.push_back(std::move(cur));
    return runs;
}

void emit_path(std::ostringstream& os, const Mapper& map,
               const std::vector<std::pair<double, double>>& pts, bool closed, const char* cls) {
    if (pts.size() < 2) return;
    os << "<path class=\"" << cls << "\" d=\"M";
    double lastx = 1e300, lasty = 1e300;
    bool first = true;
    for (const auto& [x, y] : pts) {
        const double px = map.sx(x), py = map.sy(y);
        // thin points closer than half a pixel
        if (!first && std::abs(px - lastx) < 0.5 && std::abs(py - lasty) < 0.5) continue;
        if (!first) os << " L";
        os << fmt(px) << " " << fmt(py);
        lastx = px;
        lasty = py;
        first = false;
    }
    if (closed) os << " Z";
    os << "\"/>\n";
}

} // namespace

std::string render(const CanonicalForm& form, const RenderOptions& opts) {
    const PiecewiseField field = canonical_field(form);
    const PortraitCase pc = classify_case(form);
    const SwitchingAnalysis sw = switching_analysis(field);
    const double R = opts.radius;
    const Mapper map{R, double(opts.size_px)};

    // --- seeds: lattice plus chart pullbacks toward infinity, fixed order
    std::vector<std::pair<double, double>> seeds;
    for (int i = 0; i < opts.grid; ++i) {
        for (int j = 0; j < opts.grid; ++j) {
            const double x = -R + 2.0 * R * i / (opts.grid - 1);
            const double y = -R + 2.0 * R * j / (opts.grid - 1);
            if (std::abs(y) < 1e-9) continue; // never seed on the switching line
            seeds.emplace_back(x, y);
        }
    }
    const double z0 = 0.05;
    std::set<InfinityLocation> locs;
    for (const auto& eq : pc.infinity) locs.insert(eq.location);
    for (int k = 0; k < 8; ++k) {
        const double u = -0.2 + 0.4 * k / 7.0;
        if (locs.count(InfinityLocation::x_axis_end) || locs.count(InfinityLocation::whole_equator)) {
            seeds.emplace_back(1.0 / z0, u / z0);   // U1
            seeds.emplace_back(-1.0 / z0, -u / z0); // V1
        }
        if (locs.count(InfinityLocation::y_axis_end) || locs.count(InfinityLocation::whole_equator)) {
            seeds.emplace_back(u / z0, 1.0 / z0);   // U2
            seeds.emplace_back(-u / z0, -1.0 / z0); // V2
        }
    }

    PiecewiseField reversed(field.upper_p.scaled(-1.0), field.upper_q.scaled(-1.0),
                            field.lower_p.scaled(-1.0), field.lower_q.scaled(-1.0));

    long budget = opts.step_budget;
    IntegrateOptions iopt;
    iopt.tol = opts.tol;
    iopt.escape_radius = std::max(50.0, 3.0 / z0);
    iopt.max_crossings = 3;
    iopt.max_steps = 200000;

    std::vector<SvgPath> paths;
    std::vector<double> closed_levels; // dedupe closed orbits by start radius

    for (const auto& seed : seeds) {
        auto run = [&](const PiecewiseField& f, double tmax) -> Trajectory {
            Trajectory tr = integrate(f, {seed.first, seed.second}, tmax, iopt);
            budget -= tr.steps_used;
            if (budget < 0)
                throw RenderBudgetExceededError("render integration step budget exhausted");
            return tr;
        };

        const Trajectory fwd = run(field, 60.0);

        // closed-orbit check: crossings 1 and 3 land on the same axis point
        // exactly when the loop through the seed closes; the path is then
        // truncated at its closest approach to the seed after crossing 2
        std::size_t close_at = 0;
        bool closed = false;
        {
            std::vector<const TrajectoryEvent*> crossings;
            for (const auto& ev : fwd.events)
                if (ev.kind == EventKind::crossing) crossings.push_back(&ev);
            if (crossings.size() >= 3 &&
                std::abs(crossings[2]->x - crossings[0]->x) <
                    1e-4 * (1.0 + std::abs(crossings[0]->x))) {
                const double t_second = crossings[1]->t;
                double best = 1e300;
                for (std::size_t i = 0; i < fwd.samples.size(); ++i) {
                    if (fwd.samples[i][0] <= t_second) continue;
                    const double dist = std::hypot(fwd.samples[i][1] - seed.first,
                                                   fwd.samples[i][2] - seed.second);
                    if (dist < best) {
                        best = dist;
                        close_at = i;
                    }
                }
                closed = best < 1e300;
            }
        }

        std::vector<std::pair<double, double>> pts;
        for (std::size_t i = 0; i < fwd.samples.size(); ++i) {
            pts.emplace_back(fwd.samples[i][1], fwd.samples[i][2]);
            if (closed && i == close_at) break;
        }

        if (closed) {
            const double level = std::hypot(seed.first, seed.second);
            bool dup = false;
            for (double l : closed_levels)
                if (std::abs(l - level) < 1e-3 * (1.0 + level)) dup = true;
            bool all_inside = true;
            for (const auto& p : pts)
                if (p.first * p.first + p.second * p.second > R * R) all_inside = false;
            if (dup) continue;
            closed_levels.push_back(level);
            if (all_inside) {
                paths.push_back({std::move(pts), true, "orbit closed"});
                continue;
            }
        }

        for (auto& run_pts : clip_to_disk(pts, R)) paths.push_back({std::move(run_pts), false, "orbit"});

        const Trajectory bwd = run(reversed, 60.0);
        std::vector<std::pair<double, double>> bpts;
        for (const auto& s : bwd.samples) bpts.emplace_back(s[1], s[2]);
        for (auto& run_pts : clip_to_disk(bpts, R)) paths.push_back({std::move(run_pts), false, "orbit"});
    }

    // --- document
    nlohmann::json desc;
    desc["variant"] = variant_name(pc.variant);
    desc["case_id"] = pc.case_id;
    desc["params"] = form.params();
    desc["signature"] = pc.signature;
    desc["has_center"] = pc.has_center;

    std::ostringstream os;
    const int S = opts.size_px;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << S << "\" height=\"" << S
       << "\" viewBox=\"0 0 " << S << " " << S << "\">\n";
    os << "<desc>" << desc.dump() << "</desc>\n";
    os << "<style>.orbit{fill:none;stroke:#20507a;stroke-width:0.8}"
          ".closed{stroke:#1a7a3c}"
          ".axis-crossing{stroke:#888;stroke-width:0.8;stroke-dasharray:none}"
          ".axis-sliding{stroke:#c03020;stroke-width:3.0}"
          ".singular{fill:#c03020}.boundary-eq{fill:#000}</style>\n";
    os << "<circle cx=\"" << fmt(S / 2.0) << "\" cy=\"" << fmt(S / 2.0) << "\" r=\""
       << fmt(S / 2.0 - map.pad) << "\" fill=\"#ffffff\" stroke=\"#000\" stroke-width=\"1\"/>\n";

    // switching line, sliding parts styled distinctly
    auto emit_axis_segment = [&](double a, double b, bool sliding) {
        a = std::max(a, -R);
        b = std::min(b, R);
        if (!(a < b)) return;
        os << "<line class=\"" << (sliding ? "axis-sliding" : "axis-crossing") << "\" x1=\""
           << fmt(map.sx(a)) << "\" y1=\"" << fmt(map.sy(0)) << "\" x2=\"" << fmt(map.sx(b))
           << "\" y2=\"" << fmt(map.sy(0)) << "\"/>\n";
    };
    switch (sw.sliding.kind) {
        case AxisSet::Kind::whole_axis: emit_axis_segment(-R, R, true); break;
        case AxisSet::Kind::empty: emit_axis_segment(-R, R, false); break;
        case AxisSet::Kind::points: emit_axis_segment(-R, R, false); break;
        case AxisSet::Kind::axis_minus_points: emit_axis_segment(-R, R, true); break;
        case AxisSet::Kind::intervals: {
            emit_axis_segment(-R, R, false);
            for (const auto& [a, b] : sw.sliding.intervals) emit_axis_segment(a, b, true);
            break;
        }
    }
    for (const auto& p : paths) emit_path(os, map, p.pts, p.closed, p.cls);
    if (!sw.singular.all_of_sliding)
        for (double x : sw.singular.points)
            if (std::abs(x) <= R)
                os << "<circle class=\"singular\" cx=\"" << fmt(map.sx(x)) << "\" cy=\""
                   << fmt(map.sy(0)) << "\" r=\"3\"/>\n";
    for (double x : sw.boundary_equilibria)
        if (std::abs(x) <= R)
            os << "<circle class=\"boundary-eq\" cx=\"" << fmt(map.sx(x)) << "\" cy=\""
               << fmt(map.sy(0)) << "\" r=\"2\"/>\n";
    os << "</svg>\n";
    return os.str();
}

} // namespace pwqh
