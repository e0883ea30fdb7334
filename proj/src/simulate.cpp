#include "pwqh/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <future>
#include <thread>

#include "pwqh/center.hpp"
#include "pwqh/filippov.hpp"

namespace pwqh {
namespace {

using Vec2 = std::array<double, 2>;

Vec2 operator+(Vec2 a, Vec2 b) { return {a[0] + b[0], a[1] + b[1]}; }
Vec2 operator*(double s, Vec2 a) { return {s * a[0], s * a[1]}; }

// Dormand-Prince 5(4) pair with the Hairer quartic dense-output extension.
struct Dopri5 {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                            a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                            a75 = -2187.0 / 6784, a76 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
    static constexpr double d1 = -12715105075.0 / 11282082432.0,
                            d3 = 87487479700.0 / 32700410799.0,
                            d4 = -10690763975.0 / 1880347072.0,
                            d5 = 701980252875.0 / 199316789632.0,
                            d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;
};

struct DenseSegment {
    double t0 = 0, h = 0;
    Vec2 r1{}, r2{}, r3{}, r4{}, r5{};

    Vec2 eval(double t) const {
        const double th = (t - t0) / h;
        Vec2 out;
        for (int i = 0; i < 2; ++i)
            out[i] = r1[i] + th * (r2[i] + (1.0 - th) * (r3[i] + th * (r4[i] + (1.0 - th) * r5[i])));
        return out;
    }
};

struct ZoneRhs {
    const PiecewiseField* field;
    Zone zone;
    Vec2 operator()(const Vec2& s) const {
        Vec2 f;
        field->eval_zone(zone, s[0], s[1], f[0], f[1]);
        return f;
    }
};

double initial_step(const ZoneRhs& rhs, const Vec2& y, double rtol, double tmax_span) {
    const Vec2 f = rhs(y);
    const double d0 = std::hypot(y[0], y[1]);
    const double d1 = std::hypot(f[0], f[1]);
    double h = (d1 > 1e-10) ? 0.01 * std::max(d0, 1.0) / d1 : 1e-6;
    h = std::min({h, 0.1 * tmax_span, 1.0});
    // refine with a cheap curvature probe
    const Vec2 y1 = y + h * f;
    const Vec2 f1 = rhs(y1);
    const double d2 = std::hypot(f1[0] - f[0], f1[1] - f[1]) / h;
    const double der = std::max(d1, d2);
    if (der > 1e-15) h = std::min(h, std::pow(0.01 * rtol / 1e-10 / der, 0.2));
    return std::max(h, 1e-12);
}

struct Stepper {
    ZoneRhs rhs;
    double rtol, atol;
    double t = 0;
    Vec2 y{};
    Vec2 k1{};
    double h = 1e-6;
    double err_old = 1e-4;
    DenseSegment seg;

    void prime() { k1 = rhs(y); }

    // One accepted adaptive step; fills the dense segment. Returns false when
    // the error control cannot make progress (step underflow).
    bool step(double t_end) {
        for (int attempt = 0; attempt < 80; ++attempt) {
            double hs = std::min(h, t_end - t);
            if (hs <= 1e-15 * std::max(1.0, std::abs(t))) {
                // forcibly land on t_end
                t = t_end;
                return true;
            }
            using D = Dopri5;
            const Vec2 k2 = rhs(y + hs * (D::a21 * k1));
            const Vec2 k3 = rhs(y + hs * (D::a31 * k1 + D::a32 * k2));
            const Vec2 k4 = rhs(y + hs * (D::a41 * k1 + D::a42 * k2 + D::a43 * k3));
            const Vec2 k5 = rhs(y + hs * (D::a51 * k1 + D::a52 * k2 + D::a53 * k3 + D::a54 * k4));
            const Vec2 k6 = rhs(y + hs * (D::a61 * k1 + D::a62 * k2 + D::a63 * k3 + D::a64 * k4 +
                                          D::a65 * k5));
            const Vec2 ynew = y + hs * (D::a71 * k1 + D::a73 * k3 + D::a74 * k4 + D::a75 * k5 +
                                        D::a76 * k6);
            const Vec2 k7 = rhs(ynew);

            double err = 0.0;
            for (int i = 0; i < 2; ++i) {
                const double ei = hs * (D::e1 * k1[i] + D::e3 * k3[i] + D::e4 * k4[i] +
                                        D::e5 * k5[i] + D::e6 * k6[i] + D::e7 * k7[i]);
                const double sk = atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
                err += (ei / sk) * (ei / sk);
            }
            err = std::sqrt(0.5 * err);

            if (err <= 1.0 || hs <= 1e-14 * std::max(1.0, std::abs(t))) {
                // dense coefficients
                seg.t0 = t;
                seg.h = hs;
                for (int i = 0; i < 2; ++i) {
                    const double ydiff = ynew[i] - y[i];
                    const double bspl = hs * k1[i] - ydiff;
                    seg.r1[i] = y[i];
                    seg.r2[i] = ydiff;
                    seg.r3[i] = bspl;
                    seg.r4[i] = ydiff - hs * k7[i] - bspl;
                    seg.r5[i] = hs * (D::d1 * k1[i] + D::d3 * k3[i] + D::d4 * k4[i] +
                                      D::d5 * k5[i] + D::d6 * k6[i] + D::d7 * k7[i]);
                }
                t += hs;
                y = ynew;
                k1 = k7; // FSAL
                // PI step-size controller
                const double e = std::max(err, 1e-32);
                double fac = 0.9 * std::pow(e, -0.2) * std::pow(err_old, 0.04);
                fac = std::clamp(fac, 0.2, 10.0);
                h = hs * fac;
                err_old = std::max(e, 1e-4);
                return true;
            }
            h = hs * std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.5);
        }
        return false;
    }
};

// Bisect the dense output for the y = 0 contact inside (t_lo, t_hi].
double locate_crossing(const DenseSegment& seg, double t_lo, double t_hi, double y_lo) {
    double a = t_lo, b = t_hi, fa = y_lo;
    for (int it = 0; it < 120; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = seg.eval(m)[1];
        if (std::abs(fm) < 1e-13 || b - a < 1e-15 * std::max(1.0, std::abs(b))) return m;
        if ((fa < 0) == (fm < 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

int env_thread_cap() {
    if (const char* s = std::getenv("PWQH_THREADS")) {
        const int v = std::atoi(s);
        if (v >= 1) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(std::min(hc, 8u));
}

} // namespace

std::string event_kind_name(EventKind k) {
    switch (k) {
        case EventKind::crossing: return "crossing";
        case EventKind::sliding_contact: return "sliding-contact";
        case EventKind::equilibrium_stop: return "equilibrium-stop";
        case EventKind::budget_stop: return "budget-stop";
    }
    return "?";
}

Trajectory integrate(const PiecewiseField& f, Vec2 x0, double tmax, const IntegrateOptions& opt) {
    Trajectory traj;
    const double rtol = std::max(1e-13, 0.01 * opt.tol);

    Zone zone;
    if (x0[1] > 0.0) {
        zone = Zone::upper;
    } else if (x0[1] < 0.0) {
        zone = Zone::lower;
    } else {
        if (sigma_at(f, x0[0]) <= 0.0)
            throw StartOnSlidingError("initial point lies on the sliding set");
        zone = f.upper_q.eval(x0[0], 0.0) > 0.0 ? Zone::upper : Zone::lower;
    }

    Stepper st;
    st.rhs = {&f, zone};
    st.rtol = st.atol = rtol;
    st.y = x0;
    st.prime();
    st.h = initial_step(st.rhs, st.y, rtol, tmax);

    traj.samples.push_back({0.0, x0[0], x0[1]});

    long steps = 0;
    int crossings = 0;
    const double zone_sign = zone == Zone::upper ? 1.0 : -1.0;
    double zsign = zone_sign;

    auto zone_flip = [&](Zone z) { return z == Zone::upper ? Zone::lower : Zone::upper; };

    while (st.t < tmax) {
        if (tmax - st.t <= 1e-14 * std::max(1.0, std::abs(st.t))) break;
        if (++steps > opt.max_steps) {
            traj.events.push_back({st.t, st.y[0], EventKind::budget_stop});
            traj.steps_used = steps;
            return traj;
        }
        traj.steps_used = steps;
        const double t_prev = st.t;
        const Vec2 y_prev = st.y;
        if (!st.step(tmax)) {
            traj.events.push_back({st.t, st.y[0], EventKind::budget_stop});
            return traj;
        }
        if (st.t == t_prev) break; // landed exactly on tmax

        // scan the dense output for the first sign change against the zone
        bool crossed = false;
        double t_cross = 0.0;
        double t_lo = t_prev;
        double y_lo = y_prev[1] != 0.0 ? y_prev[1] : zsign * 1e-300;
        for (int s = 1; s <= 8; ++s) {
            const double tt = t_prev + (st.t - t_prev) * (s / 8.0);
            const double yy = s == 8 ? st.y[1] : st.seg.eval(tt)[1];
            if (yy != 0.0 && (yy < 0) != (zsign < 0)) {
                t_cross = locate_crossing(st.seg, t_lo, tt, y_lo);
                crossed = true;
                break;
            }
            t_lo = tt;
            if (yy != 0.0) y_lo = yy;
        }

        if (crossed) {
            const double xc = st.seg.eval(t_cross)[0];
            traj.samples.push_back({t_cross, xc, 0.0});
            if (sigma_at(f, xc) <= 0.0) {
                traj.events.push_back({t_cross, xc, EventKind::sliding_contact});
                return traj;
            }
            traj.events.push_back({t_cross, xc, EventKind::crossing});
            if (opt.max_crossings >= 0 && ++crossings >= opt.max_crossings) return traj;

            zone = zone_flip(zone);
            zsign = -zsign;
            st.rhs.zone = zone;
            st.t = t_cross;
            st.y = {xc, 0.0};
            st.prime();
            st.h = std::min(st.h, initial_step(st.rhs, st.y, rtol, tmax - t_cross));
            continue;
        }

        traj.samples.push_back({st.t, st.y[0], st.y[1]});

        // asymptotic contact with the axis (no sign change)
        const double contact_tol = 1e-12 * (1.0 + std::abs(st.y[0]));
        if (std::abs(st.y[1]) <= contact_tol && sigma_at(f, st.y[0]) <= 0.0) {
            traj.events.push_back({st.t, st.y[0], EventKind::sliding_contact});
            return traj;
        }
        const Vec2 fv = st.rhs(st.y);
        const double fscale = 1e-13 * (1.0 + std::hypot(st.y[0], st.y[1]));
        if (std::hypot(fv[0], fv[1]) < fscale) {
            traj.events.push_back({st.t, st.y[0], EventKind::equilibrium_stop});
            return traj;
        }
        if (std::hypot(st.y[0], st.y[1]) > opt.escape_radius || !std::isfinite(st.y[0]) ||
            !std::isfinite(st.y[1])) {
            traj.events.push_back({st.t, st.y[0], EventKind::budget_stop});
            return traj;
        }
    }
    traj.reached_tmax = true;
    return traj;
}

Trajectory integrate(const PiecewiseField& f, Vec2 x0, double tmax, double tol) {
    IntegrateOptions opt;
    opt.tol = tol;
    return integrate(f, x0, tmax, opt);
}

PiecewiseField perturbed_field(const FormI& form, const PerturbationSpec& pert, double eps) {
    pert.validate();
    auto poly_of = [&](const std::map<std::pair<int, int>, double>& fam) {
        BiPoly p;
        for (const auto& [k, c] : fam) p.add_term(k.first, k.second, eps * c);
        return p;
    };
    const PiecewiseField base = canonical_field(CanonicalForm(form));
    return PiecewiseField(base.upper_p + poly_of(pert.c_plus), base.upper_q + poly_of(pert.d_plus),
                          base.lower_p + poly_of(pert.c_minus),
                          base.lower_q + poly_of(pert.d_minus));
}

DisplacementSample displacement(const FormI& form, const PerturbationSpec& pert, double h,
                                double eps) {
    if (!is_center(form)) throw NotACenterError("displacement requires the center condition");
    if (!(h > 0.0)) throw NoReturnError("level h must be positive");

    const PiecewiseField field = perturbed_field(form, pert, eps);
    const double xa = std::sqrt(h / form.b1);

    IntegrateOptions opt;
    opt.tol = 1e-10;
    opt.max_crossings = 2;
    opt.escape_radius = 1e6 * std::max(1.0, xa);
    const double tmax = 6.0 * period_closed_form(form, xa).T + 10.0;

    const Trajectory traj = integrate(field, {xa, 0.0}, tmax, opt);
    int crossings = 0;
    for (const auto& ev : traj.events) {
        if (ev.kind != EventKind::crossing) continue;
        if (++crossings == 2) {
            if (!(ev.x > 0.0)) throw NoReturnError("perturbed orbit returned on the wrong side");
            return {h, eps, form.b1 * ev.x * ev.x - h};
        }
    }
    throw NoReturnError("perturbed orbit escaped before completing a revolution");
}

LimitCycleScan find_limit_cycles(const FormI& form, const PerturbationSpec& pert, double eps,
                                 std::pair<double, double> h_range, int grid) {
    if (!is_center(form)) throw NotACenterError("limit cycle scan requires the center condition");
    if (eps == 0.0) throw NoReturnError("eps must be nonzero");
    if (grid < 2) grid = 2;
    const double llo = std::log(h_range.first), lhi = std::log(h_range.second);

    std::vector<double> hs(static_cast<std::size_t>(grid));
    for (int i = 0; i < grid; ++i) hs[size_t(i)] = std::exp(llo + (lhi - llo) * i / (grid - 1));

    LimitCycleScan scan;
    std::vector<double> d(hs.size());
    std::vector<char> ok(hs.size(), 0);

    auto eval_at = [&](double h, double& out) {
        try {
            out = displacement(form, pert, h, eps).d;
            return true;
        } catch (const NoReturnError&) {
            return false;
        }
    };

    const int threads = std::min<int>(env_thread_cap(), grid);
    if (threads > 1) {
        std::vector<std::future<void>> futs;
        std::atomic<std::size_t> next{0};
        for (int w = 0; w < threads; ++w)
            futs.push_back(std::async(std::launch::async, [&] {
                for (std::size_t i = next++; i < hs.size(); i = next++)
                    ok[i] = eval_at(hs[i], d[i]) ? 1 : 0;
            }));
        for (auto& fu : futs) fu.get();
    } else {
        for (std::size_t i = 0; i < hs.size(); ++i) ok[i] = eval_at(hs[i], d[i]) ? 1 : 0;
    }
    for (char o : ok)
        if (!o) ++scan.warnings;

    // below this the measured displacement is integration noise, not a sign
    auto noise_floor = [](double h) { return 1e-10 * std::max(1.0, h); };

    for (std::size_t i = 0; i + 1 < hs.size(); ++i) {
        if (!ok[i] || !ok[i + 1]) continue;
        if (std::abs(d[i]) <= noise_floor(hs[i]) || std::abs(d[i + 1]) <= noise_floor(hs[i + 1]))
            continue;
        if ((d[i] < 0) == (d[i + 1] < 0)) continue;
        double a = hs[i], b = hs[i + 1], fa = d[i];
        bool lost = false;
        while (b - a > 1e-6 * std::max(1.0, b)) {
            const double m = 0.5 * (a + b);
            double fm;
            if (!eval_at(m, fm)) {
                ++scan.warnings;
                lost = true;
                break;
            }
            if (std::abs(fm) <= noise_floor(m)) {
                a = b = m; // inside the noise band: accept the midpoint
                break;
            }
            if ((fa < 0) == (fm < 0)) {
                a = m;
                fa = fm;
            } else {
                b = m;
            }
        }
        if (!lost) scan.zeros.push_back(0.5 * (a + b));
    }
    std::sort(scan.zeros.begin(), scan.zeros.end());
    return scan;
}

} // namespace pwqh
