#include "pwqh/center.hpp"

#include <cmath>

#include "pwqh/quadrature.hpp"
#include "pwqh/simulate.hpp"
#include "pwqh/specfun.hpp"

namespace pwqh {

std::string center_reason_name(CenterReason r) {
    switch (r) {
        case CenterReason::FormIConditionMet: return "FormIConditionMet";
        case CenterReason::FormICondFail: return "FormICondFail";
        case CenterReason::FormIINoCenter: return "FormIINoCenter";
        case CenterReason::FormIIINoCenter: return "FormIIINoCenter";
    }
    return "?";
}

bool is_center(const FormI& f) { return f.a1 < 0.0 && f.b1 > 0.0 && f.a1_tilde > 0.0; }

CenterReport center_report(const CanonicalForm& form) {
    CenterReport rep;
    switch (form.variant()) {
        case Variant::I:
            if (is_center(form.form_i())) {
                rep.is_center = true;
                rep.reason = CenterReason::FormIConditionMet;
                rep.global = true;
                rep.isochronous = false;
            } else {
                rep.reason = CenterReason::FormICondFail;
            }
            break;
        case Variant::II: rep.reason = CenterReason::FormIINoCenter; break;
        case Variant::III: rep.reason = CenterReason::FormIIINoCenter; break;
    }
    return rep;
}

std::pair<double, double> exact_return_maps(const FormI& f, double r) {
    if (!is_center(f)) throw NotACenterError("return maps require the center condition");
    // Upper half: H+(r,0) = H+(x,0) pins the landing level; the landing point
    // is (-p_plus, 0) and the polar radius there is p_plus.
    const double level_up = -0.5 * f.b1 * r * r;
    const double p_plus = std::sqrt(-2.0 * level_up / f.b1);
    // Lower half: H-(-p_plus, 0) = H-(x, 0).
    const double level_lo = -0.5 * p_plus * p_plus;
    const double p_full = std::sqrt(-2.0 * level_lo);
    return {p_plus, p_full};
}

double numeric_return_map(const FormI& f, double r, double tol) {
    if (!is_center(f)) throw NotACenterError("return maps require the center condition");
    if (!(r > 0.0)) throw IntegrationFailureError("radius must be positive");

    const PiecewiseField field = canonical_field(CanonicalForm(f));
    IntegrateOptions opt;
    opt.tol = tol;
    opt.max_crossings = 2;
    const double tmax = 4.0 * period_closed_form(f, r).T;
    const Trajectory traj = integrate(field, {r, 0.0}, tmax, opt);

    int crossings = 0;
    for (const auto& ev : traj.events) {
        if (ev.kind != EventKind::crossing) continue;
        if (++crossings == 2) {
            if (!(ev.x > 0.0))
                throw IntegrationFailureError("second crossing landed at non-positive x");
            return ev.x;
        }
    }
    throw IntegrationFailureError("orbit did not complete a revolution");
}

double period_beta0(const FormI& f) {
    if (!is_center(f)) throw NotACenterError("the period function requires the center condition");
    static const double pi = 3.14159265358979323846;
    const double c = std::pow(2.0 / 3.0, 5.0 / 3.0) * std::pow(pi, 1.5) * std::sqrt(3.0) /
                     (lanczos_gamma(2.0 / 3.0) * lanczos_gamma(5.0 / 6.0));
    // real cube root: a1 < 0 makes -a1^(-1/3) = |a1|^(-1/3) > 0
    const double a_term = -1.0 / real_cbrt(f.a1) * std::pow(f.b1, -2.0 / 3.0);
    const double at_term = std::pow(f.a1_tilde, -1.0 / 3.0);
    return c * (a_term + at_term);
}

PeriodValue period_closed_form(const FormI& f, double r0) {
    if (!(r0 > 0.0)) throw IntegrationFailureError("r0 must be positive");
    const double b0 = period_beta0(f);
    return {r0, b0 * std::pow(r0, -1.0 / 3.0), b0};
}

double period_numeric(const FormI& f, double r0, double tol) {
    if (!is_center(f)) throw NotACenterError("the period function requires the center condition");
    if (!(r0 > 0.0)) throw IntegrationFailureError("r0 must be positive");

    // On the upper arc y = cbrt(3 b1 (x^2 - r0^2) / (2 a1)), so
    // dt = dx/(a1 y^2) with an integrable (r0^2 - x^2)^(-2/3) endpoint
    // singularity; same below with (a1_tilde, 1). Both arcs traverse with
    // positive time, giving |.| integrands over (-r0, r0).
    const double cu = 3.0 * f.b1 / (2.0 * std::abs(f.a1));
    const double cl = 3.0 / (2.0 * f.a1_tilde);
    auto upper = [&](double x, double xc) {
        const double arg = cu * xc * (r0 + std::abs(x)); // cu (r0^2 - x^2)
        return 1.0 / (std::abs(f.a1) * std::pow(arg, 2.0 / 3.0));
    };
    auto lower = [&](double x, double xc) {
        const double arg = cl * xc * (r0 + std::abs(x));
        return 1.0 / (f.a1_tilde * std::pow(arg, 2.0 / 3.0));
    };
    const double t_up = tanh_sinh(upper, -r0, r0, tol);
    const double t_lo = tanh_sinh(lower, -r0, r0, tol);
    return t_up + t_lo;
}

} // namespace pwqh
