#pragma once

#include <string>
#include <utility>

#include "pwqh/canonical.hpp"

namespace pwqh {

enum class CenterReason { FormIConditionMet, FormICondFail, FormIINoCenter, FormIIINoCenter };

std::string center_reason_name(CenterReason r);

struct CenterReport {
    bool is_center = false;
    CenterReason reason = CenterReason::FormICondFail;
    bool global = false;
    bool isochronous = false;
};

// a1 < 0, b1 > 0, a1_tilde > 0
bool is_center(const FormI& f);

// Center decision: only Form I with a1 < 0, b1 > 0, a1_tilde > 0 has one, and
// that center is global and not isochronous.
CenterReport center_report(const CanonicalForm& form);

// Half and full Poincare return maps on the positive x-axis, derived from the
// level sets of the two zone first integrals. Both equal r identically.
std::pair<double, double> exact_return_maps(const FormI& f, double r);

// Return map by event-detecting integration of one full revolution; returns
// the x coordinate of the second crossing (the positive-x return point).
double numeric_return_map(const FormI& f, double r, double tol);

struct PeriodValue {
    double r0;
    double T;
    double beta0;
};

// beta0 in T(r0) = beta0 r0^(-1/3), from the Gamma-function closed form with
// the real cube root on the negative parameter a1.
double period_beta0(const FormI& f);

// Closed-form period of the orbit through (r0, 0).
PeriodValue period_closed_form(const FormI& f, double r0);

// Period by tanh-sinh quadrature of dt = dx / (a y^2) over both half-orbits;
// independent of the closed form.
double period_numeric(const FormI& f, double r0, double tol = 1e-10);

} // namespace pwqh
