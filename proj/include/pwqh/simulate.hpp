#pragma once

#include <array>
#include <string>
#include <vector>

#include "pwqh/field.hpp"
#include "pwqh/melnikov.hpp"

namespace pwqh {

enum class EventKind { crossing, sliding_contact, equilibrium_stop, budget_stop };

std::string event_kind_name(EventKind k);

struct TrajectoryEvent {
    double t;
    double x; // on the switching line, y = 0
    EventKind kind;
};

// Event-annotated numerical orbit. Sample times are strictly increasing and
// the sign of y is constant between consecutive crossing events.
struct Trajectory {
    std::vector<std::array<double, 3>> samples; // (t, x, y)
    std::vector<TrajectoryEvent> events;
    bool reached_tmax = false;
    long steps_used = 0;
};

struct IntegrateOptions {
    double tol = 1e-10;        // target accuracy; the controller runs tighter
    long max_steps = 1000000;  // per call
    double escape_radius = 1e12;
    int max_crossings = -1;    // stop after this many crossings when >= 0
};

// Integrate the piecewise field from x0 with adaptive RK5(4), locating y = 0
// contacts on the dense output. At a contact with sigma > 0 the orbit
// concatenates into the opposite zone; at sigma <= 0 it stops with a
// sliding-contact event. Starting on the interior of the sliding set throws
// StartOnSlidingError.
Trajectory integrate(const PiecewiseField& f, std::array<double, 2> x0, double tmax,
                     const IntegrateOptions& opt);
Trajectory integrate(const PiecewiseField& f, std::array<double, 2> x0, double tmax,
                     double tol = 1e-10);

// The perturbed family: x' = H_y + eps f, y' = -H_x + eps g per zone.
PiecewiseField perturbed_field(const FormI& form, const PerturbationSpec& pert, double eps);

struct DisplacementSample {
    double h;
    double epsilon;
    double d; // signed change of the level value h after one revolution
};

// Integrate the perturbed orbit from A = (sqrt(h/b1), 0) through one full
// revolution (two crossings) and report the change in the level coordinate
// h = b1 x^2 measured at the return crossing. Throws NoReturnError when the
// orbit fails to come back.
DisplacementSample displacement(const FormI& form, const PerturbationSpec& pert, double h,
                                double eps);

struct LimitCycleScan {
    std::vector<double> zeros; // h values where the displacement changes sign
    int warnings = 0;          // grid points skipped because the orbit escaped
};

// Scan the displacement map over a logarithmic h grid and bisect each sign
// change to 1e-6 relative in h. PWQH_THREADS caps the scan parallelism; the
// result does not depend on the thread count.
LimitCycleScan find_limit_cycles(const FormI& form, const PerturbationSpec& pert, double eps,
                                 std::pair<double, double> h_range, int grid);

} // namespace pwqh
