#include "pwqh/quadrature.hpp"

#include <cmath>
#include <vector>

#include "pwqh/errors.hpp"

namespace pwqh {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTMax = 6.0;      // |t| beyond this contributes below 1e-300
constexpr double kMinDist = 1e-280; // skip nodes closer to an endpoint than this

struct Node {
    double x;   // abscissa in (a, b)
    double xc;  // distance to the nearest endpoint
    double w;   // weight including the interval half-width
};

// Node of the map u = tanh(pi/2 sinh t) scaled to (a, b).
bool make_node(double t, double mid, double half, Node& out) {
    const double s = 0.5 * kPi * std::sinh(t);
    const double u = std::tanh(s);
    // 1 - |u| = 2 / (exp(2|s|) + 1), no cancellation
    const double dist1 = 2.0 / (std::exp(2.0 * std::abs(s)) + 1.0);
    const double xc = half * dist1;
    if (!(xc > kMinDist)) return false;
    const double ch = std::cosh(s);
    out.w = half * 0.5 * kPi * std::cosh(t) / (ch * ch);
    out.x = mid + half * u;
    out.xc = xc;
    return true;
}

} // namespace

double tanh_sinh(const std::function<double(double, double)>& f, double a, double b,
                 double tol, int max_level) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    if (half == 0.0) return 0.0;

    auto term = [&](double t) -> double {
        Node n;
        if (!make_node(t, mid, half, n)) return 0.0;
        const double v = f(n.x, n.xc);
        return std::isfinite(v) ? n.w * v : 0.0;
    };

    // level 0, h = 1
    double h = 1.0;
    double sum = term(0.0);
    for (int k = 1; k * h <= kTMax; ++k) sum += term(k * h) + term(-k * h);
    double integral = h * sum;

    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (int k = 1; k * h <= kTMax; k += 2) add += term(k * h) + term(-k * h);
        const double next = 0.5 * integral + h * add;
        const double delta = std::abs(next - integral);
        integral = next;
        if (level >= 3 && delta <= tol * std::max(1.0, std::abs(integral))) return integral;
    }
    throw QuadratureFailureError("tanh-sinh quadrature did not reach the requested tolerance");
}

double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double tol, int max_level) {
    return tanh_sinh([&](double x, double) { return f(x); }, a, b, tol, max_level);
}

} // namespace pwqh
