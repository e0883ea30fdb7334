#include "pwqh/first_integral.hpp"

#include <cmath>

namespace pwqh {
namespace {

bool nearly_equal(double a, double b) {
    return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

} // namespace

FirstIntegral::FirstIntegral(Variant variant, Zone zone, IntegralBranch branch,
                             std::vector<double> params)
    : variant_(variant), zone_(zone), branch_(branch), params_(std::move(params)) {}

bool FirstIntegral::in_domain(double x, double y) const {
    switch (variant_) {
        case Variant::I: return true;
        case Variant::II: return x > 0.0;
        case Variant::III: return zone_ == Zone::upper ? y > 0.0 : y < 0.0;
    }
    return false;
}

double FirstIntegral::operator()(double x, double y) const {
    if (!in_domain(x, y))
        throw IntegralDomainError("first integral evaluated outside its domain");
    switch (variant_) {
        case Variant::I: {
            // params: (a, b) with H = a/3 y^3 - b/2 x^2
            return params_[0] / 3.0 * y * y * y - params_[1] / 2.0 * x * x;
        }
        case Variant::II: {
            // params: (a, b1, b2) for x' = a x y, y' = b1 x + b2 y^2
            const double a = params_[0], b1 = params_[1], b2 = params_[2];
            if (branch_ == IntegralBranch::logarithmic)
                return (-b1 * x * std::log(x) + b2 * y * y) / (b2 * x);
            return (-2.0 * b1 * x + (a - 2.0 * b2) * y * y) /
                   (std::pow(x, 2.0 * b2 / a) * (a - 2.0 * b2));
        }
        case Variant::III: {
            // params: (a1, a2, b) for x' = a1 x + a2 y^2, y' = b y
            const double a1 = params_[0], a2 = params_[1], b = params_[2];
            const double ay = std::abs(y);
            if (branch_ == IntegralBranch::logarithmic)
                return -(a2 * y * y * std::log(ay) - b * x) / (b * y * y);
            return ((a1 - 2.0 * b) * x + a2 * y * y) /
                   (std::pow(ay, a1 / b) * (a1 - 2.0 * b));
        }
    }
    throw IntegralDomainError("unreachable variant");
}

FirstIntegral first_integral(const CanonicalForm& form, Zone zone) {
    switch (form.variant()) {
        case Variant::I: {
            const FormI f = form.form_i();
            if (zone == Zone::upper)
                return FirstIntegral(Variant::I, zone, IntegralBranch::power, {f.a1, f.b1});
            return FirstIntegral(Variant::I, zone, IntegralBranch::power, {f.a1_tilde, 1.0});
        }
        case Variant::II: {
            const FormII f = form.form_ii();
            if (zone == Zone::upper) {
                const auto br = nearly_equal(f.a2, 2.0 * f.b22) ? IntegralBranch::logarithmic
                                                                : IntegralBranch::power;
                return FirstIntegral(Variant::II, zone, br, {f.a2, f.b21, f.b22});
            }
            const auto br = nearly_equal(f.a2_tilde, 2.0) ? IntegralBranch::logarithmic
                                                          : IntegralBranch::power;
            return FirstIntegral(Variant::II, zone, br, {f.a2_tilde, 1.0, 1.0});
        }
        case Variant::III: {
            const FormIII f = form.form_iii();
            if (zone == Zone::upper) {
                const auto br = nearly_equal(f.a31, 2.0 * f.b3) ? IntegralBranch::logarithmic
                                                                : IntegralBranch::power;
                return FirstIntegral(Variant::III, zone, br, {f.a31, f.a32, f.b3});
            }
            const auto br = nearly_equal(f.a31_tilde, 2.0) ? IntegralBranch::logarithmic
                                                           : IntegralBranch::power;
            return FirstIntegral(Variant::III, zone, br, {f.a31_tilde, 1.0, 1.0});
        }
    }
    throw IntegralDomainError("unreachable variant");
}

} // namespace pwqh
