#include "pwqh/canonical.hpp"

#include <cmath>

namespace pwqh {
namespace {

// Monomial layout of one zone of the three raw families.
enum class RawShape { A, B, C };

struct RawZone {
    RawShape shape;
    // A: p = {y^2: a}, q = {x: b}          -> coeffs (a, b)
    // B: p = {xy: a}, q = {x: b1, y^2: b2} -> coeffs (a, b1, b2)
    // C: p = {x: a1, y^2: a2}, q = {y: b}  -> coeffs (a1, a2, b)
    std::vector<double> coeffs;
};

bool support_is(const BiPoly& p, const std::vector<BiPoly::Key>& keys) {
    if (p.terms().size() != keys.size()) return false;
    for (const auto& k : keys)
        if (p.coeff(k.first, k.second) == 0.0) return false;
    return true;
}

RawZone classify_zone(const BiPoly& p, const BiPoly& q) {
    if ((p.is_zero() && q.is_zero()) || p.is_zero() || q.is_zero())
        throw NotQuadraticNonHomogeneousError("zone field has a vanishing component");
    if (support_is(p, {{0, 2}}) && support_is(q, {{1, 0}}))
        return {RawShape::A, {p.coeff(0, 2), q.coeff(1, 0)}};
    if (support_is(p, {{1, 1}}) && support_is(q, {{1, 0}, {0, 2}}))
        return {RawShape::B, {p.coeff(1, 1), q.coeff(1, 0), q.coeff(0, 2)}};
    if (support_is(p, {{1, 0}, {0, 2}}) && support_is(q, {{0, 1}}))
        return {RawShape::C, {p.coeff(1, 0), p.coeff(0, 2), q.coeff(0, 1)}};
    // Distinguish "not quasi-homogeneous at all" from "quasi-homogeneous but
    // not one of the quadratic non-homogeneous families".
    if (!minimal_weight_vector(p, q))
        throw NotQuasiHomogeneousError("zone field is not quasi-homogeneous");
    throw NotQuadraticNonHomogeneousError(
        "zone field is not a quadratic quasi-homogeneous non-homogeneous family member");
}

void require_nonzero(double v, const char* what) {
    if (v == 0.0) throw ZeroParameterError(std::string("required divisor is zero: ") + what);
}

} // namespace

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::I: return "I";
        case Variant::II: return "II";
        case Variant::III: return "III";
    }
    return "?";
}

CanonicalForm::CanonicalForm(FormI f)
    : variant_(Variant::I), params_{f.a1, f.b1, f.a1_tilde} {
    for (double v : params_)
        if (v == 0.0) throw ZeroParameterError("canonical form parameters must be nonzero");
}

CanonicalForm::CanonicalForm(FormII f)
    : variant_(Variant::II), params_{f.a2, f.b21, f.b22, f.a2_tilde} {
    for (double v : params_)
        if (v == 0.0) throw ZeroParameterError("canonical form parameters must be nonzero");
}

CanonicalForm::CanonicalForm(FormIII f)
    : variant_(Variant::III), params_{f.a31, f.a32, f.b3, f.a31_tilde} {
    for (double v : params_)
        if (v == 0.0) throw ZeroParameterError("canonical form parameters must be nonzero");
}

FormI CanonicalForm::form_i() const {
    if (variant_ != Variant::I) throw ShapeMismatchError("not a Form I system");
    return {params_[0], params_[1], params_[2]};
}

FormII CanonicalForm::form_ii() const {
    if (variant_ != Variant::II) throw ShapeMismatchError("not a Form II system");
    return {params_[0], params_[1], params_[2], params_[3]};
}

FormIII CanonicalForm::form_iii() const {
    if (variant_ != Variant::III) throw ShapeMismatchError("not a Form III system");
    return {params_[0], params_[1], params_[2], params_[3]};
}

PiecewiseField canonical_field(const CanonicalForm& form) {
    switch (form.variant()) {
        case Variant::I: {
            const FormI f = form.form_i();
            return PiecewiseField(BiPoly::monomial(0, 2, f.a1), BiPoly::monomial(1, 0, f.b1),
                                  BiPoly::monomial(0, 2, f.a1_tilde), BiPoly::monomial(1, 0, 1.0));
        }
        case Variant::II: {
            const FormII f = form.form_ii();
            BiPoly uq = BiPoly::monomial(1, 0, f.b21) + BiPoly::monomial(0, 2, f.b22);
            BiPoly lq = BiPoly::monomial(1, 0, 1.0) + BiPoly::monomial(0, 2, 1.0);
            return PiecewiseField(BiPoly::monomial(1, 1, f.a2), uq,
                                  BiPoly::monomial(1, 1, f.a2_tilde), lq);
        }
        case Variant::III: {
            const FormIII f = form.form_iii();
            BiPoly up = BiPoly::monomial(1, 0, f.a31) + BiPoly::monomial(0, 2, f.a32);
            BiPoly lp = BiPoly::monomial(1, 0, f.a31_tilde) + BiPoly::monomial(0, 2, 1.0);
            return PiecewiseField(up, BiPoly::monomial(0, 1, f.b3),
                                  lp, BiPoly::monomial(0, 1, 1.0));
        }
    }
    throw ShapeMismatchError("unreachable variant");
}

std::pair<CanonicalForm, TransformRecord> canonicalize(const PiecewiseField& f) {
    const RawZone up = classify_zone(f.upper_p, f.upper_q);
    const RawZone lo = classify_zone(f.lower_p, f.lower_q);
    if (up.shape != lo.shape)
        throw ShapeMismatchError("upper and lower zones belong to different families");

    TransformRecord rec;
    switch (up.shape) {
        case RawShape::A: {
            // (x, y, dt) -> (x, y, bt1 dt) with bt1 the lower y'-coefficient.
            const double a1 = up.coeffs[0], b1 = up.coeffs[1];
            const double at1 = lo.coeffs[0], bt1 = lo.coeffs[1];
            require_nonzero(bt1, "lower x-coefficient of y'");
            rec.t_upper = rec.t_lower = bt1;
            return {CanonicalForm(FormI{a1 / bt1, b1 / bt1, at1 / bt1}), rec};
        }
        case RawShape::B: {
            // (x, y, dt) -> (bt21 x / bt22, y, bt22 dt).
            const double a2 = up.coeffs[0], b21 = up.coeffs[1], b22 = up.coeffs[2];
            const double at2 = lo.coeffs[0], bt21 = lo.coeffs[1], bt22 = lo.coeffs[2];
            require_nonzero(bt21, "lower x-coefficient of y'");
            require_nonzero(bt22, "lower y^2-coefficient of y'");
            rec.x_num = bt21;
            rec.x_den = bt22;
            rec.t_upper = rec.t_lower = bt22;
            return {CanonicalForm(FormII{a2 / bt22, b21 / bt21, b22 / bt22, at2 / bt22}), rec};
        }
        case RawShape::C: {
            // (x, y, dt) -> (bt3 x / at32, y, bt3 dt).
            const double a31 = up.coeffs[0], a32 = up.coeffs[1], b3 = up.coeffs[2];
            const double at31 = lo.coeffs[0], at32 = lo.coeffs[1], bt3 = lo.coeffs[2];
            require_nonzero(at32, "lower y^2-coefficient of x'");
            require_nonzero(bt3, "lower y-coefficient of y'");
            rec.x_num = bt3;
            rec.x_den = at32;
            rec.t_upper = rec.t_lower = bt3;
            return {CanonicalForm(FormIII{a31 / bt3, a32 / at32, b3 / bt3, at31 / bt3}), rec};
        }
    }
    throw ShapeMismatchError("unreachable shape");
}

PiecewiseField apply_transform(const PiecewiseField& canonical, const TransformRecord& rec) {
    // New variables: X = (x_num/x_den) x_old, dT = t dt_old. Hence
    //   P_old(x, y) = (x_den/x_num) * t * P_can(x * x_num/x_den, y),
    //   Q_old(x, y) = t * Q_can(x * x_num/x_den, y).
    const double sx = rec.x_num / rec.x_den;
    auto back_p = [&](const BiPoly& p, double t) { return p.substituted_scaled(sx, 1.0, t / sx); };
    auto back_q = [&](const BiPoly& q, double t) { return q.substituted_scaled(sx, 1.0, t); };
    return PiecewiseField(back_p(canonical.upper_p, rec.t_upper),
                          back_q(canonical.upper_q, rec.t_upper),
                          back_p(canonical.lower_p, rec.t_lower),
                          back_q(canonical.lower_q, rec.t_lower));
}

} // namespace pwqh
