#pragma once

#include <string>
#include <vector>

#include "pwqh/field.hpp"
#include "pwqh/weights.hpp"

namespace pwqh {

enum class Variant { I, II, III };

std::string variant_name(Variant v);

// Upper zone  x' = a1 y^2, y' = b1 x;  lower zone  x' = a1_tilde y^2, y' = x.
struct FormI {
    double a1, b1, a1_tilde;
};

// Upper zone  x' = a2 x y, y' = b21 x + b22 y^2;  lower  x' = a2_tilde x y, y' = x + y^2.
struct FormII {
    double a2, b21, b22, a2_tilde;
};

// Upper zone  x' = a31 x + a32 y^2, y' = b3 y;  lower  x' = a31_tilde x + y^2, y' = y.
struct FormIII {
    double a31, a32, b3, a31_tilde;
};

// One of the three reduced families, with its nonzero parameter tuple.
class CanonicalForm {
public:
    CanonicalForm(FormI f);
    CanonicalForm(FormII f);
    CanonicalForm(FormIII f);

    Variant variant() const { return variant_; }
    const std::vector<double>& params() const { return params_; }

    FormI form_i() const;    // throws ShapeMismatchError on wrong variant
    FormII form_ii() const;
    FormIII form_iii() const;

private:
    Variant variant_;
    std::vector<double> params_; // canonical order, all nonzero
};

// Record of the reduction applied by canonicalize(): canonical variables are
// X = (x_num/x_den) x, dT = t_upper dt (upper zone) and dT = t_lower dt
// (lower zone). The scale is kept as a numerator/denominator pair so that
// rational inputs round-trip exactly.
struct TransformRecord {
    double x_num = 1.0, x_den = 1.0;
    double t_upper = 1.0, t_lower = 1.0;
};

// The piecewise vector field of a canonical form.
PiecewiseField canonical_field(const CanonicalForm& form);

// Reduce a piecewise quadratic quasi-homogeneous non-homogeneous system to its
// canonical family by an x-scaling plus time rescaling.
std::pair<CanonicalForm, TransformRecord> canonicalize(const PiecewiseField& f);

// Undo a reduction: maps the canonical field back to the original one.
PiecewiseField apply_transform(const PiecewiseField& canonical, const TransformRecord& rec);

} // namespace pwqh
