#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "pwqh/canonical.hpp"
#include "pwqh/first_integral.hpp"
#include "pwqh/simulate.hpp"
#include "pwqh/weights.hpp"
#include "support/oracles.hpp"

using namespace pwqh;

namespace {

BiPoly mono(int i, int j, double c) { return BiPoly::monomial(i, j, c); }

// componentwise-minimal element of a candidate set, if one exists
std::optional<WeightVector> componentwise_min(const std::vector<WeightVector>& ws) {
    for (const auto& w : ws) {
        bool le_all = true;
        for (const auto& o : ws)
            if (!(w.s1 <= o.s1 && w.s2 <= o.s2 && w.d <= o.d)) le_all = false;
        if (le_all) return w;
    }
    return std::nullopt;
}

} // namespace

TEST_SUITE_BEGIN("algebra");

TEST_CASE("bipoly arithmetic and structural zeros") {
    BiPoly p = mono(1, 0, 2.0) + mono(0, 2, -1.0);
    CHECK(p.degree() == 2);
    CHECK(p.eval(3.0, 2.0) == doctest::Approx(2.0));
    p.add_term(1, 0, -2.0); // cancels
    CHECK(p.coeff(1, 0) == 0.0);
    CHECK(p.terms().size() == 1);
    CHECK(BiPoly().is_zero());
    CHECK(BiPoly().degree() == -1);

    const BiPoly prod = mono(1, 1, 2.0) * (mono(1, 0, 1.0) + mono(0, 1, 3.0));
    CHECK(prod.coeff(2, 1) == doctest::Approx(2.0));
    CHECK(prod.coeff(1, 2) == doctest::Approx(6.0));
}

TEST_CASE("minimal weight vector on the three quadratic families") {
    // x' = a y^2, y' = b x
    auto w = minimal_weight_vector(mono(0, 2, 2.5), mono(1, 0, -4.0));
    REQUIRE(w.has_value());
    CHECK(*w == WeightVector{3, 2, 2});

    // x' = x^2, y' = x y (homogeneous quadratic)
    w = minimal_weight_vector(mono(2, 0, 1.0), mono(1, 1, 1.0));
    REQUIRE(w.has_value());
    CHECK(*w == WeightVector{1, 1, 2});

    // x' = a x + b y^2, y' = c y
    w = minimal_weight_vector(mono(1, 0, -1.0) + mono(0, 2, 3.0), mono(0, 1, 2.0));
    REQUIRE(w.has_value());
    CHECK(*w == WeightVector{2, 1, 1});

    // x' = a x y, y' = b x + c y^2
    w = minimal_weight_vector(mono(1, 1, 1.5), mono(1, 0, 1.0) + mono(0, 2, -2.0));
    REQUIRE(w.has_value());
    CHECK(*w == WeightVector{2, 1, 2});
}

TEST_CASE("weight vector matches the sampling oracle and is componentwise minimal") {
    const std::vector<std::pair<BiPoly, BiPoly>> systems = {
        {mono(0, 2, 2.5), mono(1, 0, -4.0)},
        {mono(2, 0, 1.0), mono(1, 1, 1.0)},
        {mono(1, 0, -1.0) + mono(0, 2, 3.0), mono(0, 1, 2.0)},
        {mono(1, 1, 1.5), mono(1, 0, 1.0) + mono(0, 2, -2.0)},
        {mono(0, 3, 1.0), mono(1, 0, 2.0)},
    };
    for (const auto& [p, q] : systems) {
        const auto all = oracles::weight_vectors_by_sampling(p, q, 10);
        REQUIRE_FALSE(all.empty());
        const auto expect = componentwise_min(all);
        REQUIRE(expect.has_value());
        const auto got = minimal_weight_vector(p, q, 10);
        REQUIRE(got.has_value());
        CHECK(*got == *expect);
    }
}

TEST_CASE("scaling identities hold at random samples") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ua(0.05, 4.0), ux(-3.0, 3.0);
    const BiPoly p = mono(0, 2, -1.7), q = mono(1, 0, 0.9);
    const auto w = minimal_weight_vector(p, q).value();
    for (int i = 0; i < 100; ++i) {
        const double a = ua(rng), x = ux(rng), y = ux(rng);
        const double lp = p.eval(std::pow(a, w.s1) * x, std::pow(a, w.s2) * y);
        const double rp = std::pow(a, w.s1 + w.d - 1) * p.eval(x, y);
        CHECK(lp == doctest::Approx(rp).epsilon(1e-12));
        const double lq = q.eval(std::pow(a, w.s1) * x, std::pow(a, w.s2) * y);
        const double rq = std::pow(a, w.s2 + w.d - 1) * q.eval(x, y);
        CHECK(lq == doctest::Approx(rq).epsilon(1e-12));
    }
}

TEST_CASE("minimality: no smaller triple satisfies the identities") {
    const BiPoly p = mono(0, 2, 2.5), q = mono(1, 0, -4.0);
    const auto w = minimal_weight_vector(p, q).value();
    for (int s1 = 1; s1 <= w.s1; ++s1)
        for (int s2 = 1; s2 <= w.s2; ++s2)
            for (int d = 1; d <= w.d; ++d) {
                if (s1 == w.s1 && s2 == w.s2 && d == w.d) continue;
                CHECK_FALSE(is_weight_vector(p, q, {s1, s2, d}));
            }
}

TEST_CASE("weight vector error and empty cases") {
    CHECK_THROWS_AS(minimal_weight_vector(BiPoly(), mono(1, 0, 1.0)), ZeroFieldError);
    // x' = x^2 + x has incompatible exponent equations
    CHECK_FALSE(minimal_weight_vector(mono(2, 0, 1.0) + mono(1, 0, 1.0), mono(0, 1, 1.0)));
}

TEST_CASE("canonicalize shape (a)") {
    const PiecewiseField f(mono(0, 2, 2.0), mono(1, 0, 4.0), mono(0, 2, 6.0), mono(1, 0, 2.0));
    const auto [form, rec] = canonicalize(f);
    REQUIRE(form.variant() == Variant::I);
    const FormI fi = form.form_i();
    CHECK(fi.a1 == doctest::Approx(1.0));
    CHECK(fi.b1 == doctest::Approx(2.0));
    CHECK(fi.a1_tilde == doctest::Approx(3.0));
    CHECK(rec.t_upper == doctest::Approx(2.0));

    SUBCASE("round trip reproduces the field at sample points") {
        const PiecewiseField back = apply_transform(canonical_field(form), rec);
        for (double x : {-1.7, 0.4, 2.2})
            for (double y : {-2.0, -0.3, 1.1, 2.5}) {
                double fx0, fy0, fx1, fy1;
                f.eval(x, y, fx0, fy0);
                back.eval(x, y, fx1, fy1);
                CHECK(fx1 == doctest::Approx(fx0).epsilon(1e-12));
                CHECK(fy1 == doctest::Approx(fy0).epsilon(1e-12));
            }
    }
}

TEST_CASE("canonicalize identity cases") {
    // shape (a) with unit lower coefficient: identity transform
    const PiecewiseField fa(mono(0, 2, -1.0), mono(1, 0, 1.5), mono(0, 2, 2.0), mono(1, 0, 1.0));
    const auto [form_a, rec_a] = canonicalize(fa);
    CHECK(form_a.form_i().a1 == doctest::Approx(-1.0));
    CHECK(form_a.form_i().b1 == doctest::Approx(1.5));
    CHECK(form_a.form_i().a1_tilde == doctest::Approx(2.0));
    CHECK(rec_a.t_upper == doctest::Approx(1.0));
    CHECK(rec_a.x_num == doctest::Approx(1.0));

    // shape (c) with unit divisors keeps its parameters
    const PiecewiseField fc(mono(1, 0, 0.7) + mono(0, 2, -1.2), mono(0, 1, 2.5),
                            mono(1, 0, 3.0) + mono(0, 2, 1.0), mono(0, 1, 1.0));
    const auto [form_c, rec_c] = canonicalize(fc);
    REQUIRE(form_c.variant() == Variant::III);
    CHECK(form_c.form_iii().a31 == doctest::Approx(0.7));
    CHECK(form_c.form_iii().a32 == doctest::Approx(-1.2));
    CHECK(form_c.form_iii().b3 == doctest::Approx(2.5));
    CHECK(form_c.form_iii().a31_tilde == doctest::Approx(3.0));
    CHECK(rec_c.x_num == doctest::Approx(1.0));
    CHECK(rec_c.x_den == doctest::Approx(1.0));
}

TEST_CASE("canonicalize round trip over random raw systems") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> uc(0.2, 3.0);
    auto coef = [&] { return (rng() % 2 ? 1.0 : -1.0) * uc(rng); };

    for (int trial = 0; trial < 60; ++trial) {
        PiecewiseField f;
        switch (trial % 3) {
            case 0:
                f = PiecewiseField(mono(0, 2, coef()), mono(1, 0, coef()), mono(0, 2, coef()),
                                   mono(1, 0, coef()));
                break;
            case 1:
                f = PiecewiseField(mono(1, 1, coef()), mono(1, 0, coef()) + mono(0, 2, coef()),
                                   mono(1, 1, coef()), mono(1, 0, coef()) + mono(0, 2, coef()));
                break;
            default:
                f = PiecewiseField(mono(1, 0, coef()) + mono(0, 2, coef()), mono(0, 1, coef()),
                                   mono(1, 0, coef()) + mono(0, 2, coef()), mono(0, 1, coef()));
                break;
        }
        const auto [form, rec] = canonicalize(f);
        const PiecewiseField back = apply_transform(canonical_field(form), rec);
        for (double x : {-1.3, 0.8})
            for (double y : {-0.9, 1.4}) {
                double fx0, fy0, fx1, fy1;
                f.eval(x, y, fx0, fy0);
                back.eval(x, y, fx1, fy1);
                CHECK(fx1 == doctest::Approx(fx0).epsilon(1e-12));
                CHECK(fy1 == doctest::Approx(fy0).epsilon(1e-12));
            }
    }
}

TEST_CASE("canonicalize rejects unsuitable systems") {
    // upper zone not quasi-homogeneous
    CHECK_THROWS_AS(canonicalize(PiecewiseField(mono(2, 0, 1.0) + mono(1, 0, 1.0), mono(0, 1, 1.0),
                                                mono(0, 2, 1.0), mono(1, 0, 1.0))),
                    NotQuasiHomogeneousError);
    // homogeneous quadratic zone
    CHECK_THROWS_AS(canonicalize(PiecewiseField(mono(2, 0, 1.0), mono(1, 1, 1.0), mono(0, 2, 1.0),
                                                mono(1, 0, 1.0))),
                    NotQuadraticNonHomogeneousError);
    // zones from different families
    CHECK_THROWS_AS(canonicalize(PiecewiseField(mono(0, 2, 1.0), mono(1, 0, 1.0),
                                                mono(1, 0, 1.0) + mono(0, 2, 1.0), mono(0, 1, 1.0))),
                    ShapeMismatchError);
    // a vanishing zone component
    CHECK_THROWS_AS(canonicalize(PiecewiseField(mono(0, 2, 1.0), BiPoly(), mono(0, 2, 1.0),
                                                mono(1, 0, 1.0))),
                    Error);
}

TEST_CASE("zero parameters are rejected at form construction") {
    CHECK_THROWS_AS(CanonicalForm(FormI{0.0, 1.0, 1.0}), ZeroParameterError);
    CHECK_THROWS_AS(CanonicalForm(FormII{1.0, 1.0, 0.0, 1.0}), ZeroParameterError);
}

TEST_CASE("first integral of Form I evaluates and selects the power branch") {
    const CanonicalForm form(FormI{-1.0, 1.0, 1.0});
    const FirstIntegral h_up = first_integral(form, Zone::upper);
    CHECK(h_up.branch() == IntegralBranch::power);
    CHECK(h_up(1.0, 0.0) == doctest::Approx(-0.5).epsilon(1e-15));
    const FirstIntegral h_lo = first_integral(form, Zone::lower);
    CHECK(h_lo(2.0, 0.0) == doctest::Approx(-2.0).epsilon(1e-15));
}

TEST_CASE("Form II logarithmic branch is selected at a2 = 2 b22") {
    const CanonicalForm form(FormII{2.0, 1.0, 1.0, 1.0});
    CHECK(first_integral(form, Zone::upper).branch() == IntegralBranch::logarithmic);
    CHECK(first_integral(form, Zone::lower).branch() == IntegralBranch::power);
    const CanonicalForm form2(FormII{1.0, 1.0, 1.0, 2.0});
    CHECK(first_integral(form2, Zone::upper).branch() == IntegralBranch::power);
    CHECK(first_integral(form2, Zone::lower).branch() == IntegralBranch::logarithmic);
}

TEST_CASE("first integral domain errors") {
    const CanonicalForm form(FormII{2.0, 1.0, 1.0, 1.0});
    CHECK_THROWS_AS(first_integral(form, Zone::upper)(-1.0, 0.5), IntegralDomainError);
    const CanonicalForm f3(FormIII{1.0, 1.0, 1.0, 1.0});
    CHECK_THROWS_AS(first_integral(f3, Zone::upper)(0.5, -0.5), IntegralDomainError);
    CHECK_THROWS_AS(first_integral(f3, Zone::lower)(0.5, 0.5), IntegralDomainError);
}

TEST_CASE("Form I integral is constant along a numeric orbit") {
    const CanonicalForm form(FormI{-1.0, 1.0, 1.0});
    const FirstIntegral h_up = first_integral(form, Zone::upper);
    const Trajectory traj = integrate(canonical_field(form), {1.0, 0.0}, 10.0, 1e-10);
    REQUIRE(traj.samples.size() > 10);
    const double ref = h_up(1.0, 0.0);
    double max_dev = 0.0;
    for (const auto& s : traj.samples) {
        if (s[2] < 0.0) continue; // upper-zone samples only
        max_dev = std::max(max_dev, std::abs(h_up(s[1], s[2]) - ref));
    }
    CHECK(max_dev < 1e-9);
}

TEST_CASE("zone integrals are constant along smooth orbits of Forms II and III") {
    // Form II, power branches: orbit stays in x > 0, y > 0 short-term
    const CanonicalForm f2(FormII{1.0, 1.0, 1.0, 1.0});
    const PiecewiseField field2 = canonical_field(f2);
    const Trajectory t2 = integrate(field2, {1.0, 0.8}, 1.0, 1e-10);
    const FirstIntegral h2 = first_integral(f2, Zone::upper);
    const double ref2 = h2(1.0, 0.8);
    for (const auto& s : t2.samples) {
        if (!(s[2] > 1e-6) || !(s[1] > 1e-6)) continue;
        CHECK(h2(s[1], s[2]) == doctest::Approx(ref2).epsilon(1e-8));
    }

    // Form III lower zone, logarithmic branch at a31_tilde = 2
    const CanonicalForm f3(FormIII{1.0, 1.0, -1.0, 2.0});
    const PiecewiseField field3 = canonical_field(f3);
    const Trajectory t3 = integrate(field3, {0.5, -1.0}, 1.0, 1e-10);
    const FirstIntegral h3 = first_integral(f3, Zone::lower);
    CHECK(h3.branch() == IntegralBranch::logarithmic);
    const double ref3 = h3(0.5, -1.0);
    for (const auto& s : t3.samples) {
        if (!(s[2] < -1e-6)) continue;
        CHECK(h3(s[1], s[2]) == doctest::Approx(ref3).epsilon(1e-8));
    }
}

TEST_SUITE_END();
