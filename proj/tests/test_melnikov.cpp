#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <set>

#include "pwqh/melnikov.hpp"
#include "pwqh/polyroots.hpp"
#include "support/oracles.hpp"

using namespace pwqh;

namespace {
const FormI kCenter{-1.0, 1.0, 1.0};
}

TEST_SUITE_BEGIN("melnikov");

TEST_CASE("base integrals: fixed values") {
    CHECK(base_integral(0, 0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(base_integral(0, 3) == doctest::Approx(-2.0 / 3.0).epsilon(1e-13));
    // frozen from the quadrature oracle, equals -B(1/2, 4/3)/2
    CHECK(base_integral(0, 1) == doctest::Approx(-0.8413092631952726).epsilon(1e-12));
    CHECK(base_integral(1, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("base integrals agree with adaptive quadrature for 2k+j <= 12") {
    for (int k = 0; 2 * k <= 12; ++k)
        for (int j = 0; 2 * k + j <= 12; ++j) {
            const double closed = base_integral(k, j);
            const double quad = oracles::base_integral_quadrature(k, j);
            CHECK(std::abs(closed - quad) < 1e-10);
        }
}

TEST_CASE("negative lower index: closed form against tanh-sinh") {
    // these singular cases feed the c-hat coefficients
    CHECK(base_integral(1, -2) == doctest::Approx(1.2619638947929088).epsilon(1e-10));
    CHECK(base_integral(1, -1) == doctest::Approx(-0.5543806198349551).epsilon(1e-10));
    CHECK(base_integral(0, -2) == doctest::Approx(2.1032731579881814).epsilon(1e-10));
}

TEST_CASE("hat coefficients at the reference parameters") {
    const HatCoefficients h00 = hat_coefficients(kCenter, 0, 0);
    CHECK(h00.d_plus == doctest::Approx(-2.0).epsilon(1e-13));
    CHECK(h00.d_minus == doctest::Approx(2.0).epsilon(1e-13));

    // c-hat at j = 2 reduces to the plain moment integral of x^2
    const HatCoefficients h02 = hat_coefficients(kCenter, 0, 2);
    CHECK(h02.c_plus == doctest::Approx(2.0 / 3.0).epsilon(1e-13));

    for (int k = 0; k <= 3; ++k)
        for (int j = 0; j <= 3; ++j) {
            const HatCoefficients hc = hat_coefficients(kCenter, k, j);
            CHECK(hc.d_plus != 0.0);
            CHECK(hc.c_plus != 0.0);
            CHECK(hc.d_minus != 0.0);
            CHECK(hc.c_minus != 0.0);
        }
    CHECK_THROWS_AS(hat_coefficients(FormI{1.0, 1.0, 1.0}, 0, 0), NotACenterError);
}

TEST_CASE("melnikov coefficients: continuity cancellation and single terms") {
    // constant vertical field shared by both zones integrates to zero
    PerturbationSpec cont;
    cont.n = 0;
    cont.d_plus[{0, 0}] = 0.7;
    cont.d_minus[{0, 0}] = 0.7;
    CHECK(melnikov_poly(kCenter, cont).terms.empty());

    PerturbationSpec single;
    single.n = 0;
    single.d_plus[{0, 0}] = 1.0;
    const MelnikovPoly m = melnikov_poly(kCenter, single);
    REQUIRE(m.terms.size() == 1);
    CHECK(m.terms.at({0, 0}) == doctest::Approx(-2.0).epsilon(1e-13));
    CHECK(m.eval(4.0) == doctest::Approx(-4.0).epsilon(1e-12)); // -2 sqrt(4)

    const PerturbationSpec zero{2, {}, {}, {}, {}};
    CHECK(melnikov_poly(kCenter, zero).terms.empty());
}

TEST_CASE("degree mismatch is rejected") {
    PerturbationSpec bad;
    bad.n = 1;
    bad.d_plus[{2, 1}] = 1.0;
    CHECK_THROWS_AS(melnikov_poly(kCenter, bad), DegreeMismatchError);
}

TEST_CASE("exponent set") {
    CHECK(exponent_set(0) == std::vector<int>{0});
    CHECK(exponent_set(3) == std::vector<int>{0, 2, 4, 6, 8});
    CHECK(exponent_set(4) == std::vector<int>{0, 2, 4, 6, 8, 10, 12});
}

TEST_CASE("exponent set equals the unrestricted enumeration for n = 0..30") {
    for (int n = 0; n <= 30; ++n) {
        const auto got = exponent_set(n);
        const auto brute = oracles::brute_force_exponents(n);
        CHECK(std::set<int>(got.begin(), got.end()) == brute);
    }
}

TEST_CASE("trapezoid map (i,j) -> 3i+2j is injective for n <= 30") {
    for (int n = 0; n <= 30; ++n) {
        std::set<int> seen;
        int count = 0;
        for (int i = 0; i <= n; i += 2)
            for (int j = 0; j < 3 && i + j <= n; ++j) {
                seen.insert(3 * i + 2 * j);
                ++count;
            }
        CHECK(int(seen.size()) == count);
    }
}

TEST_CASE("xi_max formula and cardinality identity") {
    CHECK(xi_max(1) == 1);
    CHECK(xi_max(2) == 3);
    CHECK(xi_max(3) == 4);
    CHECK(xi_max(4) == 6);
    for (int n = 0; n <= 30; ++n)
        CHECK(xi_max(n) == int(exponent_set(n).size()) - 1);
}

TEST_CASE("descartes variation counting") {
    CHECK(descartes_variations({1.0, -2.0, 1.0}) == 2);
    CHECK(descartes_variations({1.0, 1.0, 1.0}) == 0);
    CHECK(descartes_variations({3.0, 0.0, -1.0, 2.0}) == 2);
}

TEST_CASE("descartes bound holds for random polynomials with known roots") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> uroot(0.1, 8.0), ucoef(-1.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const int nroots = int(rng() % 4);
        Poly p{1.0};
        for (int i = 0; i < nroots; ++i) {
            const double r = uroot(rng);
            Poly next(p.size() + 1, 0.0);
            for (std::size_t t = 0; t < p.size(); ++t) {
                next[t + 1] += p[t];
                next[t] -= r * p[t];
            }
            p = next;
        }
        if (rng() % 2) {
            // an extra irreducible quadratic factor changes no real roots
            const double b = ucoef(rng), c = 0.3 * b * b + 0.2;
            Poly q(p.size() + 2, 0.0);
            for (std::size_t t = 0; t < p.size(); ++t) {
                q[t] += c * p[t];
                q[t + 1] += b * p[t];
                q[t + 2] += p[t];
            }
            p = q;
        }
        CHECK(nroots <= descartes_variations(p));
    }
}

TEST_CASE("positive roots of assembled Melnikov functions") {
    PerturbationSpec single;
    single.n = 0;
    single.d_plus[{0, 0}] = 1.0;
    CHECK(positive_roots(melnikov_poly(kCenter, single)).empty());

    // double root at s = 1: xi sequence (1, -2, 1) on s-exponents 0, 1, 2
    MelnikovPoly dbl;
    dbl.form = kCenter;
    dbl.n = 2;
    dbl.terms[{0, 0}] = 1.0;
    dbl.terms[{0, 1}] = -2.0;
    dbl.terms[{0, 2}] = 1.0;
    const auto roots = positive_roots(dbl);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].h == doctest::Approx(1.0).epsilon(1e-6));
    CHECK_FALSE(roots[0].simple);

    MelnikovPoly empty;
    CHECK_THROWS_AS(positive_roots(empty), EmptyPolyError);
}

TEST_CASE("s-exponent grouping merges aliased terms") {
    // (k, j) = (1, 0) and (0, 3) both map to s-exponent 3
    MelnikovPoly m;
    m.form = kCenter;
    m.n = 3;
    m.terms[{2, 0}] = 1.5;
    m.terms[{0, 3}] = -0.5;
    const auto coeffs = m.s_coefficients();
    REQUIRE(coeffs.size() == 1);
    CHECK(coeffs.at(3) == doctest::Approx(1.0));
}

TEST_CASE("realize_roots constructs the requested root set") {
    const std::vector<double> targets{1.0, 8.0, 27.0};
    const PerturbationSpec pert = realize_roots(kCenter, 2, targets);
    const MelnikovPoly m = melnikov_poly(kCenter, pert);

    CHECK(m.exponents() == std::vector<int>{0, 2, 4, 6});
    std::vector<double> coeffs;
    for (const auto& [e, c] : m.s_coefficients()) coeffs.push_back(c);
    CHECK(descartes_variations(coeffs) == 3);

    const auto roots = positive_roots(m);
    REQUIRE(roots.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(roots[i].h == doctest::Approx(targets[i]).epsilon(1e-9));
        CHECK(roots[i].simple);
    }
}

TEST_CASE("realize_roots edge cases") {
    const auto one = realize_roots(kCenter, 1, {1.0});
    const auto roots = positive_roots(melnikov_poly(kCenter, one));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].h == doctest::Approx(1.0).epsilon(1e-9));

    const auto none = realize_roots(kCenter, 2, {});
    const MelnikovPoly m0 = melnikov_poly(kCenter, none);
    CHECK(m0.terms.size() == 1);
    CHECK(positive_roots(m0).empty());

    CHECK_THROWS_AS(realize_roots(kCenter, 1, {1.0, 2.0}), TooManyRootsError);
    CHECK_THROWS_AS(realize_roots(kCenter, 2, {1.0, 1.0 + 1e-14}), DuplicateRootsError);
    CHECK_THROWS_AS(realize_roots(FormI{1.0, 1.0, 1.0}, 1, {1.0}), NotACenterError);
}

TEST_CASE("realization round trip over all subset sizes for n <= 4") {
    // fixed ladder of well-separated levels; s-roots are the integers
    const std::vector<double> ladder{1.0, 8.0, 27.0, 64.0, 125.0, 216.0};
    std::mt19937 rng(2718);
    std::uniform_real_distribution<double> ua(0.3, 4.0);
    for (int n = 0; n <= 4; ++n) {
        const FormI form{-ua(rng), ua(rng), ua(rng)};
        for (int size = 0; size <= xi_max(n); ++size) {
            std::vector<double> targets(ladder.begin(), ladder.begin() + size);
            const auto pert = realize_roots(form, n, targets);
            const auto roots = positive_roots(melnikov_poly(form, pert));
            REQUIRE(int(roots.size()) == size);
            for (int i = 0; i < size; ++i)
                CHECK(roots[size_t(i)].h == doctest::Approx(targets[size_t(i)]).epsilon(1e-9));
        }
    }
}

TEST_SUITE_END();
