#include "pwqh/melnikov.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "pwqh/center.hpp"
#include "pwqh/polyroots.hpp"
#include "pwqh/specfun.hpp"

namespace pwqh {

void PerturbationSpec::validate() const {
    auto check = [&](const std::map<std::pair<int, int>, double>& fam, const char* name) {
        for (const auto& [k, c] : fam) {
            (void)c;
            if (k.first < 0 || k.second < 0 || k.first + k.second > n)
                throw DegreeMismatchError(std::string(name) +
                                          " index exceeds the perturbation degree");
        }
    };
    check(c_plus, "c_plus");
    check(c_minus, "c_minus");
    check(d_plus, "d_plus");
    check(d_minus, "d_minus");
}

double MelnikovPoly::eval(double h) const {
    double s = 0.0;
    for (const auto& [key, xi] : terms) {
        const int k = key.first / 2, j = key.second;
        s += xi * std::pow(h, k + j / 3.0 + 0.5);
    }
    return s;
}

std::map<int, double> MelnikovPoly::s_coefficients() const {
    std::map<int, double> out;
    for (const auto& [key, xi] : terms) out[3 * (key.first / 2) + key.second] += xi;
    for (auto it = out.begin(); it != out.end();)
        it = std::abs(it->second) < 1e-14 ? out.erase(it) : std::next(it);
    return out;
}

std::vector<int> MelnikovPoly::exponents() const {
    std::vector<int> out;
    for (const auto& [e, c] : s_coefficients()) {
        (void)c;
        out.push_back(2 * e); // hhat exponent 3i + 2j = 2 (3k + j)
    }
    return out;
}

double base_integral(int k, int j) {
    if (k < 0 || j < -2)
        throw DegreeMismatchError("base_integral requires k >= 0 and j >= -2");
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    return sign * 0.5 * beta_fn(k + 0.5, j / 3.0 + 1.0);
}

HatCoefficients hat_coefficients(const FormI& form, int k, int j) {
    if (!is_center(form))
        throw NotACenterError("hat coefficients are defined on the center family only");
    const double a1 = form.a1, b1 = form.b1, at1 = form.a1_tilde;
    HatCoefficients out;
    out.d_plus = -2.0 * real_pow_third(3.0 / (2.0 * a1), j) * std::pow(1.0 / b1, k + 0.5) *
                 base_integral(k, j);
    out.c_plus = -2.0 * (b1 / a1) * real_pow_third(3.0 / (2.0 * a1), j - 2) *
                 std::pow(1.0 / b1, k + 1.5) * base_integral(k + 1, j - 2);
    out.d_minus = 2.0 * real_pow_third(3.0 / (2.0 * at1), j) *
                  std::pow(1.0 / b1, k + j / 3.0 + 0.5) * base_integral(k, j);
    out.c_minus = 2.0 * (1.0 / at1) * real_pow_third(3.0 / (2.0 * at1), j - 2) *
                  std::pow(1.0 / b1, k + (j + 1) / 3.0 + 0.5) * base_integral(k + 1, j - 2);
    return out;
}

MelnikovPoly melnikov_poly(const FormI& form, const PerturbationSpec& pert) {
    if (!is_center(form))
        throw NotACenterError("the Melnikov function is defined on the center family only");
    pert.validate();

    auto get = [](const std::map<std::pair<int, int>, double>& fam, int i, int j) {
        auto it = fam.find({i, j});
        return it == fam.end() ? 0.0 : it->second;
    };

    MelnikovPoly m;
    m.form = form;
    m.n = pert.n;
    const double b1 = form.b1;
    for (int k = 0; 2 * k <= pert.n; ++k) {
        for (int j = 0; 2 * k + j <= pert.n; ++j) {
            double xi = 0.0;
            xi += get(pert.d_plus, 2 * k, j) * hat_coefficients(form, k, j).d_plus;
            xi += b1 * get(pert.d_minus, 2 * k, j) * hat_coefficients(form, k, j).d_minus;
            if (j >= 1) {
                // the paired c-terms carry the shifted second index j-1
                const HatCoefficients hc = hat_coefficients(form, k, j - 1);
                xi -= get(pert.c_plus, 2 * k + 1, j - 1) * hc.c_plus;
                xi -= b1 * get(pert.c_minus, 2 * k + 1, j - 1) * hc.c_minus;
            }
            if (std::abs(xi) >= 1e-14) m.terms[{2 * k, j}] = xi;
        }
    }
    return m;
}

std::vector<int> exponent_set(int n) {
    std::set<int> vals;
    for (int i = 0; i <= n; i += 2)
        for (int j = 0; j < 3 && i + j <= n; ++j) vals.insert(3 * i + 2 * j);
    return {vals.begin(), vals.end()};
}

int xi_max(int n) {
    if (n % 2 == 1) return 2 * ((n + 1) / 2) + (n - 1) / 2 - 1;
    return 2 * (n / 2) + (n + 2) / 2 - 1;
}

int descartes_variations(const std::vector<double>& coeffs) { return sign_variations(coeffs); }

std::vector<MelnikovRoot> positive_roots(const MelnikovPoly& m) {
    const auto coeffs = m.s_coefficients();
    if (coeffs.empty()) throw EmptyPolyError("Melnikov function has no nonzero terms");

    Poly q(static_cast<std::size_t>(coeffs.rbegin()->first) + 1, 0.0);
    for (const auto& [e, c] : coeffs) q[static_cast<std::size_t>(e)] = c;

    std::vector<MelnikovRoot> out;
    for (const auto& r : isolate_positive_roots(q))
        out.push_back({r.x * r.x * r.x, r.simple});
    return out;
}

PerturbationSpec realize_roots(const FormI& form, int n, const std::vector<double>& roots_h) {
    if (!is_center(form)) throw NotACenterError("realization requires the center family");
    const int cap = xi_max(n);
    if (static_cast<int>(roots_h.size()) > cap)
        throw TooManyRootsError("more target roots than xi_max(n) allows");

    std::vector<double> s_roots;
    for (double h : roots_h) {
        if (!(h > 0.0)) throw DuplicateRootsError("target roots must be positive");
        s_roots.push_back(std::cbrt(h));
    }
    std::sort(s_roots.begin(), s_roots.end());
    for (std::size_t i = 1; i < s_roots.size(); ++i)
        if (s_roots[i] - s_roots[i - 1] <= 1e-12 * std::max(1.0, s_roots[i]))
            throw DuplicateRootsError("target roots must be pairwise distinct");

    // q(s) = prod (s - s_r): its positive roots are exactly the targets.
    Poly q{1.0};
    for (double sr : s_roots) {
        Poly next(q.size() + 1, 0.0);
        for (std::size_t i = 0; i < q.size(); ++i) {
            next[i + 1] += q[i];
            next[i] -= sr * q[i];
        }
        q = next;
    }

    PerturbationSpec pert;
    pert.n = n;
    for (std::size_t e = 0; e < q.size(); ++e) {
        if (q[e] == 0.0) continue;
        // exponent e = 3k + j with 0 <= j < 3 on the trapezoid
        const int j = static_cast<int>(e) % 3;
        const int k = (static_cast<int>(e) - j) / 3;
        if (2 * k + j > n)
            throw TooManyRootsError("required exponent exceeds the degree budget");
        pert.d_plus[{2 * k, j}] = q[e] / hat_coefficients(form, k, j).d_plus;
    }
    return pert;
}

} // namespace pwqh
