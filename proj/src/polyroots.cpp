#include "pwqh/polyroots.hpp"

#include <algorithm>
#include <cmath>

namespace pwqh {
namespace {

double max_abs(const Poly& p) {
    double m = 0.0;
    for (double c : p) m = std::max(m, std::abs(c));
    return m;
}

// Coefficients of p(lo + (hi - lo) t): shift then scale, O(n^2).
Poly compose_affine(const Poly& p, double lo, double hi) {
    const int n = static_cast<int>(p.size());
    Poly q(p);
    // Taylor shift by lo: q(t) = p(t + lo)
    if (lo != 0.0) {
        for (int i = 0; i < n - 1; ++i)
            for (int j = n - 2; j >= i; --j) q[j] += lo * q[j + 1];
    }
    // scale by (hi - lo)
    double s = 1.0;
    for (int i = 1; i < n; ++i) {
        s *= (hi - lo);
        q[i] *= s;
    }
    return q;
}

// Variations of (1+t)^deg q(1/(1+t)): bounds the roots of q in (0, 1).
int budan_variations(const Poly& q) {
    Poly r(q.rbegin(), q.rend()); // reverse: t^deg q(1/t)
    const int n = static_cast<int>(r.size());
    for (int i = 0; i < n - 1; ++i)
        for (int j = n - 2; j >= i; --j) r[j] += r[j + 1]; // shift by 1
    return sign_variations(r);
}

double bisect(const Poly& p, double lo, double hi, double flo, double tol) {
    for (int it = 0; it < 200 && hi - lo > tol * std::max(1.0, std::abs(hi)); ++it) {
        const double m = 0.5 * (lo + hi);
        const double fm = poly_eval(p, m);
        if (fm == 0.0) return m;
        if ((flo < 0) == (fm < 0)) {
            lo = m;
            flo = fm;
        } else {
            hi = m;
        }
    }
    return 0.5 * (lo + hi);
}

struct Isolator {
    const Poly& p;
    Poly dp;
    double tol;
    double scale;
    std::vector<RootEstimate> roots;

    bool sign_change_at(double r) const {
        const double d = std::max(tol, 1e-9 * std::max(1.0, std::abs(r)));
        const double a = poly_eval(p, r - d), b = poly_eval(p, r + d);
        return a != 0.0 && b != 0.0 && (a < 0) != (b < 0);
    }

    void emit(double r) { roots.push_back({r, sign_change_at(r)}); }

    void recurse(double lo, double hi, int depth) {
        const Poly q = compose_affine(p, lo, hi);
        const int v = budan_variations(q);
        if (v == 0) return;
        if (hi - lo <= tol * std::max(1.0, std::abs(hi)) || depth > 80) {
            emit(0.5 * (lo + hi));
            return;
        }
        const double flo = poly_eval(p, lo), fhi = poly_eval(p, hi);
        if (v == 1 && flo != 0.0 && fhi != 0.0 && (flo < 0) != (fhi < 0)) {
            emit(bisect(p, lo, hi, flo, tol));
            return;
        }
        double m = 0.5 * (lo + hi);
        if (std::abs(poly_eval(p, m)) <= 1e-14 * scale) {
            // Root exactly at the split point: record it, then carve a tiny
            // gap so the halves see strictly fewer variations.
            emit(m);
            const double gap = std::max(tol, 1e-12 * std::max(1.0, std::abs(m)));
            recurse(lo, m - gap, depth + 1);
            recurse(m + gap, hi, depth + 1);
            return;
        }
        recurse(lo, m, depth + 1);
        recurse(m, hi, depth + 1);
    }
};

} // namespace

double poly_eval(const Poly& p, double x) {
    double s = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) s = s * x + *it;
    return s;
}

Poly poly_derivative(const Poly& p) {
    if (p.size() <= 1) return {};
    Poly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = double(i) * p[i];
    return d;
}

Poly poly_trimmed(const Poly& p, double rel_eps) {
    const double cutoff = rel_eps * max_abs(p);
    Poly q(p);
    while (!q.empty() && std::abs(q.back()) <= cutoff) q.pop_back();
    return q;
}

bool poly_is_zero(const Poly& p, double rel_eps) { return poly_trimmed(p, rel_eps).empty(); }

int sign_variations(const std::vector<double>& coeffs) {
    int v = 0, prev = 0;
    for (double c : coeffs) {
        if (c == 0.0) continue;
        const int s = c > 0 ? 1 : -1;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

std::vector<RootEstimate> isolate_positive_roots(const Poly& poly, double tol) {
    Poly p = poly_trimmed(poly);
    if (p.size() <= 1) return {};
    // strip the root at 0
    std::size_t low = 0;
    const double cutoff = 1e-14 * max_abs(p);
    while (low < p.size() && std::abs(p[low]) <= cutoff) ++low;
    if (low > 0) p.erase(p.begin(), p.begin() + static_cast<long>(low));
    if (p.size() <= 1) return {};

    // Cauchy bound on positive roots
    double bound = 0.0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        bound = std::max(bound, std::abs(p[i] / p.back()));
    bound = 1.0 + bound;

    Isolator iso{p, poly_derivative(p), tol, max_abs(p), {}};
    iso.recurse(0.0, bound, 0);

    auto& roots = iso.roots;
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.x < b.x; });

    // Around a multiple root the evaluation noise floor spans ~sqrt(eps), so
    // the subdivision reports a band of tiny boxes there. Collapse any such
    // cluster to one representative and settle its flag by a sign probe that
    // spans the whole band.
    std::vector<RootEstimate> out;
    std::size_t i = 0;
    while (i < roots.size()) {
        std::size_t k = i;
        while (k + 1 < roots.size() &&
               roots[k + 1].x - roots[k].x <= 1e-6 * std::max(1.0, roots[k].x))
            ++k;
        if (k == i) {
            out.push_back(roots[i]);
        } else {
            const double mid = 0.5 * (roots[i].x + roots[k].x);
            const double d = std::max(2.0 * (roots[k].x - roots[i].x),
                                      1e-6 * std::max(1.0, mid));
            const double lo = poly_eval(p, mid - d), hi = poly_eval(p, mid + d);
            const bool flips = lo != 0.0 && hi != 0.0 && (lo < 0) != (hi < 0);
            out.push_back({mid, flips});
        }
        i = k + 1;
    }
    out.erase(std::remove_if(out.begin(), out.end(), [&](const auto& r) { return r.x <= 0.0; }),
              out.end());
    return out;
}

std::vector<RootEstimate> all_real_roots(const Poly& poly, double tol) {
    Poly p = poly_trimmed(poly);
    std::vector<RootEstimate> out;
    if (p.size() <= 1) return out;

    const double cutoff = 1e-14 * max_abs(p);
    std::size_t low = 0;
    while (low < p.size() && std::abs(p[low]) <= cutoff) ++low;
    if (low > 0) {
        // root at the origin of multiplicity `low`
        Poly rest(p.begin() + static_cast<long>(low), p.end());
        const bool odd = (low % 2) == 1;
        out.push_back({0.0, odd && std::abs(poly_eval(rest, 0.0)) > cutoff});
    }

    for (const auto& r : isolate_positive_roots(p, tol)) out.push_back(r);

    Poly neg(p);
    for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
    for (const auto& r : isolate_positive_roots(neg, tol)) out.push_back({-r.x, r.simple});

    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.x < b.x; });
    return out;
}

} // namespace pwqh
