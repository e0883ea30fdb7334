#include "pwqh/bipoly.hpp"

#include <cmath>
#include <sstream>

namespace pwqh {

BiPoly BiPoly::monomial(int i, int j, double c) {
    BiPoly p;
    p.add_term(i, j, c);
    return p;
}

void BiPoly::add_term(int i, int j, double c) {
    Key k{i, j};
    auto it = terms_.find(k);
    double v = (it == terms_.end() ? 0.0 : it->second) + c;
    if (std::abs(v) <= kZeroTol) {
        if (it != terms_.end()) terms_.erase(it);
    } else {
        terms_[k] = v;
    }
}

double BiPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? 0.0 : it->second;
}

int BiPoly::degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
}

double BiPoly::eval(double x, double y) const {
    double s = 0.0;
    for (const auto& [k, c] : terms_) s += c * std::pow(x, k.first) * std::pow(y, k.second);
    return s;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

BiPoly BiPoly::scaled(double c) const {
    BiPoly r;
    for (const auto& [k, v] : terms_) r.add_term(k.first, k.second, c * v);
    return r;
}

std::vector<double> BiPoly::restrict_y0() const {
    int deg = -1;
    for (const auto& [k, c] : terms_)
        if (k.second == 0) deg = std::max(deg, k.first);
    if (deg < 0) return {};
    std::vector<double> out(static_cast<size_t>(deg) + 1, 0.0);
    for (const auto& [k, c] : terms_)
        if (k.second == 0) out[static_cast<size_t>(k.first)] = c;
    return out;
}

std::vector<double> BiPoly::restrict_x0() const {
    int deg = -1;
    for (const auto& [k, c] : terms_)
        if (k.first == 0) deg = std::max(deg, k.second);
    if (deg < 0) return {};
    std::vector<double> out(static_cast<size_t>(deg) + 1, 0.0);
    for (const auto& [k, c] : terms_)
        if (k.first == 0) out[static_cast<size_t>(k.second)] = c;
    return out;
}

BiPoly BiPoly::substituted_scaled(double sx, double sy, double c) const {
    BiPoly r;
    for (const auto& [k, v] : terms_)
        r.add_term(k.first, k.second, c * v * std::pow(sx, k.first) * std::pow(sy, k.second));
    return r;
}

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        os << c;
        if (k.first) os << "*x^" << k.first;
        if (k.second) os << "*y^" << k.second;
        first = false;
    }
    return os.str();
}

} // namespace pwqh
