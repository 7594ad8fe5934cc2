#include "weylstat/bipoly.hpp"

#include "weylstat/errors.hpp"

namespace weylstat {

BiPoly BiPoly::monomial(int s_exp, int t_exp, const Int& c) {
    BiPoly p;
    p.add_term(s_exp, t_exp, c);
    return p;
}

BiPoly BiPoly::s_minus_t_pow(int m) {
    if (m < 0) throw error("s_minus_t_pow needs m >= 0");
    BiPoly p;
    for (int k = 0; k <= m; ++k) {
        Int c = binomial(m, k);
        if (k % 2 == 1) c = -c;
        p.add_term(m - k, k, c);
    }
    return p;
}

void BiPoly::add_term(int s_exp, int t_exp, const Int& c) {
    if (c == 0) return;
    auto key = std::make_pair(s_exp, t_exp);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [k, v] : o.terms_) r.add_term(k.first, k.second, v);
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [k, v] : o.terms_) r.add_term(k.first, k.second, -v);
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r;
    for (const auto& [ka, va] : terms_)
        for (const auto& [kb, vb] : o.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
    return r;
}

UniPoly BiPoly::eval_s1() const {
    int maxd = -1;
    for (const auto& [k, v] : terms_)
        if (k.second > maxd) maxd = k.second;
    std::vector<Int> c(static_cast<size_t>(maxd) + 1, Int(0));
    for (const auto& [k, v] : terms_) c[static_cast<size_t>(k.second)] += v;
    return UniPoly(std::move(c));
}

bool BiPoly::is_homogeneous(int d) const {
    for (const auto& [k, v] : terms_)
        if (k.first + k.second != d) return false;
    return true;
}

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, v] : terms_) {
        if (!out.empty()) out += " + ";
        out += v.get_str();
        if (k.first == 1)
            out += "*s";
        else if (k.first > 1)
            out += "*s^" + std::to_string(k.first);
        if (k.second == 1)
            out += "*t";
        else if (k.second > 1)
            out += "*t^" + std::to_string(k.second);
    }
    return out;
}

} // namespace weylstat
