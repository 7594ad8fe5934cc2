#include "weylstat/unipoly.hpp"

#include "weylstat/errors.hpp"

namespace weylstat {

void UniPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& UniPoly::coeff(int k) const {
    static const Int zero = 0;
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<size_t>(k)];
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Int& s) const {
    std::vector<Int> r(c_);
    for (auto& v : r) v *= s;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::shifted(int k) const {
    if (is_zero()) return UniPoly();
    std::vector<Int> r(static_cast<size_t>(k), Int(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return UniPoly(std::move(r));
}

Int UniPoly::eval(const Int& x) const {
    Int acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Int UniPoly::total() const {
    Int acc = 0;
    for (const auto& v : c_) acc += v;
    return acc;
}

UniPoly UniPoly::halved() const {
    std::vector<Int> r(c_);
    for (auto& v : r) {
        if (mpz_odd_p(v.get_mpz_t()))
            throw inconsistency_error("coefficient " + v.get_str() +
                                      " is odd where an exact half was required");
        v /= 2;
    }
    return UniPoly(std::move(r));
}

bool UniPoly::all_coeffs_nonnegative() const {
    for (const auto& v : c_)
        if (v < 0) return false;
    return true;
}

std::string UniPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!out.empty()) out += " + ";
        out += c_[k].get_str();
        if (k == 1)
            out += "*t";
        else if (k > 1)
            out += "*t^" + std::to_string(k);
    }
    return out;
}

UniPoly one_minus_t_pow(int m) {
    if (m < 0) throw error("one_minus_t_pow needs m >= 0");
    std::vector<Int> r(static_cast<size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
        r[static_cast<size_t>(k)] = binomial(m, k);
        if (k % 2 == 1) r[static_cast<size_t>(k)] = -r[static_cast<size_t>(k)];
    }
    return UniPoly(std::move(r));
}

} // namespace weylstat
