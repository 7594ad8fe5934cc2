#ifndef WEYLSTAT_BIPOLY_HPP
#define WEYLSTAT_BIPOLY_HPP

#include <map>
#include <string>
#include <utility>

#include "weylstat/numbers.hpp"
#include "weylstat/unipoly.hpp"

namespace weylstat {

// Sparse bivariate polynomial in s and t with exact integer coefficients,
// keyed by (s-exponent, t-exponent). Zero coefficients are never stored, so
// equality is plain map equality.
class BiPoly {
public:
    BiPoly() = default;

    static BiPoly monomial(int s_exp, int t_exp, const Int& c);

    // (s - t)^m for m >= 0.
    static BiPoly s_minus_t_pow(int m);

    void add_term(int s_exp, int t_exp, const Int& c);

    bool is_zero() const { return terms_.empty(); }

    const std::map<std::pair<int, int>, Int>& terms() const { return terms_; }

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BiPoly& o) const { return terms_ != o.terms_; }

    // Substitute s = 1, leaving a univariate polynomial in t.
    UniPoly eval_s1() const;

    // True when every monomial has s-exponent + t-exponent == d.
    bool is_homogeneous(int d) const;

    // "c*s^a*t^b + ..." in key order; "0" for the zero polynomial.
    std::string to_string() const;

private:
    std::map<std::pair<int, int>, Int> terms_;
};

} // namespace weylstat

#endif
