#ifndef WEYLSTAT_UNIPOLY_HPP
#define WEYLSTAT_UNIPOLY_HPP

#include <string>
#include <vector>

#include "weylstat/numbers.hpp"

namespace weylstat {

// Dense univariate polynomial in t with exact integer coefficients.
// Always normalized: no trailing zero coefficients; the zero polynomial is the
// empty coefficient vector and reports degree() == -1 as its sentinel.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static UniPoly constant(const Int& v) { return UniPoly(std::vector<Int>{v}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    // Coefficient of t^k; zero beyond the degree.
    const Int& coeff(int k) const;

    const std::vector<Int>& coeffs() const { return c_; }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Int& s) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

    // Multiply by t^k.
    UniPoly shifted(int k) const;

    Int eval(const Int& x) const;

    // Sum of coefficients, i.e. eval at 1.
    Int total() const;

    // Exact division of every coefficient by 2; raises inconsistency_error if
    // any coefficient is odd.
    UniPoly halved() const;

    bool all_coeffs_nonnegative() const;

    // "c0 + c1*t + c2*t^2" with explicit decimal coefficients, skipping zero
    // terms; the zero polynomial prints as "0".
    std::string to_string() const;

private:
    void normalize();
    std::vector<Int> c_;
};

// (1 - t)^m for m >= 0.
UniPoly one_minus_t_pow(int m);

} // namespace weylstat

#endif
