#ifndef WEYLSTAT_NUMBERS_HPP
#define WEYLSTAT_NUMBERS_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace weylstat {

// Exact arithmetic lives on GMP. Everything downstream (tables, polynomial
// coefficients, moments) is either an Int or a Rat; doubles appear only at the
// very end of the KS computation.
using Int = mpz_class;
using Rat = mpq_class;

// Finite sequence of exact rationals, ascending by index (series coefficients,
// Bernoulli polynomial coefficients by power).
using RatSeq = std::vector<Rat>;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int int_pow(long base, unsigned long e) { return int_pow(Int(base), e); }

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// C(n, k) for n possibly large, k >= 0; zero when k > n or n < 0.
inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

// Falling factorial x(x-1)...(x-r+1) of a nonnegative integer argument.
inline Int falling_factorial(const Int& x, unsigned long r) {
    Int acc = 1;
    for (unsigned long i = 0; i < r; ++i) acc *= (x - static_cast<long>(i));
    return acc;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

// Canonical rational text: "p/q" in lowest terms, "p" when q == 1.
inline std::string to_string(const Rat& v) { return v.get_str(); }

} // namespace weylstat

#endif
