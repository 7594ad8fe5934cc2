#ifndef WEYLSTAT_SERIES_HPP
#define WEYLSTAT_SERIES_HPP

#include "weylstat/numbers.hpp"
#include "weylstat/unipoly.hpp"

namespace weylstat {

// Coefficients 0..K of the formal power series p(t) / (1-t)^m, m >= 1.
// Coefficient k is sum_j p_j * C(k - j + m - 1, m - 1); entries are integers
// carried as exact rationals for uniformity with the identity machinery.
RatSeq series_quotient(const UniPoly& p, int m, int K);

// Coefficients of the Bernoulli polynomial B_n(x), ascending by power of x,
// in the convention B_1(x) = x - 1/2. Derived from the defining recurrence
// sum_{k<n} C(n,k) B_k(x) = n x^(n-1).
RatSeq bernoulli_poly(int n);

// B_n evaluated at an exact rational point.
Rat bernoulli_eval(int n, const Rat& x);

// sum_{j=1}^{k} j^m by direct summation; m >= 0, k >= 0 (empty sum is 0).
Int power_sum(int m, const Int& k);

// Same value through Faulhaber's formula
// (B_{m+1}(k+1) - B_{m+1}(1)) / (m+1); the two routes must agree.
Int power_sum_bernoulli(int m, const Int& k);

} // namespace weylstat

#endif
