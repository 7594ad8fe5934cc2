#ifndef WEYLSTAT_CLT_HPP
#define WEYLSTAT_CLT_HPP

#include <optional>
#include <vector>

#include "weylstat/closed_forms.hpp"
#include "weylstat/numbers.hpp"
#include "weylstat/unipoly.hpp"

namespace weylstat {

// r-th factorial moment p^(r)(1) / p(1) of the distribution with mass
// proportional to the coefficients of p; exact.
Rat factorial_moment(const UniPoly& p, int r);

struct MeanVar {
    Rat mean;
    Rat variance;
};

// Exact mean and variance from the first two factorial moments.
MeanVar mean_variance(const UniPoly& p);

// Standard normal CDF through erfc; absolute error well under 1e-12 on
// |x| <= 8.
double normal_cdf(double x);

// Kolmogorov discrepancy between the distribution given by p's coefficients
// and the normal with the given exact mean and variance: the lattice CDF at
// each k is compared with the normal CDF at k + 1/2, the standard continuity
// correction for integer-valued distributions. The step CDF is carried as
// exact rationals; everything is converted to binary64 only at the final
// comparisons. Zero variance raises degenerate_error.
double ks_distance(const UniPoly& p, const Rat& mean, const Rat& variance);

// The asserted limit-theorem constants for a family and sign class:
// mean (n-1)/2 for the type-A families and n/2 otherwise, from mean_onset on;
// variance (n+1)/12 ((n+2)/12 for d-des) from var_onset on. Below the onset
// the identities genuinely fail and values are only recorded.
struct OnsetRow {
    int mean_onset;
    int var_onset;
};
OnsetRow onset_row(Family f, SignClass s);
Rat expected_mean(Family f, int n);
Rat expected_variance(Family f, int n);

struct DistReport {
    Family family;
    SignClass sign;
    int n;
    UniPoly poly;
    Rat mean;
    Rat variance;
    double ks;
};

// Closed-form polynomials for n in [n_lo, n_hi] with exact moments and the
// KS distance; raises inconsistency_error if an at-or-above-onset moment
// identity fails.
std::vector<DistReport> clt_report(Family f, SignClass s, int n_lo, int n_hi);

} // namespace weylstat

#endif
