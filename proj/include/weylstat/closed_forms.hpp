#ifndef WEYLSTAT_CLOSED_FORMS_HPP
#define WEYLSTAT_CLOSED_FORMS_HPP

#include <functional>
#include <string>

#include "weylstat/bipoly.hpp"
#include "weylstat/signed_perm.hpp"
#include "weylstat/unipoly.hpp"

namespace weylstat {

// The eight distribution families with closed-form constructions. Each pairs
// an ambient set with a statistic:
//   ADes  des   over S_n          AExc  exc    over S_n
//   BDes  des_b over B_n          BExc  exc_b  over B_n
//   DDes  des_d over D_n          DExc  exc_b  over D_n
//   BDesOverD        des_b over D_n
//   BDesOverBminusD  des_b over B_n - D_n
enum class Family {
    ADes,
    AExc,
    BDes,
    BExc,
    DDes,
    DExc,
    BDesOverD,
    BDesOverBminusD,
};

constexpr Family kAllFamilies[] = {
    Family::ADes, Family::AExc, Family::BDes,       Family::BExc,
    Family::DDes, Family::DExc, Family::BDesOverD, Family::BDesOverBminusD,
};

const char* family_id(Family f); // "a-des", "a-exc", ..., "bdes-over-b-minus-d"
bool parse_family_id(const std::string& id, Family& out);
Group family_group(Family f);
Stat family_stat(Family f);

// Multiply the degree-<=n truncation of sum_k rhs(k) t^k by (1-t)^(n+1) and
// truncate to degree n: recovers the polynomial whose Worpitzky-style series
// expansion has coefficients rhs(k).
UniPoly invert_series(int n, const std::function<Int(int)>& rhs);

// Descent generating polynomial of S_n, via inversion of sum (k+1)^n t^k.
UniPoly eulerian_a(int n);

// Type B analogue, via inversion of sum (2k+1)^n t^k.
UniPoly eulerian_b(int n);

// Type D analogue through the recurrence D_n = B_n - n 2^(n-1) t A_(n-1);
// the one-letter case is the constant 1.
UniPoly eulerian_d(int n);

// Halves of B_n: (B_n + (1-t)^n)/2 and (B_n - (1-t)^n)/2. These are at once
// the des_b distributions over D_n and B_n - D_n and (for the plus half) the
// exc_b distribution over D_n.
UniPoly b_half_plus(int n);
UniPoly b_half_minus(int n);

// Signed generating function sum sign_of(pi) t^stat(pi) in closed form.
// Defined for the six families whose signed sum is univariate (the two
// bdes-over families have the bivariate form below). The DDes case returns 1
// at n = 1, where the one-letter descent convention makes the signed sum 1.
UniPoly signed_gf(Family f, int n);

// Closed form of sum (-1)^inv_d s^asc_b t^des_b over D_n or B_n - D_n:
//   over D:         (s-t)^n (n even),  s(s-t)^(n-1) (n odd)
//   over B minus D: 0       (n even),  t(s-t)^(n-1) (n odd)
BiPoly sgn_bdes_bivariate(int n, Group ambient);

// Distribution polynomial of the family over its whole ambient set.
UniPoly unrestricted(Family f, int n);

// Distribution over one sign class, by the half-sum (P +/- SgnP)/2.
// All -> unrestricted. Raises inconsistency_error if the half-sum fails to be
// a nonnegative integer polynomial.
UniPoly restricted(Family f, int n, SignClass sign);

} // namespace weylstat

#endif
