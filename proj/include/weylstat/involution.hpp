#ifndef WEYLSTAT_INVOLUTION_HPP
#define WEYLSTAT_INVOLUTION_HPP

#include <array>
#include <vector>

#include "weylstat/bipoly.hpp"
#include "weylstat/enumerate.hpp"
#include "weylstat/signed_perm.hpp"

namespace weylstat {

// One-based position of the letter r (exact signed match) or of +-r.
// Returns 0 when absent.
int pos_of(const SignedPerm& p, int r);
int pos_abs(const SignedPerm& p, int r);

// The six-way case split of an ambient set (D_n or B_n - D_n, n >= 3) by how
// the two largest letters n and n-1 sit in the window. Writing pair for the
// positions of +-n and +-(n-1):
//   1  equal signs, adjacent, occupying the last two slots
//   2  both positive, adjacent, not at the end
//   3  both negative, adjacent, not at the end
//   4  both positive, non-adjacent
//   5  both negative, non-adjacent
//   6  opposite signs
// Classes 1-5 are exactly the windows whose deletion pattern (drop +-n and
// +-(n-1)) lies in the length-(n-2) set of the same type as the ambient;
// class 6 is the complementary type. classify checks all six predicates and
// insists exactly one holds.
int classify(const SignedPerm& p, Group ambient);

// Window of length n-2 left after deleting the letters +-n and +-(n-1).
SignedPerm deletion_pattern(const SignedPerm& p);

// The descent-preserving, sign-reversing map on classes 2-6: swap the
// absolute values n and n-1 where they stand, keeping each slot's sign, and
// for the adjacent same-sign classes 2/3 negate both slots as well. Swaps
// classes 2 and 3, fixes the membership of 4, 5, 6. Preserves des_b, flips
// the parity of inv_d, keeps the element in its ambient set. Not defined on
// class 1.
SignedPerm involution_map(const SignedPerm& p, Group ambient);

struct ClassSummary {
    Int size = 0;
    BiPoly signed_sum; // sum of (-1)^inv_d s^asc_b t^des_b over the class
};

// Sizes and signed bivariate sums of all six classes in one sweep.
std::array<ClassSummary, 7> class_summaries(int n, Group ambient, int threads = 1);

// Cancellation check for one class. Classes 2 and 3 cancel jointly (the map
// swaps them), so cls = 2 or 3 reports whether sum(2) + sum(3) == 0; classes
// 4, 5, 6 are checked alone. cls = 1 reports whether that class's own sum is
// zero (true only over B minus D at even n, where the whole sum vanishes).
struct CancellationReport {
    int cls;
    Int size;
    bool signed_sum_is_zero;
};
CancellationReport verify_cancellation(int n, Group ambient, int cls, int threads = 1);

// The designated surviving subset of class 1: L_n inside D_n (ambient D),
// M_n inside B_n - D_n (ambient B minus D; empty at even n). Built
// inductively by appending one of the four two-letter tails (n-1,n), (n,n-1),
// (-n,-(n-1)), (-(n-1),-n) to each survivor of length n-2. Sorted.
std::vector<SignedPerm> build_fixed_points(int n, Group ambient);

// Signed bivariate sum over the surviving subset.
BiPoly fixed_point_gf(int n, Group ambient);

// Everything the involution analysis claims about one (n, ambient), checked.
struct InvolutionReport {
    Group ambient;
    int n;
    std::array<CancellationReport, 7> classes; // entries 1..6 used
    bool partition_ok;        // class sizes add up to the ambient order
    bool residue_matches;     // class-1 sum equals the closed bivariate form
    Int fixed_count;
    bool fixed_count_matches; // |L_n| = 2^n / 2^(n-1), |M_n| = 2^(n-1) / 0
    bool fixed_gf_matches;    // sum over survivors equals the closed form
    bool survivors_cancel;    // class 1 minus the survivors sums to zero
    bool pass() const;
};
InvolutionReport involution_report(int n, Group ambient, int threads = 1);

} // namespace weylstat

#endif
