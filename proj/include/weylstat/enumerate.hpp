#ifndef WEYLSTAT_ENUMERATE_HPP
#define WEYLSTAT_ENUMERATE_HPP

#include <cstdint>
#include <vector>

#include "weylstat/bipoly.hpp"
#include "weylstat/numbers.hpp"
#include "weylstat/signed_perm.hpp"
#include "weylstat/unipoly.hpp"

namespace weylstat {

// Pull stream over the windows of a group (optionally one sign class) in
// lexicographic order under the usual integer order on letters,
// -n < ... < -1 < 1 < ... < n. Yields each element exactly once.
//
// Internally a positionwise odometer: letters are chosen left to right in
// ascending order, skipping used absolute values; for D and B-minus-D the
// sign of the final letter is forced by the negative-count parity. This makes
// the stream trivially partitionable by the first letter, which is what the
// parallel tabulation below uses.
class WindowStream {
public:
    WindowStream(int n, Group g, SignClass sign = SignClass::All);

    // Restrict the first letter to candidate indices [lo, hi) within the
    // ascending letter order; [0, 2n) is the whole group. Used for chunking.
    WindowStream(int n, Group g, SignClass sign, int lo, int hi);

    // Writes the next window into out and returns true, or returns false when
    // the stream is exhausted.
    bool next(SignedPerm& out);

    // A throwaway value suitable as the out-argument of next().
    static SignedPerm placeholder(int n);

private:
    int value_at(int c) const { return c < n_ ? c - n_ : c - n_ + 1; }
    bool admissible(int depth, int v) const;

    int n_;
    Group g_;
    SignClass sign_;
    int lo_, hi_;
    std::vector<int> win_;
    std::vector<int> cand_;
    uint32_t used_ = 0;
    int depth_ = 0;
    int negc_ = 0;
    bool done_ = false;
};

// |S_n|, |B_n|, |D_n| or |B_n - D_n|.
Int group_order(int n, Group g);

// Distribution of a statistic over a group or one of its sign classes:
// coeffs[k] = #{elements with stat == k}, trailing zeros trimmed.
struct DistTable {
    int n;
    Group group;
    SignClass sign;
    Stat stat;
    std::vector<Int> coeffs;

    UniPoly poly() const { return UniPoly(coeffs); }
    Int total() const;
    bool operator==(const DistTable& o) const;
};

// Exhaustive tabulation. Work is split over first-letter chunks and merged in
// canonical chunk order, so the result is identical for any thread count.
DistTable brute_distribution(int n, Group g, SignClass sign, Stat stat, int threads = 1);

// sum over the group of sign_of(pi) * t^stat(pi).
UniPoly brute_signed_gf(int n, Group g, Stat stat, int threads = 1);

// sum over an ambient set (D or B-minus-D) of (-1)^inv_d s^asc_b t^des_b.
BiPoly brute_bivariate_sgn(int n, Group ambient, int threads = 1);

// sum over B_n of (-1)^inv_b s^asc_b t^des_b.
BiPoly brute_signed_bivariate_b(int n, int threads = 1);

} // namespace weylstat

#endif
