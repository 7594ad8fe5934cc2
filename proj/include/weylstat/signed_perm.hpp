#ifndef WEYLSTAT_SIGNED_PERM_HPP
#define WEYLSTAT_SIGNED_PERM_HPP

#include <string>
#include <vector>

#include "weylstat/errors.hpp"

namespace weylstat {

// The four element sets we enumerate over. BminusD is the odd-negative coset,
// not a group, but it behaves like the others for every purpose here.
enum class Group { A, B, D, BminusD };

// Restriction of a set to the +1 / -1 classes of its sign character.
enum class SignClass { All, Plus, Minus };

// Every statistic the library computes on a window.
enum class Stat { Des, Exc, Inv, DesB, AscB, ExcB, InvB, InvD, Negs, DesD };

class WindowStream;

// A signed permutation recorded by its window (pi_1, ..., pi_n): n nonzero
// integers whose absolute values are exactly 1..n. Ordinary permutations are
// the windows with no negative letter.
class SignedPerm {
    // The enumeration stream writes windows it generated itself, skipping the
    // constructor's validation on the hot path.
    friend class WindowStream;

public:
    // Validates the window; rejects zero entries, out-of-range letters and
    // repeated absolute values, naming the first violated rule.
    explicit SignedPerm(std::vector<int> window);

    int n() const { return static_cast<int>(w_.size()); }

    // One-based letter access, matching the notation pi_i.
    int at(int i) const { return w_[static_cast<size_t>(i) - 1]; }

    const std::vector<int>& window() const { return w_; }

    bool operator==(const SignedPerm& o) const { return w_ == o.w_; }
    bool operator<(const SignedPerm& o) const { return w_ < o.w_; }

private:
    std::vector<int> w_;
};

// --- membership ----------------------------------------------------------

int negs(const SignedPerm& p);
bool in_group(const SignedPerm& p, Group g);

// +1 or -1: the sign character appropriate to the ambient set. Type A uses
// (-1)^inv, type B uses (-1)^inv_B, and both D and B-minus-D use (-1)^inv_D.
int sign_of(const SignedPerm& p, Group g);

bool in_sign_class(const SignedPerm& p, Group g, SignClass s);

// --- statistics ----------------------------------------------------------

// Type A statistics; the window must be all-positive.
int stat_des(const SignedPerm& p); // #{i in [n-1] : pi_i > pi_{i+1}}
int stat_exc(const SignedPerm& p); // #{i in [n-1] : pi_i > i}
int stat_inv(const SignedPerm& p); // classic inversions

// Statistics defined on any signed window.
int stat_des_b(const SignedPerm& p); // descents with virtual pi_0 = 0
int stat_asc_b(const SignedPerm& p); // n - des_b
int stat_exc_b(const SignedPerm& p); // #{i : pi_{|pi(i)|} > pi_i} + #{i : pi_i = -i}
int stat_inv_b(const SignedPerm& p); // inv_d + negs (Coxeter length in type B)
int stat_inv_d(const SignedPerm& p); // inv on the window + #{i<j : -pi_i > pi_j}
int stat_negs(const SignedPerm& p);
int stat_des_d(const SignedPerm& p); // descents with virtual pi_0 = -pi_2; 0 when n = 1

// Inversions of the window read as a word in the usual integer order, with no
// positivity requirement. Building block of inv_d; equal to stat_inv on
// ordinary permutations.
int window_inversions(const SignedPerm& p);

int stat_value(const SignedPerm& p, Stat s);

// Largest value stat s can take on a window of length n (for table sizing).
int max_stat_value(Stat s, int n);

// --- names and one-line notation ----------------------------------------

// Identifiers used by the CLI and in JSON output.
const char* group_id(Group g);
const char* sign_id(SignClass s);
const char* stat_id(Stat s);
bool parse_group_id(const std::string& id, Group& out);
bool parse_sign_id(const std::string& id, SignClass& out);
bool parse_stat_id(const std::string& id, Stat& out);

// One-line notation: comma-separated signed integers, e.g. "-2,1".
SignedPerm parse_window(const std::string& text);
std::string format_window(const SignedPerm& p);

} // namespace weylstat

#endif
