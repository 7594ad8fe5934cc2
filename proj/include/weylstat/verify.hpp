#ifndef WEYLSTAT_VERIFY_HPP
#define WEYLSTAT_VERIFY_HPP

#include <string>
#include <vector>

#include "weylstat/closed_forms.hpp"
#include "weylstat/numbers.hpp"
#include "weylstat/unipoly.hpp"

namespace weylstat {

// The nine series-coefficient identity families: each asserts that the series
// expansion of LHS(t)/(1-t)^(n+1) has the stated coefficient at t^k.
//
//   A         A_n            (k+1)^n
//   ADesPm    A_n restricted ((k+1)^n +- (k+1)^ceil(n/2)) / 2
//   AExcPm    A_n restricted ((k+1)^n +- (k+1)) / 2        (excedance split)
//   B         B_n            (2k+1)^n
//   BPm       B_n restricted ((2k+1)^n +- 1) / 2
//   D         D_n            (2k+1)^n - n 2^(n-1) (1^(n-1)+...+k^(n-1)), n >= 2
//   DPm       D_n restricted (D coeff +- 1)/2 even n, (D coeff +- (2k+1))/2 odd n
//   BDesDPm   des_b over D_n restricted
//             (((2k+1)^n+1)/2 +- 1)/2 even n, (((2k+1)^n+1)/2 +- (k+1))/2 odd n
//   BDesBDPm  des_b over B_n - D_n restricted
//             (((2k+1)^n-1)/2)/2 even n,      (((2k+1)^n-1)/2 +- k)/2 odd n
enum class CarlitzFamily { A, ADesPm, AExcPm, B, BPm, D, DPm, BDesDPm, BDesBDPm };

constexpr CarlitzFamily kAllCarlitzFamilies[] = {
    CarlitzFamily::A,  CarlitzFamily::ADesPm,  CarlitzFamily::AExcPm,
    CarlitzFamily::B,  CarlitzFamily::BPm,     CarlitzFamily::D,
    CarlitzFamily::DPm, CarlitzFamily::BDesDPm, CarlitzFamily::BDesBDPm,
};

// The type-D right-hand side printed in the source states the correction term
// with a Bernoulli difference that telescopes one step instead of summing;
// both readings are implemented. Corrected uses the full power sum
// n 2^(n-1) sum_{j<=k} j^(n-1); Literal uses n 2^(n-1) k^(n-1) and is wrong
// from (n, k) = (3, 2) on.
enum class DReading { Corrected, Literal };

const char* carlitz_family_id(CarlitzFamily f); // "a", "a-des-pm", ...
bool parse_carlitz_family_id(const std::string& id, CarlitzFamily& out);
bool carlitz_refining(CarlitzFamily f); // true when the family splits into +/-
int carlitz_onset(CarlitzFamily f);     // smallest valid n

// Exact series coefficient; integrality and nonnegativity after the half
// factors are asserted. sign must be All for A/B/D and Plus/Minus otherwise.
Int carlitz_rhs(CarlitzFamily f, SignClass sign, int n, int k,
                DReading reading = DReading::Corrected);

// The polynomial whose series expansion the family describes.
UniPoly carlitz_lhs(CarlitzFamily f, SignClass sign, int n);

struct Verdict {
    std::string identity;
    int n = 0;
    int K = 0;
    bool pass = false;
    int first_fail_k = -1; // -1 when pass; else the first mismatching index
    std::string lhs;       // value at the first mismatch ("" when pass)
    std::string rhs;
};

// Compare series_quotient(lhs, n+1, K) against the family's coefficients.
Verdict verify_carlitz(CarlitzFamily f, SignClass sign, int n, int K,
                       DReading reading = DReading::Corrected);

// Check that F and G share factorial moments of order r < ell, plus the mass
// relation F(1) = lambda G(1); this is what F = lambda G +- (1-t)^ell H gives.
Verdict verify_moment_lemma(const UniPoly& F, const UniPoly& G, const Rat& lambda,
                            int ell, const std::string& name);

// The moment-lemma instances behind the five restricted central-limit
// theorems (excedance split in type A, both splits in type B, descent and
// excedance splits in type D, and the two des_b-over-coset splits).
std::vector<Verdict> moment_lemma_instances(int n);

// B_n = D_n + n 2^(n-1) t A_(n-1), with D_n rebuilt by series inversion of
// the corrected type-D coefficients so the check is not circular.
Verdict verify_brenti_relation(int n);

// Sign-refined version: B_n^pm vs D_n^pm + half the t A_(n-1) term, with the
// extra -+ t(1-t)^(n-1) correction at odd n.
std::vector<Verdict> verify_stembridge_refined(int n);

// des_b and exc_b agree in distribution on each sign class of D_n and of
// B_n - D_n (four exhaustive comparisons).
std::vector<Verdict> verify_equidistribution(int n, int threads = 1);

// sum over B_n of (-1)^inv_b s^asc_b t^des_b equals (s-t)^n, exhaustively.
Verdict verify_reiner_bivariate(int n, int threads = 1);

// Named campaigns for the CLI: each name yields one or more verdicts at a
// given n. Names: mantaci, reiner-b, siva-b-exc, reiner-d, siva-d-exc,
// reiner-bivariate, sgnbdes, brenti-relation, stembridge-pm,
// equidistribution, moment-lemma.
std::vector<std::string> identity_names();
std::vector<Verdict> run_identity(const std::string& name, int n, int threads = 1);

} // namespace weylstat

#endif
