// Exact moments, the continuity-corrected normal discrepancy, and the
// limit-theorem reports. The discrepancy implementation is cross-checked
// against a 256-bit MPFR recomputation of the same quantity.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <mpfr.h>
#include <vector>

#include "weylstat/closed_forms.hpp"
#include "weylstat/clt.hpp"
#include "weylstat/errors.hpp"
#include "weylstat/unipoly.hpp"

using namespace weylstat;

namespace {

UniPoly P(std::vector<long> v) {
    std::vector<Int> c;
    for (long x : v) c.emplace_back(x);
    return UniPoly(std::move(c));
}

UniPoly reversed(const UniPoly& p) {
    std::vector<Int> c;
    for (int k = p.degree(); k >= 0; --k) c.push_back(p.coeff(k));
    return UniPoly(std::move(c));
}

// Same quantity as ks_distance, recomputed with 256-bit floats: the lattice
// CDF (exact rational) against the normal CDF at k + 1/2.
double ks_mpfr(const UniPoly& p, const Rat& mean, const Rat& variance) {
    const mpfr_prec_t prec = 256;
    mpfr_t sigma, root2, arg, phi, cdf, diff, best;
    mpfr_inits2(prec, sigma, root2, arg, phi, cdf, diff, best, (mpfr_ptr)0);
    mpfr_set_q(sigma, variance.get_mpq_t(), MPFR_RNDN);
    mpfr_sqrt(sigma, sigma, MPFR_RNDN);
    mpfr_set_ui(root2, 2, MPFR_RNDN);
    mpfr_sqrt(root2, root2, MPFR_RNDN);
    mpfr_set_zero(best, 1);

    const Rat total = Rat(p.total());
    Rat cum = 0;
    for (int k = -1; k <= p.degree(); ++k) {
        if (k >= 0) cum += Rat(p.coeff(k));
        Rat step = cum / total;
        step.canonicalize();
        Rat a = Rat(2 * k + 1, 2) - mean;
        a.canonicalize();
        mpfr_set_q(arg, a.get_mpq_t(), MPFR_RNDN);
        mpfr_div(arg, arg, sigma, MPFR_RNDN);
        // normal cdf at arg: erfc(-arg / sqrt(2)) / 2
        mpfr_div(phi, arg, root2, MPFR_RNDN);
        mpfr_neg(phi, phi, MPFR_RNDN);
        mpfr_erfc(phi, phi, MPFR_RNDN);
        mpfr_div_ui(phi, phi, 2, MPFR_RNDN);
        mpfr_set_q(cdf, step.get_mpq_t(), MPFR_RNDN);
        mpfr_sub(diff, cdf, phi, MPFR_RNDN);
        mpfr_abs(diff, diff, MPFR_RNDN);
        mpfr_max(best, best, diff, MPFR_RNDN);
    }
    const double out = mpfr_get_d(best, MPFR_RNDN);
    mpfr_clears(sigma, root2, arg, phi, cdf, diff, best, (mpfr_ptr)0);
    return out;
}

} // namespace

TEST_CASE("factorial moments on worked examples") {
    const UniPoly a4 = eulerian_a(4); // 1 + 11t + 11t^2 + t^3
    CHECK(factorial_moment(a4, 0) == Rat(1));
    CHECK(factorial_moment(a4, 1) == Rat(3, 2));
    CHECK(factorial_moment(a4, 2) == Rat(7, 6));
    CHECK(factorial_moment(P({1, 1}), 1) == Rat(1, 2));
    CHECK_THROWS_AS(factorial_moment(a4, -1), error);
    CHECK_THROWS_AS(factorial_moment(UniPoly(), 1), degenerate_error);
}

TEST_CASE("mean and variance on worked examples") {
    const MeanVar a4 = mean_variance(eulerian_a(4));
    CHECK(a4.mean == Rat(3, 2));
    CHECK(a4.variance == Rat(5, 12));
    const MeanVar b2 = mean_variance(eulerian_b(2)); // 1 + 6t + t^2
    CHECK(b2.mean == Rat(1));
    CHECK(b2.variance == Rat(1, 4));
    // A point mass has zero variance.
    CHECK(mean_variance(P({0, 0, 5})).variance == Rat(0));
    CHECK(mean_variance(P({0, 0, 5})).mean == Rat(2));
}

TEST_CASE("normal cdf reference values") {
    CHECK(normal_cdf(0.0) == 0.5);
    CHECK(std::abs(normal_cdf(1.0) - 0.841344746068543) < 1e-12);
    CHECK(std::abs(normal_cdf(2.0) - 0.9772498680518208) < 1e-12);
    CHECK(std::abs(normal_cdf(1.7) + normal_cdf(-1.7) - 1.0) < 1e-14);
    double prev = 0.0;
    for (double x = -6.0; x <= 6.0; x += 0.25) {
        const double y = normal_cdf(x);
        CHECK(y > prev);
        prev = y;
    }
}

TEST_CASE("discrepancy of the fair two-point distribution") {
    // For 1 + t with mean 1/2 and variance 1/4 the three comparison points
    // are -1/2, 1/2, 3/2, standardized to -2, 0, 2; the extremes both give
    // 1 - Phi(2).
    const double ks = ks_distance(P({1, 1}), Rat(1, 2), Rat(1, 4));
    CHECK(std::abs(ks - 0.02275013194817921) < 1e-12);
    CHECK(std::abs(ks - (1.0 - normal_cdf(2.0))) < 1e-14);
}

TEST_CASE("discrepancy guards degenerate inputs") {
    CHECK_THROWS_AS(ks_distance(P({1, 1}), Rat(1, 2), Rat(0)), degenerate_error);
    CHECK_THROWS_AS(ks_distance(UniPoly(), Rat(0), Rat(1)), degenerate_error);
}

TEST_CASE("discrepancy is invariant under reversing the distribution") {
    // Reversal maps the comparison at k to the one at degree - 1 - k, with
    // the normal reflected; only floating-point reflection error remains.
    const UniPoly p = P({1, 10, 13}); // des_b over D_3, not palindromic
    const MeanVar mv = mean_variance(p);
    const UniPoly q = reversed(p);
    const MeanVar mw = mean_variance(q);
    CHECK(mw.mean == Rat(p.degree()) - mv.mean);
    CHECK(mw.variance == mv.variance);
    const double kp = ks_distance(p, mv.mean, mv.variance);
    const double kq = ks_distance(q, mw.mean, mw.variance);
    CHECK(std::abs(kp - kq) < 1e-12);

    // A palindromic table reverses to itself.
    const UniPoly a5 = eulerian_a(5);
    const MeanVar m5 = mean_variance(a5);
    CHECK(reversed(a5) == a5);
    CHECK(ks_distance(a5, m5.mean, m5.variance) ==
          ks_distance(reversed(a5), m5.mean, m5.variance));
}

TEST_CASE("discrepancy stays in the unit interval and shrinks along n") {
    double prev = 1.0;
    for (int n = 2; n <= 24; n += 2) {
        const UniPoly p = eulerian_a(n);
        const MeanVar mv = mean_variance(p);
        const double ks = ks_distance(p, mv.mean, mv.variance);
        CHECK(ks >= 0.0);
        CHECK(ks <= 1.0);
        CHECK(ks < prev);
        prev = ks;
    }
}

TEST_CASE("binary64 discrepancy matches a 256-bit recomputation") {
    const struct {
        Family f;
        SignClass s;
    } picks[] = {
        {Family::ADes, SignClass::All},   {Family::AExc, SignClass::Plus},
        {Family::BDes, SignClass::All},   {Family::BDes, SignClass::Minus},
        {Family::DDes, SignClass::Plus},  {Family::BDesOverD, SignClass::Plus},
    };
    for (const auto& pick : picks) {
        const int lo = onset_row(pick.f, pick.s).var_onset;
        for (int n = lo; n <= 20; ++n) {
            const UniPoly p = restricted(pick.f, n, pick.s);
            const MeanVar mv = mean_variance(p);
            if (mv.variance == 0) continue;
            const double d = ks_distance(p, mv.mean, mv.variance);
            const double m = ks_mpfr(p, mv.mean, mv.variance);
            CAPTURE(family_id(pick.f));
            CAPTURE(n);
            CHECK(std::abs(d - m) < 1e-9);
        }
    }
}

TEST_CASE("report rows carry the asserted means and variances") {
    const auto rows = clt_report(Family::ADes, SignClass::All, 1, 12);
    CHECK(rows.size() == 12);
    for (const auto& r : rows) {
        CHECK(r.poly == restricted(Family::ADes, r.n, SignClass::All));
        if (r.n >= 1) CHECK(r.mean == expected_mean(Family::ADes, r.n));
        if (r.n >= 2) CHECK(r.variance == expected_variance(Family::ADes, r.n));
    }
    // The one-letter table is a point mass: NaN discrepancy, nothing else.
    CHECK(std::isnan(rows[0].ks));
    for (size_t i = 1; i < rows.size(); ++i) CHECK(!std::isnan(rows[i].ks));
}

TEST_CASE("report skips sign classes that are empty") {
    // The odd class of the one-letter symmetric group is empty.
    const auto rows = clt_report(Family::ADes, SignClass::Minus, 1, 12);
    CHECK(rows.size() == 11);
    CHECK(rows.front().n == 2);
    // Six families have an empty minus class at n = 1; des_b over B_1 does
    // not, since (-1) alone is the odd class.
    CHECK(clt_report(Family::BDes, SignClass::Minus, 1, 5).size() == 5);
    CHECK(clt_report(Family::DExc, SignClass::Minus, 1, 6).size() == 5);
}

TEST_CASE("report values at the first asserted orders") {
    // Variance of des_b on the odd class of B_3 is (3+1)/12 exactly.
    const auto rows = clt_report(Family::BDes, SignClass::Minus, 3, 3);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].variance == Rat(1, 3));
    // One order below its variance onset the plus descent class of S_5 has
    // variance 3/5, not (5+1)/12: the onset in the table is sharp.
    const auto sharp = clt_report(Family::ADes, SignClass::Plus, 5, 5);
    REQUIRE(sharp.size() == 1);
    CHECK(sharp[0].variance == Rat(3, 5));
    CHECK(sharp[0].variance != expected_variance(Family::ADes, 5));
    CHECK(onset_row(Family::ADes, SignClass::Plus).var_onset == 6);
}

TEST_CASE("reports for every family and sign class raise nothing") {
    for (Family f : kAllFamilies)
        for (SignClass s : {SignClass::All, SignClass::Plus, SignClass::Minus}) {
            const auto rows = clt_report(f, s, 1, 16);
            for (const auto& r : rows) {
                CAPTURE(family_id(f));
                CAPTURE(r.n);
                // NaN discrepancy appears exactly on the zero-variance rows.
                CHECK(std::isnan(r.ks) == (r.variance == 0));
                if (!std::isnan(r.ks)) {
                    CHECK(r.ks >= 0.0);
                    CHECK(r.ks <= 1.0);
                }
            }
        }
}

TEST_CASE("report argument validation") {
    CHECK_THROWS_AS(clt_report(Family::ADes, SignClass::All, 0, 3), error);
    CHECK_THROWS_AS(clt_report(Family::ADes, SignClass::All, 4, 3), error);
}
