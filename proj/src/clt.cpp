#include "weylstat/clt.hpp"

#include <cmath>
#include <limits>

#include "weylstat/errors.hpp"

namespace weylstat {

Rat factorial_moment(const UniPoly& p, int r) {
    if (r < 0) throw error("factorial moment order must be >= 0");
    const Int total = p.total();
    if (total == 0) throw degenerate_error("factorial moment of the zero distribution");
    Int acc = 0;
    for (int k = 0; k <= p.degree(); ++k)
        acc += p.coeff(k) * falling_factorial(Int(k), static_cast<unsigned long>(r));
    Rat out = Rat(acc) / Rat(total);
    out.canonicalize();
    return out;
}

MeanVar mean_variance(const UniPoly& p) {
    const Rat m1 = factorial_moment(p, 1);
    const Rat m2 = factorial_moment(p, 2);
    Rat var = m2 + m1 - m1 * m1;
    var.canonicalize();
    return MeanVar{m1, var};
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double ks_distance(const UniPoly& p, const Rat& mean, const Rat& variance) {
    if (variance == 0)
        throw degenerate_error("KS distance against a zero-variance normal");
    if (p.total() == 0) throw degenerate_error("KS distance of the zero distribution");

    const double sigma = std::sqrt(variance.get_d());

    // Exact cumulative masses first; doubles only at the comparison. The
    // lattice CDF F(k) is matched against the normal CDF at the half-integer
    // points k + 1/2 (the continuity-corrected discrepancy). The raw
    // supremum over the line is bounded below by half the largest point
    // mass, which for tables with variance of order 1 swamps the actual
    // shape error; the corrected form is the quantity that shrinks as the
    // distributions approach normal. k = -1 covers the left tail.
    const Rat total = Rat(p.total());
    double best = 0.0;
    Rat cum = 0;
    for (int k = -1; k <= p.degree(); ++k) {
        if (k >= 0) cum += Rat(p.coeff(k));
        Rat cdf = cum / total;
        cdf.canonicalize();
        Rat arg = Rat(2 * k + 1, 2) - mean; // k + 1/2 - mean, exact
        arg.canonicalize();
        const double phi = normal_cdf(arg.get_d() / sigma);
        best = std::max(best, std::abs(cdf.get_d() - phi));
    }
    return best;
}

OnsetRow onset_row(Family f, SignClass s) {
    const bool split = s != SignClass::All;
    switch (f) {
        case Family::ADes:
            return split ? OnsetRow{4, 6} : OnsetRow{1, 2};
        case Family::AExc:
            return split ? OnsetRow{3, 4} : OnsetRow{1, 2};
        case Family::BDes:
        case Family::BExc:
            return split ? OnsetRow{2, 3} : OnsetRow{1, 2};
        case Family::DDes:
            return split ? OnsetRow{3, 4} : OnsetRow{2, 3};
        case Family::DExc:
        case Family::BDesOverD:
        case Family::BDesOverBminusD:
            return split ? OnsetRow{3, 4} : OnsetRow{2, 3};
    }
    throw error("unknown family");
}

Rat expected_mean(Family f, int n) {
    const bool type_a = f == Family::ADes || f == Family::AExc;
    Rat m(type_a ? n - 1 : n, 2);
    m.canonicalize();
    return m;
}

Rat expected_variance(Family f, int n) {
    Rat v(f == Family::DDes ? n + 2 : n + 1, 12);
    v.canonicalize();
    return v;
}

std::vector<DistReport> clt_report(Family f, SignClass s, int n_lo, int n_hi) {
    if (n_lo < 1 || n_hi < n_lo) throw error("bad n range for clt_report");
    const OnsetRow onset = onset_row(f, s);
    std::vector<DistReport> out;
    out.reserve(static_cast<size_t>(n_hi - n_lo + 1));
    for (int n = n_lo; n <= n_hi; ++n) {
        UniPoly p = restricted(f, n, s);
        // A sign class can be empty at n = 1 (e.g. no odd one-letter
        // permutations); there is no distribution to report.
        if (p.total() == 0) continue;
        const MeanVar mv = mean_variance(p);
        if (n >= onset.mean_onset && mv.mean != expected_mean(f, n))
            throw inconsistency_error(std::string("mean of ") + family_id(f) + "/" +
                                      sign_id(s) + " at n = " + std::to_string(n) +
                                      " is " + mv.mean.get_str() + ", expected " +
                                      expected_mean(f, n).get_str());
        if (n >= onset.var_onset && mv.variance != expected_variance(f, n))
            throw inconsistency_error(std::string("variance of ") + family_id(f) + "/" +
                                      sign_id(s) + " at n = " + std::to_string(n) +
                                      " is " + mv.variance.get_str() + ", expected " +
                                      expected_variance(f, n).get_str());
        // A zero-variance row (point mass) has no meaningful KS value; the
        // report carries NaN rather than inventing one.
        const double ks = mv.variance == 0 ? std::numeric_limits<double>::quiet_NaN()
                                           : ks_distance(p, mv.mean, mv.variance);
        out.push_back(DistReport{f, s, n, std::move(p), mv.mean, mv.variance, ks});
    }
    return out;
}

} // namespace weylstat
