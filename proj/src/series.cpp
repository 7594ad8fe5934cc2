#include "weylstat/series.hpp"

#include "weylstat/caps.hpp"
#include "weylstat/errors.hpp"

namespace weylstat {

RatSeq series_quotient(const UniPoly& p, int m, int K) {
    if (m < 1) throw error("series_quotient needs m >= 1");
    if (K < 0) throw error("series_quotient needs K >= 0");
    RatSeq out(static_cast<size_t>(K) + 1, Rat(0));
    for (int k = 0; k <= K; ++k) {
        Int acc = 0;
        const int jmax = std::min(k, p.degree());
        for (int j = 0; j <= jmax; ++j)
            acc += p.coeff(j) * binomial(k - j + m - 1, m - 1);
        out[static_cast<size_t>(k)] = Rat(acc);
    }
    return out;
}

RatSeq bernoulli_poly(int n) {
    if (n < 0) throw error("bernoulli_poly needs n >= 0");
    if (n > caps().bernoulli)
        throw resource_limit_error("Bernoulli index " + std::to_string(n) +
                                   " exceeds cap " + std::to_string(caps().bernoulli));
    // Build B_0 .. B_n bottom-up: C(m, m-1) B_{m-1} = m x^(m-1) - sum_{k<m-1} C(m,k) B_k,
    // i.e. B_{m-1}(x) = x^(m-1) - (1/m) sum_{k<=m-2} C(m,k) B_k(x).
    std::vector<RatSeq> b(static_cast<size_t>(n) + 1);
    b[0] = {Rat(1)};
    for (int d = 1; d <= n; ++d) {
        const int m = d + 1;
        RatSeq cur(static_cast<size_t>(d) + 1, Rat(0));
        cur[static_cast<size_t>(d)] = 1; // the leading x^d term
        for (int k = 0; k <= d - 1; ++k) {
            const Rat f = Rat(binomial(m, k)) / m;
            for (size_t i = 0; i < b[static_cast<size_t>(k)].size(); ++i)
                cur[i] -= f * b[static_cast<size_t>(k)][i];
        }
        for (auto& v : cur) v.canonicalize();
        b[static_cast<size_t>(d)] = std::move(cur);
    }
    return b[static_cast<size_t>(n)];
}

Rat bernoulli_eval(int n, const Rat& x) {
    RatSeq c = bernoulli_poly(n);
    Rat acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    acc.canonicalize();
    return acc;
}

Int power_sum(int m, const Int& k) {
    if (m < 0 || k < 0) throw error("power_sum needs m >= 0 and k >= 0");
    Int acc = 0;
    for (Int j = 1; j <= k; ++j)
        acc += int_pow(j, static_cast<unsigned long>(m));
    return acc;
}

Int power_sum_bernoulli(int m, const Int& k) {
    if (m < 0 || k < 0) throw error("power_sum needs m >= 0 and k >= 0");
    Rat v = (bernoulli_eval(m + 1, Rat(k + 1)) - bernoulli_eval(m + 1, Rat(1))) / (m + 1);
    v.canonicalize();
    if (v.get_den() != 1)
        throw inconsistency_error("Faulhaber value " + v.get_str() + " is not an integer");
    return v.get_num();
}

} // namespace weylstat
