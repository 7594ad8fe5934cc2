#include "weylstat/enumerate.hpp"

#include <cstdlib>
#include <map>

#include "weylstat/caps.hpp"
#include "weylstat/errors.hpp"
#include "weylstat/parallel.hpp"

namespace weylstat {

static void check_brute_n(int n, Group g) {
    if (n < 1) throw error("enumeration needs n >= 1");
    const int cap = (g == Group::A) ? caps().brute_a : caps().brute_bd;
    if (n > cap)
        throw resource_limit_error("n = " + std::to_string(n) +
                                   " exceeds the enumeration cap " + std::to_string(cap) +
                                   " for group " + group_id(g));
}

WindowStream::WindowStream(int n, Group g, SignClass sign)
    : WindowStream(n, g, sign, 0, 2 * n) {}

WindowStream::WindowStream(int n, Group g, SignClass sign, int lo, int hi)
    : n_(n), g_(g), sign_(sign), lo_(lo), hi_(hi) {
    check_brute_n(n, g);
    if (lo_ < 0 || hi_ > 2 * n_ || lo_ > hi_) throw error("bad chunk range");
    win_.assign(static_cast<size_t>(n_), 0);
    cand_.assign(static_cast<size_t>(n_) + 1, 0);
    cand_[0] = lo_;
}

SignedPerm WindowStream::placeholder(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
    return SignedPerm(std::move(w));
}

bool WindowStream::admissible(int depth, int v) const {
    if (g_ == Group::A && v < 0) return false;
    if (used_ & (1u << std::abs(v))) return false;
    if (depth == n_ - 1) {
        // The parity of the finished window is decided here.
        const int total_negs = negc_ + (v < 0 ? 1 : 0);
        if (g_ == Group::D && total_negs % 2 != 0) return false;
        if (g_ == Group::BminusD && total_negs % 2 != 1) return false;
    }
    return true;
}

bool WindowStream::next(SignedPerm& out) {
    for (;;) {
        if (done_) return false;
        if (depth_ == n_) {
            // Resuming after a yield: retract the last letter and advance.
            --depth_;
            const int v = win_[static_cast<size_t>(depth_)];
            used_ &= ~(1u << std::abs(v));
            if (v < 0) --negc_;
        }
        bool yielded = false;
        while (!yielded) {
            const int end = depth_ == 0 ? hi_ : 2 * n_;
            int& c = cand_[static_cast<size_t>(depth_)];
            bool placed = false;
            while (c < end) {
                const int v = value_at(c);
                ++c;
                if (!admissible(depth_, v)) continue;
                win_[static_cast<size_t>(depth_)] = v;
                used_ |= 1u << std::abs(v);
                if (v < 0) ++negc_;
                ++depth_;
                cand_[static_cast<size_t>(depth_)] = 0;
                placed = true;
                break;
            }
            if (placed) {
                if (depth_ == n_) {
                    out.w_ = win_;
                    yielded = true;
                }
            } else {
                if (depth_ == 0) {
                    done_ = true;
                    return false;
                }
                --depth_;
                const int v = win_[static_cast<size_t>(depth_)];
                used_ &= ~(1u << std::abs(v));
                if (v < 0) --negc_;
            }
        }
        if (sign_ == SignClass::All || in_sign_class(out, g_, sign_)) return true;
        // Filtered out: loop round and generate the next window.
    }
}

Int group_order(int n, Group g) {
    if (n < 1) throw error("group_order needs n >= 1");
    switch (g) {
        case Group::A: return factorial(static_cast<unsigned long>(n));
        case Group::B:
            return factorial(static_cast<unsigned long>(n)) << static_cast<unsigned>(n);
        case Group::D:
        case Group::BminusD:
            return factorial(static_cast<unsigned long>(n)) << static_cast<unsigned>(n - 1);
    }
    throw error("unknown group");
}

Int DistTable::total() const {
    Int acc = 0;
    for (const auto& c : coeffs) acc += c;
    return acc;
}

bool DistTable::operator==(const DistTable& o) const {
    return n == o.n && group == o.group && sign == o.sign && stat == o.stat &&
           coeffs == o.coeffs;
}

// Shared chunked-enumeration skeleton: each first-letter chunk accumulates
// into its own copy of `init`; results come back in chunk order.
template <class Acc, class Visit>
static std::vector<Acc> run_chunks(int n, Group g, int threads, const Acc& init,
                                   Visit visit) {
    check_brute_n(n, g);
    const int num_chunks = 2 * n;
    std::vector<Acc> out(static_cast<size_t>(num_chunks), init);
    parallel_chunks(num_chunks, threads, [&](int c) {
        WindowStream ws(n, g, SignClass::All, c, c + 1);
        SignedPerm p = WindowStream::placeholder(n);
        Acc& acc = out[static_cast<size_t>(c)];
        while (ws.next(p)) visit(p, acc);
    });
    return out;
}

static void check_stat_applicable(Group g, Stat stat) {
    const bool type_a_only = stat == Stat::Des || stat == Stat::Exc || stat == Stat::Inv;
    if (type_a_only && g != Group::A)
        throw not_applicable_error(std::string(stat_id(stat)) +
                                   " is a type-A statistic; group " + group_id(g) +
                                   " has windows with negative letters");
}

DistTable brute_distribution(int n, Group g, SignClass sign, Stat stat, int threads) {
    check_stat_applicable(g, stat);
    const size_t width = static_cast<size_t>(max_stat_value(stat, n)) + 1;
    std::vector<long long> zero(width, 0);
    auto chunks = run_chunks(n, g, threads, zero, [&](const SignedPerm& p, std::vector<long long>& acc) {
        if (sign != SignClass::All && sign_of(p, g) != (sign == SignClass::Plus ? 1 : -1))
            return;
        acc[static_cast<size_t>(stat_value(p, stat))] += 1;
    });
    std::vector<Int> merged(width, Int(0));
    for (const auto& chunk : chunks)
        for (size_t k = 0; k < width; ++k) merged[k] += static_cast<long>(chunk[k]);
    while (!merged.empty() && merged.back() == 0) merged.pop_back();
    return DistTable{n, g, sign, stat, std::move(merged)};
}

UniPoly brute_signed_gf(int n, Group g, Stat stat, int threads) {
    check_stat_applicable(g, stat);
    const size_t width = static_cast<size_t>(max_stat_value(stat, n)) + 1;
    std::vector<long long> zero(width, 0);
    auto chunks = run_chunks(n, g, threads, zero, [&](const SignedPerm& p, std::vector<long long>& acc) {
        acc[static_cast<size_t>(stat_value(p, stat))] += sign_of(p, g);
    });
    std::vector<Int> merged(width, Int(0));
    for (const auto& chunk : chunks)
        for (size_t k = 0; k < width; ++k) merged[k] += static_cast<long>(chunk[k]);
    return UniPoly(std::move(merged));
}

using SparseAcc = std::map<std::pair<int, int>, long long>;

BiPoly brute_bivariate_sgn(int n, Group ambient, int threads) {
    if (ambient != Group::D && ambient != Group::BminusD)
        throw not_applicable_error("signed bivariate sum is taken over d or b-minus-d");
    auto chunks = run_chunks(n, ambient, threads, SparseAcc{}, [](const SignedPerm& p, SparseAcc& acc) {
        const int d = stat_des_b(p);
        const int a = p.n() - d;
        acc[{a, d}] += stat_inv_d(p) % 2 == 0 ? 1 : -1;
    });
    BiPoly out;
    for (const auto& chunk : chunks)
        for (const auto& [key, v] : chunk) out.add_term(key.first, key.second, Int(static_cast<long>(v)));
    return out;
}

BiPoly brute_signed_bivariate_b(int n, int threads) {
    auto chunks = run_chunks(n, Group::B, threads, SparseAcc{}, [](const SignedPerm& p, SparseAcc& acc) {
        const int d = stat_des_b(p);
        const int a = p.n() - d;
        acc[{a, d}] += stat_inv_b(p) % 2 == 0 ? 1 : -1;
    });
    BiPoly out;
    for (const auto& chunk : chunks)
        for (const auto& [key, v] : chunk) out.add_term(key.first, key.second, Int(static_cast<long>(v)));
    return out;
}

} // namespace weylstat
