#include "weylstat/involution.hpp"

#include <algorithm>
#include <cstdlib>

#include "weylstat/closed_forms.hpp"
#include "weylstat/errors.hpp"
#include "weylstat/parallel.hpp"

namespace weylstat {

int pos_of(const SignedPerm& p, int r) {
    for (int i = 1; i <= p.n(); ++i)
        if (p.at(i) == r) return i;
    return 0;
}

int pos_abs(const SignedPerm& p, int r) {
    for (int i = 1; i <= p.n(); ++i)
        if (std::abs(p.at(i)) == r) return i;
    return 0;
}

static void check_ambient(const SignedPerm& p, Group ambient) {
    if (ambient != Group::D && ambient != Group::BminusD)
        throw not_applicable_error("the class analysis runs over d or b-minus-d");
    if (!in_group(p, ambient))
        throw membership_error("window " + format_window(p) + " is not in " +
                               group_id(ambient));
}

SignedPerm deletion_pattern(const SignedPerm& p) {
    const int n = p.n();
    std::vector<int> w;
    w.reserve(static_cast<size_t>(n) - 2);
    for (int i = 1; i <= n; ++i) {
        const int a = std::abs(p.at(i));
        if (a != n && a != n - 1) w.push_back(p.at(i));
    }
    return SignedPerm(std::move(w));
}

int classify(const SignedPerm& p, Group ambient) {
    check_ambient(p, ambient);
    const int n = p.n();
    if (n < 3) throw not_applicable_error("the class split needs n >= 3");

    const int pa = pos_abs(p, n);
    const int pb = pos_abs(p, n - 1);
    const bool a_pos = p.at(pa) > 0;
    const bool b_pos = p.at(pb) > 0;
    const bool same_sign = a_pos == b_pos;
    const bool adjacent = std::abs(pa - pb) == 1;
    const int last = p.at(n);

    // Each of the six literal conditions, evaluated independently.
    const bool c1 = same_sign && adjacent && (std::abs(last) == n || std::abs(last) == n - 1);
    const bool c2 = a_pos && b_pos && adjacent && last != n && last != n - 1;
    const bool c3 = !a_pos && !b_pos && adjacent && last != -n && last != -(n - 1);
    const bool c4 = a_pos && b_pos && std::abs(pa - pb) > 1;
    const bool c5 = !a_pos && !b_pos && std::abs(pa - pb) > 1;
    const bool c6 = !same_sign;

    const bool flags[6] = {c1, c2, c3, c4, c5, c6};
    int hit = 0, which = 0;
    for (int i = 0; i < 6; ++i)
        if (flags[i]) {
            ++hit;
            which = i + 1;
        }
    if (hit != 1)
        throw inconsistency_error("window " + format_window(p) + " matches " +
                                  std::to_string(hit) + " classes; the six-way split "
                                  "must be a partition");

    // The deletion-pattern statements that come with the split: classes 1-5
    // go with the ambient's own type, class 6 with the complementary type.
    const SignedPerm core = deletion_pattern(p);
    const Group complement = ambient == Group::D ? Group::BminusD : Group::D;
    if (which <= 5 ? !in_group(core, ambient) : !in_group(core, complement))
        throw inconsistency_error("deletion pattern " + format_window(core) +
                                  " contradicts class " + std::to_string(which) +
                                  " for window " + format_window(p));
    return which;
}

SignedPerm involution_map(const SignedPerm& p, Group ambient) {
    const int cls = classify(p, ambient);
    if (cls == 1)
        throw not_applicable_error("class 1 hosts the survivors; the map covers classes 2-6");

    const int n = p.n();
    const int pa = pos_abs(p, n);
    const int pb = pos_abs(p, n - 1);
    std::vector<int> w = p.window();
    // Swap the absolute values, keep each slot's sign.
    w[static_cast<size_t>(pa) - 1] = (p.at(pa) > 0 ? 1 : -1) * (n - 1);
    w[static_cast<size_t>(pb) - 1] = (p.at(pb) > 0 ? 1 : -1) * n;
    if (cls == 2 || cls == 3) {
        // Adjacent same-sign pair: also flip both signs, exchanging the
        // positive-pair and negative-pair classes.
        w[static_cast<size_t>(pa) - 1] = -w[static_cast<size_t>(pa) - 1];
        w[static_cast<size_t>(pb) - 1] = -w[static_cast<size_t>(pb) - 1];
    }
    return SignedPerm(std::move(w));
}

std::array<ClassSummary, 7> class_summaries(int n, Group ambient, int threads) {
    if (ambient != Group::D && ambient != Group::BminusD)
        throw not_applicable_error("the class analysis runs over d or b-minus-d");
    if (n < 3) throw not_applicable_error("the class split needs n >= 3");

    struct Acc {
        std::array<long long, 7> size{};
        std::array<std::map<std::pair<int, int>, long long>, 7> sum;
    };
    const int num_chunks = 2 * n;
    std::vector<Acc> per_chunk(static_cast<size_t>(num_chunks));
    parallel_chunks(num_chunks, threads, [&](int c) {
        WindowStream ws(n, ambient, SignClass::All, c, c + 1);
        SignedPerm p = WindowStream::placeholder(n);
        Acc& acc = per_chunk[static_cast<size_t>(c)];
        while (ws.next(p)) {
            const int cls = classify(p, ambient);
            const int d = stat_des_b(p);
            const int s = stat_inv_d(p) % 2 == 0 ? 1 : -1;
            acc.size[static_cast<size_t>(cls)] += 1;
            acc.sum[static_cast<size_t>(cls)][{n - d, d}] += s;
        }
    });

    std::array<ClassSummary, 7> out;
    for (const auto& acc : per_chunk)
        for (int cls = 1; cls <= 6; ++cls) {
            out[static_cast<size_t>(cls)].size += static_cast<long>(acc.size[static_cast<size_t>(cls)]);
            for (const auto& [key, v] : acc.sum[static_cast<size_t>(cls)])
                out[static_cast<size_t>(cls)].signed_sum.add_term(key.first, key.second, Int(static_cast<long>(v)));
        }
    return out;
}

CancellationReport verify_cancellation(int n, Group ambient, int cls, int threads) {
    if (cls < 1 || cls > 6) throw error("class index must be 1..6");
    auto summaries = class_summaries(n, ambient, threads);
    BiPoly sum = summaries[static_cast<size_t>(cls)].signed_sum;
    if (cls == 2 || cls == 3)
        sum = summaries[2].signed_sum + summaries[3].signed_sum;
    return CancellationReport{cls, summaries[static_cast<size_t>(cls)].size, sum.is_zero()};
}

std::vector<SignedPerm> build_fixed_points(int n, Group ambient) {
    if (ambient != Group::D && ambient != Group::BminusD)
        throw not_applicable_error("fixed-point families live in d or b-minus-d");
    if (n < 1) throw error("build_fixed_points needs n >= 1");

    // Bases: length 1 or 2 depending on parity, then grow by two letters.
    std::vector<std::vector<int>> cur;
    int m; // current length
    if (ambient == Group::D) {
        if (n % 2 == 0) {
            cur = {{1, 2}, {2, 1}, {-1, -2}, {-2, -1}};
            m = 2;
        } else {
            cur = {{1}};
            m = 1;
        }
    } else {
        if (n % 2 == 0) return {}; // no survivors at even n
        cur = {{-1}};
        m = 1;
    }

    while (m < n) {
        const int u = m + 1, v = m + 2;
        const int tails[4][2] = {{u, v}, {v, u}, {-v, -u}, {-u, -v}};
        std::vector<std::vector<int>> grown;
        grown.reserve(cur.size() * 4);
        for (const auto& w : cur)
            for (const auto& tail : tails) {
                std::vector<int> g = w;
                g.push_back(tail[0]);
                g.push_back(tail[1]);
                grown.push_back(std::move(g));
            }
        cur = std::move(grown);
        m += 2;
    }

    std::vector<SignedPerm> out;
    out.reserve(cur.size());
    for (auto& w : cur) out.emplace_back(std::move(w));
    std::sort(out.begin(), out.end());
    return out;
}

BiPoly fixed_point_gf(int n, Group ambient) {
    BiPoly sum;
    for (const SignedPerm& p : build_fixed_points(n, ambient)) {
        if (!in_group(p, ambient))
            throw inconsistency_error("survivor " + format_window(p) + " escaped " +
                                      group_id(ambient));
        const int d = stat_des_b(p);
        const Int s = stat_inv_d(p) % 2 == 0 ? 1 : -1;
        sum.add_term(n - d, d, s);
    }
    return sum;
}

bool InvolutionReport::pass() const {
    bool zeros_ok = classes[2].signed_sum_is_zero && classes[3].signed_sum_is_zero &&
                    classes[4].signed_sum_is_zero && classes[5].signed_sum_is_zero &&
                    classes[6].signed_sum_is_zero;
    return partition_ok && zeros_ok && residue_matches && fixed_count_matches &&
           fixed_gf_matches && survivors_cancel;
}

InvolutionReport involution_report(int n, Group ambient, int threads) {
    auto summaries = class_summaries(n, ambient, threads);

    InvolutionReport r;
    r.ambient = ambient;
    r.n = n;

    Int total = 0;
    for (int cls = 1; cls <= 6; ++cls) {
        BiPoly sum = summaries[static_cast<size_t>(cls)].signed_sum;
        if (cls == 2 || cls == 3) sum = summaries[2].signed_sum + summaries[3].signed_sum;
        r.classes[static_cast<size_t>(cls)] =
            CancellationReport{cls, summaries[static_cast<size_t>(cls)].size, sum.is_zero()};
        total += summaries[static_cast<size_t>(cls)].size;
    }
    r.partition_ok = total == group_order(n, ambient);

    const BiPoly closed = sgn_bdes_bivariate(n, ambient);
    r.residue_matches = summaries[1].signed_sum == closed;

    const auto survivors = build_fixed_points(n, ambient);
    r.fixed_count = Int(survivors.size());
    Int expected;
    if (ambient == Group::D)
        expected = Int(1) << static_cast<unsigned>(n % 2 == 0 ? n : n - 1);
    else
        expected = n % 2 == 0 ? Int(0) : Int(1) << static_cast<unsigned>(n - 1);
    r.fixed_count_matches = r.fixed_count == expected;

    BiPoly fp_sum = fixed_point_gf(n, ambient);
    r.fixed_gf_matches = fp_sum == closed;

    // Survivors all sit in class 1, and the rest of class 1 cancels.
    bool survivors_in_class1 = true;
    for (const SignedPerm& p : survivors)
        if (classify(p, ambient) != 1) survivors_in_class1 = false;
    r.survivors_cancel =
        survivors_in_class1 && (summaries[1].signed_sum - fp_sum).is_zero();
    return r;
}

} // namespace weylstat
