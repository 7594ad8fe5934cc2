// Command-line front end: exact distribution tables, identity verification
// campaigns, and central-limit diagnostics for descent/excedance statistics
// on the classical signed and unsigned permutation groups.
//
// Exit codes: 0 all checks pass, 1 a verification failed or tables mismatch,
// 2 usage error, 3 a configured resource cap was exceeded.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weylstat/caps.hpp"
#include "weylstat/clt.hpp"
#include "weylstat/closed_forms.hpp"
#include "weylstat/enumerate.hpp"
#include "weylstat/errors.hpp"
#include "weylstat/involution.hpp"
#include "weylstat/json_out.hpp"
#include "weylstat/verify.hpp"

using namespace weylstat;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "lo..hi" with 1 <= lo <= hi.
void parse_range(const std::string& text, int& lo, int& hi) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, dots));
            hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw UsageError("bad range \"" + text + "\"; expected lo..hi");
    }
    if (lo < 1 || hi < lo) throw UsageError("bad range \"" + text + "\"; need 1 <= lo <= hi");
}

// The (group, stat) pairs with a closed-form family behind them.
Family family_for(Group g, Stat stat) {
    if (g == Group::A && stat == Stat::Des) return Family::ADes;
    if (g == Group::A && stat == Stat::Exc) return Family::AExc;
    if (g == Group::B && stat == Stat::DesB) return Family::BDes;
    if (g == Group::B && stat == Stat::ExcB) return Family::BExc;
    if (g == Group::D && stat == Stat::DesD) return Family::DDes;
    if (g == Group::D && stat == Stat::ExcB) return Family::DExc;
    if (g == Group::D && stat == Stat::DesB) return Family::BDesOverD;
    if (g == Group::BminusD && stat == Stat::DesB) return Family::BDesOverBminusD;
    // exc_b over B-minus-D is distributed like des_b there, sign class by
    // sign class, so the same closed family serves it.
    if (g == Group::BminusD && stat == Stat::ExcB) return Family::BDesOverBminusD;
    throw UsageError(std::string("no closed form for stat ") + stat_id(stat) +
                     " over group " + group_id(g));
}

int run_dist(const std::string& group_s, const std::string& stat_s,
             const std::string& sign_s, int n, const std::string& method,
             const std::string& format, int threads) {
    Group g;
    Stat stat;
    SignClass sign;
    if (!parse_group_id(group_s, g)) throw UsageError("unknown group " + group_s);
    if (!parse_stat_id(stat_s, stat)) throw UsageError("unknown stat " + stat_s);
    if (!parse_sign_id(sign_s, sign)) throw UsageError("unknown sign class " + sign_s);
    if (n < 1) throw UsageError("need n >= 1");

    auto closed_table = [&]() {
        const Family f = family_for(g, stat);
        UniPoly p = restricted(f, n, sign);
        std::vector<Int> coeffs(p.coeffs());
        return DistTable{n, g, sign, stat, std::move(coeffs)};
    };

    if (method == "closed" || method == "brute") {
        DistTable t = method == "closed" ? closed_table()
                                         : brute_distribution(n, g, sign, stat, threads);
        std::cout << (format == "csv" ? dist_table_csv(t) : dist_table_json(t) + "\n");
        return 0;
    }
    if (method != "both") throw UsageError("unknown method " + method);

    DistTable closed = closed_table();
    DistTable brute = brute_distribution(n, g, sign, stat, threads);
    const bool match = closed.coeffs == brute.coeffs;
    if (format == "csv") {
        std::cout << dist_table_csv(closed) << "\n"
                  << dist_table_csv(brute) << "\nmatch," << (match ? "true" : "false")
                  << "\n";
    } else {
        std::cout << "{\"closed\":" << dist_table_json(closed)
                  << ",\"brute\":" << dist_table_json(brute)
                  << ",\"match\":" << (match ? "true" : "false") << "}\n";
    }
    return match ? 0 : 1;
}

int run_verify_carlitz(const std::string& family_s, const std::string& range,
                       int order, const std::string& reading_s) {
    CarlitzFamily fam;
    if (!parse_carlitz_family_id(family_s, fam))
        throw UsageError("unknown series family " + family_s);
    DReading reading = DReading::Corrected;
    if (reading_s == "literal")
        reading = DReading::Literal;
    else if (reading_s != "corrected")
        throw UsageError("reading must be corrected or literal");

    int lo, hi;
    parse_range(range, lo, hi);
    lo = std::max(lo, carlitz_onset(fam));

    std::vector<Verdict> all;
    for (int n = lo; n <= hi; ++n) {
        const int K = order > 0 ? order : std::max(n + 2, 50);
        if (carlitz_refining(fam)) {
            all.push_back(verify_carlitz(fam, SignClass::Plus, n, K, reading));
            all.push_back(verify_carlitz(fam, SignClass::Minus, n, K, reading));
        } else {
            all.push_back(verify_carlitz(fam, SignClass::All, n, K, reading));
        }
    }
    std::cout << verdicts_json(all) << "\n";
    for (const auto& v : all)
        if (!v.pass) return 1;
    return 0;
}

int run_verify_identity(const std::string& name, const std::string& range, int threads) {
    bool known = false;
    for (const auto& id : identity_names())
        if (id == name) known = true;
    if (!known) throw UsageError("unknown identity " + name);

    int lo, hi;
    parse_range(range, lo, hi);
    std::vector<Verdict> all;
    for (int n = lo; n <= hi; ++n)
        for (auto& v : run_identity(name, n, threads)) all.push_back(std::move(v));
    std::cout << verdicts_json(all) << "\n";
    for (const auto& v : all)
        if (!v.pass) return 1;
    return 0;
}

int run_verify_involution(const std::string& range, int threads) {
    int lo, hi;
    parse_range(range, lo, hi);
    lo = std::max(lo, 3); // the six-way split needs three letters
    bool ok = true;
    std::cout << "[";
    bool first = true;
    for (int n = lo; n <= hi; ++n)
        for (Group ambient : {Group::D, Group::BminusD}) {
            const InvolutionReport r = involution_report(n, ambient, threads);
            ok = ok && r.pass();
            if (!first) std::cout << ",";
            std::cout << involution_report_json(r);
            first = false;
        }
    std::cout << "]\n";
    return ok ? 0 : 1;
}

int run_clt(const std::string& family_s, const std::string& sign_s,
            const std::string& range, const std::string& format) {
    Family fam;
    SignClass sign;
    if (!parse_family_id(family_s, fam)) throw UsageError("unknown family " + family_s);
    if (!parse_sign_id(sign_s, sign)) throw UsageError("unknown sign class " + sign_s);
    int lo, hi;
    parse_range(range, lo, hi);
    const auto rows = clt_report(fam, sign, lo, hi);
    std::cout << (format == "csv" ? clt_rows_csv(rows) : clt_rows_json(rows) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact Eulerian distributions, signed generating functions and "
        "central-limit diagnostics on S_n, B_n, D_n and B_n - D_n.\n"
        "Enumeration caps honour WEYLSTAT_CAP_A, WEYLSTAT_CAP_BD, "
        "WEYLSTAT_CAP_DEGREE and WEYLSTAT_CAP_BERNOULLI."};
    app.require_subcommand(1);

    int threads = 1;
    bool seedless = false;
    app.add_option("--threads", threads, "worker threads for exhaustive sweeps")
        ->capture_default_str();
    app.add_flag("--seedless", seedless,
                 "accepted for compatibility; nothing here uses randomness");

    // dist
    auto* dist = app.add_subcommand("dist", "exact distribution table of a statistic");
    std::string d_group, d_stat, d_sign = "all", d_method = "closed", d_format = "json";
    int d_n = 0;
    dist->add_option("--group", d_group, "a | b | d | b-minus-d")->required();
    dist->add_option("--stat", d_stat, "des | exc | des-b | exc-b | des-d")->required();
    dist->add_option("--sign", d_sign, "all | plus | minus")->capture_default_str();
    dist->add_option("--n", d_n, "window length")->required();
    dist->add_option("--method", d_method, "closed | brute | both")->capture_default_str();
    dist->add_option("--format", d_format, "json | csv")->capture_default_str();

    // verify
    auto* verify = app.add_subcommand("verify", "identity verification campaigns");
    verify->require_subcommand(1);

    auto* carlitz = verify->add_subcommand(
        "carlitz", "series-coefficient identities against exact right-hand sides");
    std::string c_family, c_range, c_reading = "corrected";
    int c_order = 0;
    carlitz->add_option("--family", c_family,
                        "a | a-des-pm | a-exc-pm | b | b-pm | d | d-pm | bdes-d-pm | bdes-bd-pm")
        ->required();
    carlitz->add_option("--n-range", c_range, "lo..hi")->required();
    carlitz->add_option("--order", c_order, "series order K (default max(n+2, 50))");
    carlitz->add_option("--reading", c_reading,
                        "corrected | literal (type-D correction term)")
        ->capture_default_str();

    auto* identity = verify->add_subcommand("identity", "named closed-form identities");
    std::string i_name, i_range;
    identity->add_option("--name", i_name,
                         "mantaci | reiner-b | siva-b-exc | reiner-d | siva-d-exc | "
                         "reiner-bivariate | sgnbdes | brenti-relation | stembridge-pm | "
                         "equidistribution | moment-lemma")
        ->required();
    identity->add_option("--n-range", i_range, "lo..hi")->required();

    auto* involution = verify->add_subcommand(
        "involution", "six-class cancellation, survivors and residues");
    std::string v_range;
    involution->add_option("--n-range", v_range, "lo..hi (effective lo >= 3)")->required();

    // clt
    auto* clt = app.add_subcommand("clt", "exact moments and Kolmogorov distances");
    std::string l_family, l_sign = "all", l_range, l_format = "csv";
    clt->add_option("--family", l_family,
                    "a-des | a-exc | b-des | b-exc | d-des | d-exc | bdes-over-d | "
                    "bdes-over-b-minus-d")
        ->required();
    clt->add_option("--sign", l_sign, "all | plus | minus")->capture_default_str();
    clt->add_option("--n-range", l_range, "lo..hi")->required();
    clt->add_option("--format", l_format, "csv | json")->capture_default_str();

    // Let the global --threads / --seedless flags appear after a subcommand.
    for (CLI::App* sc : {dist, verify, carlitz, identity, involution, clt})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (dist->parsed())
            return run_dist(d_group, d_stat, d_sign, d_n, d_method, d_format, threads);
        if (carlitz->parsed())
            return run_verify_carlitz(c_family, c_range, c_order, c_reading);
        if (identity->parsed()) return run_verify_identity(i_name, i_range, threads);
        if (involution->parsed()) return run_verify_involution(v_range, threads);
        if (clt->parsed()) return run_clt(l_family, l_sign, l_range, l_format);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const not_applicable_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 1;
    }
}
