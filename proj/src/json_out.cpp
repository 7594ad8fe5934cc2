#include "weylstat/json_out.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace weylstat {

using ordered_json = nlohmann::ordered_json;

std::string format_ks(double ks) {
    if (std::isnan(ks)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", ks);
    return buf;
}

static ordered_json coeff_strings(const std::vector<Int>& coeffs) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : coeffs) arr.push_back(c.get_str());
    return arr;
}

std::string dist_table_json(const DistTable& t) {
    ordered_json j;
    j["n"] = t.n;
    j["group"] = group_id(t.group);
    j["sign"] = sign_id(t.sign);
    j["stat"] = stat_id(t.stat);
    j["coeffs"] = coeff_strings(t.coeffs);
    return j.dump();
}

std::string dist_table_csv(const DistTable& t) {
    std::string out = "k,count\n";
    for (size_t k = 0; k < t.coeffs.size(); ++k)
        out += std::to_string(k) + "," + t.coeffs[k].get_str() + "\n";
    return out;
}

static ordered_json verdict_obj(const Verdict& v) {
    ordered_json j;
    j["identity"] = v.identity;
    j["n"] = v.n;
    j["K"] = v.K;
    j["pass"] = v.pass;
    if (v.pass) {
        j["first_fail_k"] = nullptr;
        j["lhs"] = nullptr;
        j["rhs"] = nullptr;
    } else {
        if (v.first_fail_k >= 0)
            j["first_fail_k"] = v.first_fail_k;
        else
            j["first_fail_k"] = nullptr;
        j["lhs"] = v.lhs;
        j["rhs"] = v.rhs;
    }
    return j;
}

std::string verdict_json(const Verdict& v) { return verdict_obj(v).dump(); }

std::string verdicts_json(const std::vector<Verdict>& vs) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : vs) arr.push_back(verdict_obj(v));
    return arr.dump();
}

static ordered_json clt_row_obj(const DistReport& r) {
    ordered_json j;
    j["family"] = family_id(r.family);
    j["sign"] = sign_id(r.sign);
    j["n"] = r.n;
    j["mean"] = r.mean.get_str();
    j["variance"] = r.variance.get_str();
    if (std::isnan(r.ks))
        j["ks"] = nullptr;
    else
        j["ks"] = format_ks(r.ks);
    return j;
}

std::string clt_rows_json(const std::vector<DistReport>& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) arr.push_back(clt_row_obj(r));
    return arr.dump();
}

std::string clt_rows_csv(const std::vector<DistReport>& rows) {
    std::string out = "n,mean,variance,ks\n";
    for (const auto& r : rows)
        out += std::to_string(r.n) + "," + r.mean.get_str() + "," + r.variance.get_str() +
               "," + format_ks(r.ks) + "\n";
    return out;
}

std::string involution_report_json(const InvolutionReport& r) {
    ordered_json j;
    j["ambient"] = group_id(r.ambient);
    j["n"] = r.n;
    ordered_json classes = ordered_json::array();
    for (int cls = 1; cls <= 6; ++cls) {
        const auto& c = r.classes[static_cast<size_t>(cls)];
        ordered_json cj;
        cj["class"] = c.cls;
        cj["size"] = c.size.get_str();
        cj["signed_sum_is_zero"] = c.signed_sum_is_zero;
        classes.push_back(cj);
    }
    j["classes"] = classes;
    j["partition_ok"] = r.partition_ok;
    j["residue_matches"] = r.residue_matches;
    j["fixed_count"] = r.fixed_count.get_str();
    j["fixed_count_matches"] = r.fixed_count_matches;
    j["fixed_gf_matches"] = r.fixed_gf_matches;
    j["survivors_cancel"] = r.survivors_cancel;
    j["pass"] = r.pass();
    return j.dump();
}

} // namespace weylstat
