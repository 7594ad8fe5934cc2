#ifndef WEYLSTAT_JSON_OUT_HPP
#define WEYLSTAT_JSON_OUT_HPP

#include <string>
#include <vector>

#include "weylstat/clt.hpp"
#include "weylstat/enumerate.hpp"
#include "weylstat/involution.hpp"
#include "weylstat/verify.hpp"

namespace weylstat {

// All serialization is deterministic: fixed key order, big integers and
// rationals as decimal strings (they exceed what a JSON double can carry),
// KS distances with a fixed 12-significant-digit format.

std::string dist_table_json(const DistTable& t);
std::string dist_table_csv(const DistTable& t); // header "k,count"

std::string verdict_json(const Verdict& v);
std::string verdicts_json(const std::vector<Verdict>& vs);

std::string clt_rows_json(const std::vector<DistReport>& rows);
std::string clt_rows_csv(const std::vector<DistReport>& rows); // n,mean,variance,ks

std::string involution_report_json(const InvolutionReport& r);

// Shared fixed formatting for KS values ("nan" for the degenerate rows).
std::string format_ks(double ks);

} // namespace weylstat

#endif
