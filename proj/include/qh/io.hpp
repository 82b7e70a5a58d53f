#pragma once

#include "qh/hfrac.hpp"
#include "qh/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qh {

using Json = nlohmann::json;

// Exact scalars are written as decimal strings ("-3", "5/2") so that no
// value is ever rounded or abbreviated.
Json scalar_json(const Scalar& x);
Scalar scalar_from_json(const Json& j);
Json polynomial_json(const Polynomial& p);
Polynomial polynomial_from_json(const Domain& d, const Json& j);

Json domain_json(const Domain& d);
Domain domain_from_json(const Json& j);

Json hterm_json(const HFractionTerm& t);
HFractionTerm hterm_from_json(const Domain& d, const Json& j);
Json hfraction_json(const PeriodicHFraction& h);
PeriodicHFraction hfraction_from_json(const Json& j);

Json profile_json(const SupportProfile& p);
Json model_json(const QuadraticModel& m);
Json trace_json(const std::vector<TraceStep>& trace);

Json series_json(long n, long ell, const TruncatedSeries& f);
Json check_json(const CheckResult& c);
Json hankel_report_json(const HankelReport& r);
Json verify_report_json(const std::string& suite, long n_lo, long n_hi, const std::vector<CheckResult>& checks);
Json modp_report_json(const ModpReport& r);
Json scan_report_json(const ScanReport& r);

// CSV cells holding a negative number are quoted.
std::string csv_cell(const std::string& s);
// Header n,ell,j,delta,source then one row per value.
std::string hankel_report_csv(const HankelReport& r);
std::string verify_report_csv(const std::vector<CheckResult>& checks);

}  // namespace qh
