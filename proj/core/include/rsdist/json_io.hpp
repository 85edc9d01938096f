#pragma once

#include <json.hpp>
#include <string>

#include "rsdist/bounds.hpp"
#include "rsdist/counting.hpp"
#include "rsdist/distance.hpp"

namespace rsdist {

using json = nlohmann::json;

// "num/den" (or plain integer) rendering of an exact rational.
std::string rational_str(const mpq_class& v);

// ["lo", "hi"] decimal endpoint pair, outward rounded.
json interval_json(const IntervalScalar& v, int digits = 0);

// Exact scalars as "num/den" strings, enclosures as ["lo","hi"] pairs.
json scalar_json(const Scalar& v, int digits = 0);

// {"q":…, "ell":…, "d":…, "class":"c1,…,cl", "counts":[…], "source":"formula"}
json dist_table_json(const DistTable& t);

// {"m":…, "value":"num/den", "branch":"boundary"}
json moment_json(const MomentValue& v);

// One scan record: {"f":[coeffs],"deg":…,"dist":…,"deep_hole":…,"ordinary":…}
json scan_record_json(const ScanRecord& r);
json scan_summary_json(const ScanSummary& s);

// {"condition":…, "params":{…}, "verdict":…, "margin":["lo","hi"],
//  "precision_bits":…}
json verdict_json(const Verdict& v, const json& params);

json classification_json(const WordClassification& c);

json liwan_json(const LiwanReport& r);

json thm23_json(const Thm23Report& r);

// CSV with header "p,c,f_lo,f_hi,sign", one row per grid point, then bracket
// rows are reported separately via figure_brackets_json.
std::string figure_csv(const FigureTable& t);
json figure_brackets_json(const FigureTable& t);

}  // namespace rsdist
