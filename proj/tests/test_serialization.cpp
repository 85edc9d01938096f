#include <doctest.h>

#include "rsdist/json_io.hpp"
#include "rsdist/verify.hpp"

using namespace rsdist;

TEST_CASE("rational strings") {
  CHECK(rational_str(mpq_class(2, 3)) == "2/3");
  CHECK(rational_str(mpq_class(5)) == "5");
  CHECK(rational_str(mpq_class(-7, 2)) == "-7/2");
}

TEST_CASE("interval serialization rounds outward") {
  const json j = interval_json(IntervalScalar::from_rational(mpq_class(1, 3)), 8);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(std::stod(j[0].get<std::string>()) <= 1.0 / 3.0);
  CHECK(std::stod(j[1].get<std::string>()) >= 1.0 / 3.0);

  const json e = scalar_json(Scalar::exact(mpq_class(1, 2)));
  REQUIRE(e.is_string());
  CHECK(e.get<std::string>() == "1/2");
}

TEST_CASE("distribution table serialization") {
  const Field F = Field::from_order(3);
  const DistTable t = dist_table_formula(F, LeadClass{{0}}, 2, EvalSet::full(F));
  const json j = dist_table_json(t);
  CHECK(j["q"] == 3);
  CHECK(j["ell"] == 1);
  CHECK(j["d"] == 2);
  CHECK(j["source"] == "formula");
  CHECK(j["class"] == json::array({0}));
  CHECK(j["counts"] == json::array({1, 1, 1}));
}

TEST_CASE("classification and moment serialization") {
  const Field F = Field::from_order(3);
  const json c = classification_json(
      classify_word(F, std::vector<Elem>{0, 1, 2}, 1, EvalSet::full(F)));
  CHECK(c["deep_hole"] == true);
  CHECK(c["ordinary"] == true);
  CHECK(c["codeword"] == false);
  CHECK(c["deg"] == 1);
  CHECK(c["dist"] == 2);

  const json m = moment_json(
      moments_formula(F, Poly(std::vector<Elem>{0, 0, 1}), 1, EvalSet::full(F), 2));
  CHECK(m["m"] == 2);
  CHECK(m["value"] == "2/3");
  CHECK(m["branch"] == "boundary");
}

TEST_CASE("scan summary serialization") {
  const Field F = Field::from_order(5);
  const ScanSummary s = scan_deep_holes(F, 2, 2);
  const json j = scan_summary_json(s);
  CHECK(j["words_scanned"] == 31);
  CHECK(j["degree_k_all_deep_holes"] == true);
  CHECK(j["bound_violations"] == json::array());
  CHECK(j["scanned_by_degree"]["2"] == 1);
  CHECK(j["scanned_by_degree"]["4"] == 25);
}

TEST_CASE("verdict serialization") {
  const Verdict v = thm7_check(RegionParams{2, 32, 15, 1}, RegionBranch::b);
  const json j = verdict_json(v, json{{"q", 32}});
  CHECK(j["condition"] == "thm7b");
  CHECK(j["verdict"] == "holds");
  CHECK(j["params"]["q"] == 32);
  CHECK(j["precision_bits"].get<int>() >= 53);
  REQUIRE(j["margin"].is_array());
  CHECK(std::stod(j["margin"][0].get<std::string>()) > 0.0);
}

TEST_CASE("figure csv shape") {
  const FigureTable t = figure_scan({2}, mpq_class(1, 4));
  const std::string csv = figure_csv(t);
  CHECK(csv.rfind("p,c,f_lo,f_hi,sign\n", 0) == 0);
  CHECK(csv.find("2,0.5,") != std::string::npos);
  const json b = figure_brackets_json(t);
  REQUIRE(b.is_array());
  REQUIRE(b.size() == 1);
  CHECK(b[0]["p"] == 2);
}

TEST_CASE("reports are byte-stable across runs") {
  const Field F = Field::from_order(4);
  const EvalSet D = EvalSet::full(F);
  json a = json::array(), b = json::array();
  for (const DistTable& t : dist_tables_formula(F, 2, 3, D))
    a.push_back(dist_table_json(t));
  for (const DistTable& t : dist_tables_formula(F, 2, 3, D))
    b.push_back(dist_table_json(t));
  CHECK(a.dump() == b.dump());
}
