#include "rsdist/json_io.hpp"

#include <cstdio>
#include <sstream>

namespace rsdist {

namespace {

json counts_json(const std::vector<mpz_class>& counts) {
  json arr = json::array();
  for (const mpz_class& c : counts) {
    if (c.fits_slong_p())
      arr.push_back(c.get_si());
    else
      arr.push_back(c.get_str());
  }
  return arr;
}

json class_json(const LeadClass& eps) {
  json arr = json::array();
  for (Elem c : eps.coeffs) arr.push_back(c);
  return arr;
}

json poly_json(const Poly& f) {
  json arr = json::array();
  for (Elem c : f.coeffs()) arr.push_back(c);
  return arr;
}

json log_value_json(const LogValue& v, int digits) {
  if (v.is_zero) return "-inf";
  return interval_json(v.log, digits);
}

// Exact decimal expansion when the denominator divides a power of ten,
// otherwise a 17-significant-digit double rendering.
std::string decimal_str(const mpq_class& v) {
  mpz_class num = v.get_num();
  mpz_class den = v.get_den();
  bool neg = num < 0;
  if (neg) num = -num;
  mpz_class d = den;
  unsigned long twos = 0, fives = 0;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) {
    mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 2);
    ++twos;
  }
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
    mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 5);
    ++fives;
  }
  if (d == 1 && twos < 64 && fives < 64) {
    unsigned long e = std::max(twos, fives);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, e - twos);
    mpz_class f5;
    mpz_ui_pow_ui(f5.get_mpz_t(), 5, e - fives);
    scale *= f5;
    std::string digits = mpz_class(num * scale).get_str();
    if (e > 0) {
      if (digits.size() <= e) digits.insert(0, e + 1 - digits.size(), '0');
      digits.insert(digits.size() - e, ".");
    }
    return neg ? "-" + digits : digits;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v.get_d());
  return buf;
}

}  // namespace

std::string rational_str(const mpq_class& v) {
  mpq_class c = v;
  c.canonicalize();
  return c.get_str();
}

json interval_json(const IntervalScalar& v, int digits) {
  return json::array({v.lower_str(digits), v.upper_str(digits)});
}

json scalar_json(const Scalar& v, int digits) {
  if (v.is_exact()) return rational_str(v.rational());
  return interval_json(v.interval(), digits);
}

json dist_table_json(const DistTable& t) {
  return json{{"q", t.q},
              {"ell", t.ell},
              {"d", t.d},
              {"class", class_json(t.epsilon)},
              {"counts", counts_json(t.counts)},
              {"source", t.source == DistTable::Source::formula
                             ? "formula"
                             : "brute_force"}};
}

json moment_json(const MomentValue& v) {
  return json{{"m", v.m},
              {"value", rational_str(v.value)},
              {"branch", to_string(v.branch)}};
}

json scan_record_json(const ScanRecord& r) {
  return json{{"f", poly_json(r.f)},
              {"deg", r.degree},
              {"dist", r.distance},
              {"deep_hole", r.deep_hole},
              {"ordinary", r.ordinary}};
}

json scan_summary_json(const ScanSummary& s) {
  json above = json::array();
  for (const ScanRecord& r : s.deep_holes_above_k)
    above.push_back(scan_record_json(r));
  json bad = json::array();
  for (const ScanRecord& r : s.bound_violations)
    bad.push_back(scan_record_json(r));
  json ord = json::object();
  for (const auto& [deg, cnt] : s.ordinary_by_degree)
    ord[std::to_string(deg)] = cnt;
  json scanned = json::object();
  for (const auto& [deg, cnt] : s.scanned_by_degree)
    scanned[std::to_string(deg)] = cnt;
  return json{{"words_scanned", s.words_scanned},
              {"deep_hole_count", s.deep_hole_count},
              {"degree_k_all_deep_holes", s.degree_k_all_deep_holes},
              {"deep_holes_above_k", above},
              {"bound_violations", bad},
              {"ordinary_by_degree", ord},
              {"scanned_by_degree", scanned}};
}

json verdict_json(const Verdict& v, const json& params) {
  return json{{"condition", v.condition},
              {"params", params},
              {"verdict", to_string(v.verdict)},
              {"margin", interval_json(v.margin)},
              {"precision_bits", v.precision_bits}};
}

json classification_json(const WordClassification& c) {
  return json{{"f", poly_json(c.interpolant)},
              {"deg", c.degree},
              {"dist", c.distance},
              {"codeword", c.is_codeword},
              {"deep_hole", c.is_deep_hole},
              {"ordinary", c.is_ordinary}};
}

json liwan_json(const LiwanReport& r) {
  json out{{"q", r.q},
           {"p", r.p},
           {"ell", r.ell},
           {"j", r.j},
           {"q1", scalar_json(r.q1)},
           {"ln_old_factor", log_value_json(r.ln_old_factor, 0)},
           {"ln_aj", log_value_json(r.ln_aj_value, 0)}};
  if (r.difference_infinite)
    out["difference"] = "inf";
  else if (r.difference)
    out["difference"] = interval_json(*r.difference);
  if (r.identity_difference)
    out["identity_difference"] = interval_json(*r.identity_difference);
  return out;
}

json thm23_json(const Thm23Report& r) {
  json out = json::object();
  if (r.c) out["c"] = rational_str(*r.c);
  if (r.p0) out["p0"] = rational_str(*r.p0);
  if (r.p_prime) out["p_prime"] = *r.p_prime;
  if (r.q0) out["q0"] = *r.q0;
  if (r.gamma0) out["gamma0"] = interval_json(*r.gamma0);
  if (r.p) out["p"] = *r.p;
  if (r.base_p) out["base_p"] = *r.base_p;
  if (r.c_low) out["c_low"] = rational_str(*r.c_low);
  if (r.c_high) out["c_high"] = rational_str(*r.c_high);
  if (r.margin_low) out["margin_low"] = interval_json(*r.margin_low);
  if (r.margin_high) out["margin_high"] = interval_json(*r.margin_high);
  json chain = json::array();
  for (const GChainCheck& g : r.g_chain)
    chain.push_back(json{{"q", g.q},
                         {"g_le_g_half", to_string(g.g_le_g_half)},
                         {"g_half_le_display", to_string(g.g_half_le_display)}});
  out["g_chain"] = chain;
  return out;
}

std::string figure_csv(const FigureTable& t) {
  std::ostringstream out;
  out << "p,c,f_lo,f_hi,sign\n";
  for (const FigureRow& row : t.rows) {
    out << row.p << ',' << decimal_str(row.c) << ',' << row.f.lower_str() << ','
        << row.f.upper_str() << ',' << row.sign << '\n';
  }
  return out.str();
}

json figure_brackets_json(const FigureTable& t) {
  json arr = json::array();
  for (const RootBracket& b : t.brackets)
    arr.push_back(json{{"p", b.p},
                       {"c_neg", decimal_str(b.c_neg)},
                       {"c_pos", decimal_str(b.c_pos)}});
  return arr;
}

}  // namespace rsdist
