#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rsdist/json_io.hpp"
#include "rsdist/numbers.hpp"
#include "rsdist/verify.hpp"

namespace {

using namespace rsdist;

// "a/b", plain integer, or decimal ("0.7" -> 7/10).
mpq_class parse_rational(const std::string& s) {
  if (s.find('/') != std::string::npos) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw CLI::ValidationError("bad rational: " + s);
    v.canonicalize();
    return v;
  }
  const auto dot = s.find('.');
  if (dot == std::string::npos) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw CLI::ValidationError("bad rational: " + s);
    return v;
  }
  const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  const std::size_t frac = s.size() - dot - 1;
  if (digits.empty() || frac == 0)
    throw CLI::ValidationError("bad decimal: " + s);
  mpz_class num;
  if (num.set_str(digits, 10) != 0)
    throw CLI::ValidationError("bad decimal: " + s);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
  mpq_class v(num, den);
  v.canonicalize();
  return v;
}

std::vector<Elem> parse_elems(const std::string& s) {
  std::vector<Elem> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    out.push_back(Elem(std::stoul(tok)));
  return out;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    out.push_back(std::stoull(tok));
  return out;
}

struct Global {
  std::uint64_t budget_ops = 0;  // 0: environment default
  long precision = long(kDefaultPrecision);
  std::string output;

  Budget budget() const {
    return budget_ops ? Budget(budget_ops) : Budget();
  }
  mpfr_prec_t prec() const { return mpfr_prec_t(precision); }

  void emit(const std::string& text) const {
    if (output.empty()) {
      std::cout << text;
      if (text.empty() || text.back() != '\n') std::cout << '\n';
    } else {
      std::ofstream f(output);
      if (!f) throw std::runtime_error("cannot open output file: " + output);
      f << text;
      if (text.empty() || text.back() != '\n') f << '\n';
    }
  }
  void emit(const json& doc) const { emit(doc.dump(2)); }
};

int exit_code_of(Trilean t) {
  switch (t) {
    case Trilean::holds: return 0;
    case Trilean::fails: return 1;
    default: return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic laboratory for the distance distribution of "
               "Reed-Solomon codes"};
  app.require_subcommand(1);

  Global g;
  app.add_option("--budget", g.budget_ops,
                 "max primitive operations for enumerations (default: "
                 "RSDIST_BUDGET env or 1e8)");
  app.add_option("--precision", g.precision, "working precision in bits")
      ->check(CLI::IsMember({53, 128, 256, 512}))
      ->capture_default_str();
  app.add_option("--output", g.output, "write the report here instead of stdout");

  int rc = 0;

  // --- field-info -----------------------------------------------------------
  std::uint64_t fi_q = 0;
  auto* fi = app.add_subcommand("field-info", "field construction summary");
  fi->add_option("--q", fi_q, "field order (prime power)")->required();
  fi->callback([&] {
    const Field F = Field::from_order(fi_q);
    json mod = json::array();
    for (Elem c : F.modulus()) mod.push_back(c);
    g.emit(json{{"q", F.q()},
                {"p", F.p()},
                {"s", F.s()},
                {"modulus", mod},
                {"generator", F.generator()}});
  });

  // --- count ----------------------------------------------------------------
  std::uint64_t ct_q = 0;
  std::uint32_t ct_ell = 1;
  std::int64_t ct_d = -1, ct_k = -1;
  std::string ct_class, ct_points;
  bool ct_brute = false;
  auto* ct = app.add_subcommand(
      "count", "root-count distribution of one leading-coefficient class");
  ct->add_option("--q", ct_q)->required();
  ct->add_option("--ell", ct_ell, "class length");
  ct->add_option("--d", ct_d, "polynomial degree");
  ct->add_option("--k", ct_k, "alternative to --d: d = k + ell");
  ct->add_option("--class", ct_class,
                 "comma-separated class entries; omit for all classes");
  ct->add_option("--points", ct_points, "evaluation set (default: whole field)");
  ct->add_flag("--brute", ct_brute, "exhaustive enumeration instead of the formula");
  ct->callback([&] {
    if ((ct_d < 0) == (ct_k < 0))
      throw CLI::ValidationError("count needs exactly one of --d / --k");
    const std::uint32_t d =
        ct_d >= 0 ? std::uint32_t(ct_d) : std::uint32_t(ct_k) + ct_ell;
    const Field F = Field::from_order(ct_q);
    const EvalSet D = ct_points.empty() ? EvalSet::full(F)
                                        : EvalSet(F, parse_elems(ct_points));
    const Budget b = g.budget();
    if (ct_class.empty()) {
      const auto tables = ct_brute ? dist_tables_bruteforce(F, ct_ell, d, D, b)
                                   : dist_tables_formula(F, ct_ell, d, D, b);
      json arr = json::array();
      for (const DistTable& t : tables) arr.push_back(dist_table_json(t));
      g.emit(arr);
    } else {
      const LeadClass eps{parse_elems(ct_class)};
      if (eps.ell() != ct_ell)
        throw CLI::ValidationError("--class length must equal --ell");
      if (ct_brute) {
        const auto tables = dist_tables_bruteforce(F, ct_ell, d, D, b);
        g.emit(dist_table_json(tables[class_rank(F, eps)]));
      } else {
        g.emit(dist_table_json(dist_table_formula(F, eps, d, D, b)));
      }
    }
  });

  // --- wj ---------------------------------------------------------------------
  std::uint64_t wj_q = 0;
  std::uint32_t wj_ell = 1, wj_j = 0, wj_d = 0;
  std::string wj_class, wj_points;
  auto* wj = app.add_subcommand(
      "wj", "boundary factorization count W_j for one class");
  wj->add_option("--q", wj_q)->required();
  wj->add_option("--ell", wj_ell)->required();
  wj->add_option("--j", wj_j)->required();
  wj->add_option("--d", wj_d, "degree of the factored polynomials")->required();
  wj->add_option("--class", wj_class, "comma-separated class entries")->required();
  wj->add_option("--points", wj_points);
  wj->callback([&] {
    const Field F = Field::from_order(wj_q);
    const EvalSet D = wj_points.empty() ? EvalSet::full(F)
                                        : EvalSet(F, parse_elems(wj_points));
    const LeadClass eps{parse_elems(wj_class)};
    if (eps.ell() != wj_ell)
      throw CLI::ValidationError("--class length must equal --ell");
    const mpz_class w = wj_exact(F, eps, wj_j, wj_d, D, g.budget());
    json cls = json::array();
    for (Elem c : eps.coeffs) cls.push_back(c);
    g.emit(json{{"q", wj_q},
                {"ell", wj_ell},
                {"j", wj_j},
                {"d", wj_d},
                {"class", cls},
                {"w", w.get_str()}});
  });

  // --- moments -----------------------------------------------------------------
  std::uint64_t mo_q = 0;
  std::uint32_t mo_k = 0, mo_m = 0;
  std::string mo_f, mo_points;
  bool mo_brute = false;
  auto* mo = app.add_subcommand(
      "moments", "factorial moment of the codeword agreement count");
  mo->add_option("--q", mo_q)->required();
  mo->add_option("--k", mo_k)->required();
  mo->add_option("--f", mo_f, "monic polynomial, comma-separated, lowest first")
      ->required();
  mo->add_option("--m", mo_m, "falling-factorial order")->required();
  mo->add_option("--points", mo_points);
  mo->add_flag("--brute", mo_brute, "exhaustive codeword enumeration");
  mo->callback([&] {
    const Field F = Field::from_order(mo_q);
    const EvalSet D = mo_points.empty() ? EvalSet::full(F)
                                        : EvalSet(F, parse_elems(mo_points));
    const Poly f(parse_elems(mo_f));
    if (mo_brute) {
      const mpq_class v = moments_bruteforce(F, f, mo_k, D, mo_m, g.budget());
      g.emit(json{{"m", mo_m}, {"value", rational_str(v)}, {"branch", "brute_force"}});
    } else {
      g.emit(moment_json(moments_formula(F, f, mo_k, D, mo_m, g.budget())));
    }
  });

  // --- distance -----------------------------------------------------------------
  std::uint64_t di_q = 0;
  std::uint32_t di_k = 0;
  std::string di_word, di_points;
  auto* di = app.add_subcommand("distance",
                                "classify a received word against the code");
  di->add_option("--q", di_q)->required();
  di->add_option("--k", di_k)->required();
  di->add_option("--word", di_word, "received word, one entry per evaluation point")
      ->required();
  di->add_option("--points", di_points);
  di->callback([&] {
    const Field F = Field::from_order(di_q);
    const EvalSet D = di_points.empty() ? EvalSet::full(F)
                                        : EvalSet(F, parse_elems(di_points));
    const std::vector<Elem> word = parse_elems(di_word);
    g.emit(classification_json(classify_word(F, word, di_k, D, g.budget())));
  });

  // --- scan-deepholes --------------------------------------------------------
  std::uint64_t sc_q = 0;
  std::uint32_t sc_k = 0, sc_ell = 1;
  auto* sc = app.add_subcommand(
      "scan-deepholes",
      "classify coset representatives of degree k..k+ell (JSON Lines)");
  sc->add_option("--q", sc_q)->required();
  sc->add_option("--k", sc_k)->required();
  sc->add_option("--ell", sc_ell, "degrees above k to scan");
  sc->callback([&] {
    const Field F = Field::from_order(sc_q);
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!g.output.empty()) {
      file.open(g.output);
      if (!file) throw std::runtime_error("cannot open output file: " + g.output);
      out = &file;
    }
    const ScanSummary s =
        scan_deep_holes(F, sc_k, sc_ell, g.budget(), [&](const ScanRecord& r) {
          *out << scan_record_json(r).dump() << '\n';
        });
    std::cerr << scan_summary_json(s).dump() << '\n';
  });

  // --- nfr ----------------------------------------------------------------------
  std::uint64_t nf_q = 0;
  std::uint32_t nf_k = 0;
  std::int64_t nf_r = -1;
  std::string nf_f, nf_points;
  auto* nf = app.add_subcommand(
      "nfr", "codewords agreeing with the word of f in exactly r places");
  nf->add_option("--q", nf_q)->required();
  nf->add_option("--k", nf_k)->required();
  nf->add_option("--f", nf_f, "polynomial, comma-separated, lowest first")
      ->required();
  nf->add_option("--r", nf_r, "agreement count; omit for the whole table");
  nf->add_option("--points", nf_points);
  nf->callback([&] {
    const Field F = Field::from_order(nf_q);
    const EvalSet D = nf_points.empty() ? EvalSet::full(F)
                                        : EvalSet(F, parse_elems(nf_points));
    const Poly f(parse_elems(nf_f));
    const auto counts = count_Nfr_all(F, f, nf_k, D, g.budget());
    if (nf_r >= 0) {
      if (std::size_t(nf_r) >= counts.size())
        throw CLI::ValidationError("--r exceeds the number of points");
      g.emit(json{{"r", nf_r}, {"count", counts[nf_r].get_str()}});
    } else {
      json arr = json::array();
      for (const mpz_class& c : counts) arr.push_back(c.get_str());
      g.emit(json{{"counts", arr}});
    }
  });

  // --- aj -------------------------------------------------------------------------
  std::uint64_t aj_p = 0, aj_q = 0, aj_j = 0;
  std::uint32_t aj_ell = 0;
  std::string aj_u, aj_w, aj_method = "binsum";
  auto* ajc = app.add_subcommand("aj", "permutation-cycle average A_j(u, w)");
  ajc->add_option("--j", aj_j)->required();
  ajc->add_option("--p", aj_p, "characteristic (with --u/--w)");
  ajc->add_option("--u", aj_u, "rational u");
  ajc->add_option("--w", aj_w, "rational w");
  ajc->add_option("--q", aj_q, "derive u = q, w from the field parameters");
  ajc->add_option("--ell", aj_ell, "class length (with --q)");
  ajc->add_option("--method", aj_method, "perm|series|binsum")
      ->check(CLI::IsMember({"perm", "series", "binsum"}));
  ajc->callback([&] {
    AjParams params{aj_j, 2, Scalar::exact(0, g.prec()),
                    Scalar::exact(0, g.prec())};
    if (aj_q != 0) {
      if (aj_ell == 0)
        throw CLI::ValidationError("--q requires --ell");
      params = AjParams::for_field(aj_q, aj_ell, aj_j, g.prec());
    } else {
      if (aj_p == 0 || aj_u.empty() || aj_w.empty())
        throw CLI::ValidationError("aj needs either --q/--ell or --p/--u/--w");
      params.p = aj_p;
      params.u = Scalar::exact(parse_rational(aj_u), g.prec());
      params.w = Scalar::exact(parse_rational(aj_w), g.prec());
    }
    Scalar v = aj_method == "perm"     ? aj_permutation(params)
               : aj_method == "series" ? aj_series(params)
                                       : aj_binsum(params);
    g.emit(v.to_string());
  });

  // --- bound wj|ndr|lemma -----------------------------------------------------
  auto* bd = app.add_subcommand("bound", "error bounds around the main terms");
  bd->require_subcommand(1);
  std::uint64_t bw_q = 0;
  std::uint32_t bw_k = 0, bw_ell = 1, bw_j = 0;
  auto* bw = bd->add_subcommand("wj", "deviation bound for W_j");
  bw->add_option("--q", bw_q)->required();
  bw->add_option("--k", bw_k)->required();
  bw->add_option("--ell", bw_ell)->required();
  bw->add_option("--j", bw_j)->required();
  bw->callback([&] {
    g.emit(json{{"q", bw_q},
                {"k", bw_k},
                {"ell", bw_ell},
                {"j", bw_j},
                {"main", rational_str(wj_main_term(bw_q, bw_k, bw_j))},
                {"bound", scalar_json(wj_error_bound(bw_q, bw_k, bw_ell, bw_j,
                                                     g.prec()))}});
  });
  std::uint64_t bn_q = 0;
  std::uint32_t bn_k = 0, bn_ell = 1, bn_r = 0;
  auto* bn = bd->add_subcommand("ndr", "deviation bound for the class counts");
  bn->add_option("--q", bn_q)->required();
  bn->add_option("--k", bn_k)->required();
  bn->add_option("--ell", bn_ell)->required();
  bn->add_option("--r", bn_r)->required();
  bn->callback([&] {
    const std::int64_t k = bn_k, r = bn_r;
    g.emit(json{
        {"q", bn_q},
        {"k", bn_k},
        {"ell", bn_ell},
        {"r", bn_r},
        {"main", rational_str(ndr_main_term(bn_q, bn_k, bn_r, k - r))},
        {"main_extended",
         rational_str(ndr_main_term(bn_q, bn_k, bn_r, k + bn_ell - r))},
        {"bound",
         scalar_json(ndr_error_bound(bn_q, bn_k, bn_ell, bn_r, g.prec()))}});
  });
  std::uint64_t bl_q = 0, bl_j = 0;
  std::uint32_t bl_ell = 1;
  auto* bl = bd->add_subcommand("lemma", "upper bounds on ln A_j(q, q1/q)");
  bl->add_option("--q", bl_q)->required();
  bl->add_option("--ell", bl_ell)->required();
  bl->add_option("--j", bl_j)->required();
  bl->callback([&] {
    const LogValue lnaj = ln_aj(bl_q, bl_ell, bl_j, g.prec());
    const LemmaLarge large = lemma_large(bl_q, bl_ell, bl_j, g.prec());
    json out{{"q", bl_q},
             {"ell", bl_ell},
             {"j", bl_j},
             {"ln_aj", lnaj.is_zero ? json("-inf") : interval_json(lnaj.log)},
             {"general", interval_json(lemma_general(bl_q, bl_ell, bl_j, g.prec()))},
             {"large", interval_json(large.value)},
             {"large_window_ok", to_string(large.window_ok)},
             {"large_minus_general",
              interval_json(lemma_large_minus_general(bl_q, bl_ell, bl_j, g.prec()))}};
    if (prime_power_decompose(bl_q)->p == 2)
      out["saddle"] = interval_json(saddle_p2_bound(bl_q, bl_ell, bl_j, g.prec()));
    g.emit(out);
  });

  // --- region thm7|gamma-max|thm23 ---------------------------------------------
  auto* rg = app.add_subcommand("region", "sufficient-condition checks");
  rg->require_subcommand(1);
  std::uint64_t r7_p = 0, r7_q = 0;
  std::uint32_t r7_k = 0, r7_ell = 1;
  std::string r7_branch = "a";
  auto* r7 = rg->add_subcommand("thm7", "certify the ordinary-word condition");
  r7->add_option("--p", r7_p, "characteristic (checked against q)");
  r7->add_option("--q", r7_q)->required();
  r7->add_option("--k", r7_k)->required();
  r7->add_option("--ell", r7_ell)->required();
  r7->add_option("--branch", r7_branch, "a: c=(k+ell)/q; b: c=(k+1)/q")
      ->check(CLI::IsMember({"a", "b"}));
  r7->callback([&] {
    const auto pp = prime_power_decompose(r7_q);
    if (!pp) throw CLI::ValidationError("--q must be a prime power");
    if (r7_p != 0 && r7_p != pp->p)
      throw CLI::ValidationError("--p does not match the characteristic of q");
    const RegionParams params{pp->p, r7_q, r7_k, r7_ell};
    const RegionBranch branch =
        r7_branch == "a" ? RegionBranch::a : RegionBranch::b;
    const Verdict v = thm7_check(params, branch, 53, g.prec() > 53 ? g.prec() : 53);
    g.emit(verdict_json(v, json{{"p", pp->p},
                                {"q", r7_q},
                                {"k", r7_k},
                                {"ell", r7_ell},
                                {"branch", r7_branch}}));
    rc = exit_code_of(v.verdict);
  });
  std::uint64_t gm_p = 0, gm_q = 0;
  std::string gm_c, gm_branch = "b";
  bool gm_half = false;
  auto* gm = rg->add_subcommand("gamma-max", "largest admissible gamma");
  gm->add_option("--p", gm_p)->required();
  gm->add_option("--q", gm_q)->required();
  gm->add_option("--c", gm_c, "rational c in (0,1)")->required();
  gm->add_option("--branch", gm_branch)->check(CLI::IsMember({"a", "b"}));
  gm->add_flag("--g-at-half", gm_half, "use g(q,1/2) in the numerator");
  gm->callback([&] {
    const RegionBranch branch =
        gm_branch == "a" ? RegionBranch::a : RegionBranch::b;
    const IntervalScalar v =
        gamma_max(gm_p, gm_q, parse_rational(gm_c), branch, gm_half, g.prec());
    g.emit(json{{"p", gm_p},
                {"q", gm_q},
                {"c", gm_c},
                {"branch", gm_branch},
                {"g_at_half", gm_half},
                {"gamma_max", interval_json(v)}});
  });
  std::string t23_c;
  std::uint64_t t23_p = 0;
  auto* t23 = rg->add_subcommand("thm23", "derived asymptotic constants");
  t23->add_option("--c", t23_c, "target rate (rational)");
  t23->add_option("--p", t23_p, "prime characteristic");
  t23->callback([&] {
    if (t23_c.empty() == (t23_p == 0))
      throw CLI::ValidationError("thm23 needs exactly one of --c / --p");
    const Thm23Report rep = t23_c.empty()
                                ? thm23_constants_for_p(t23_p, g.prec())
                                : thm23_constants_for_c(parse_rational(t23_c),
                                                        g.prec());
    g.emit(thm23_json(rep));
    for (const GChainCheck& c : rep.g_chain) {
      rc = std::max(rc, exit_code_of(c.g_le_g_half));
      rc = std::max(rc, exit_code_of(c.g_half_le_display));
    }
  });

  // --- compare-liwan -------------------------------------------------------------
  std::uint64_t lw_q = 0, lw_j = 0;
  std::uint32_t lw_ell = 1;
  auto* lw = app.add_subcommand("compare-liwan",
                                "new A_j factor against the older binomial");
  lw->add_option("--q", lw_q)->required();
  lw->add_option("--ell", lw_ell)->required();
  lw->add_option("--j", lw_j)->required();
  lw->callback([&] { g.emit(liwan_json(liwan_compare(lw_q, lw_ell, lw_j, g.prec()))); });

  // --- figure ---------------------------------------------------------------------
  std::string fg_ps = "2,3,5,7,17", fg_step = "1/1000";
  auto* fg = app.add_subcommand("figure", "sign table of f(p, c) as CSV");
  fg->add_option("--p-list", fg_ps, "comma-separated characteristics")
      ->capture_default_str();
  fg->add_option("--step", fg_step, "c-grid step (rational)")
      ->capture_default_str();
  fg->callback([&] {
    const FigureTable t =
        figure_scan(parse_u64_list(fg_ps), parse_rational(fg_step), g.prec());
    g.emit(figure_csv(t));
    std::cerr << figure_brackets_json(t).dump() << '\n';
  });

  // --- verify-all -------------------------------------------------------------
  bool va_desk = false;
  auto* va = app.add_subcommand("verify-all", "run the full acceptance suite");
  va->add_flag("--desk", va_desk, "desk-scale defaults (the standard suite)");
  va->callback([&] {
    std::ostringstream report;
    for (const CheckResult& r : run_all_checks()) {
      report << r.name << ": " << to_string(r.verdict) << " -- " << r.detail
             << '\n';
      rc = std::max(rc, exit_code_of(r.verdict));
    }
    g.emit(report.str());
  });

  // Let --budget/--precision/--output be written after the subcommand too.
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (CLI::App* sub : a->get_subcommands({})) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  } catch (const BudgetError& e) {
    std::cerr << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return rc;
}
