#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "itercurve/itercurve.hpp"

using namespace itercurve;

namespace {

enum Exit { kOk = 0, kUsage = 1, kNumeric = 2, kVerify = 3 };

struct Report {
  int failures = 0;
  void line(bool pass, const std::string& what, const std::string& detail) {
    if (!pass) ++failures;
    std::cout << (pass ? "PASS " : "FAIL ") << what << "  " << detail << '\n';
  }
  int exit_code() const { return failures ? kVerify : kOk; }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Cyc parse_unit(const std::string& s) {
  if (s == "1") return Cyc(4, 1);
  if (s == "i") return Cyc::xi(4);
  if (s == "-i") return -Cyc::xi(4);
  if (s == "z6" || s == "xi6") return Cyc::xi(6);
  if (s == "z6c" || s == "xi6c") return conj(Cyc::xi(6));
  return parse_cyc(s, 4);
}

int cmd_eval(Curve curve, const std::string& word, int prec, long direct, bool use_cache) {
  auto t0 = std::chrono::steady_clock::now();
  CurveWord w = parse_word(word, curve);
  if (!is_admissible(w)) throw UsageError("word " + w.to_string() + " is not admissible for curve " + curve_name(curve));
  Context ctx(prec);
  if (direct > 0) {
    DirectSeries d = eval_curve_direct(w, direct, ctx);
    std::cout << "value = " << d.extrapolated.value.to_string(16) << '\n';
    std::cout << "err   = " << d.extrapolated.err.to_string() << " (heuristic)\n";
    std::cout << "partial_sum = " << d.partial.value.to_string(16) << '\n';
  } else {
    std::string desc = std::string(curve_name(curve)) + ":" + w.to_string();
    std::optional<PersistentCache> cache;
    if (use_cache) cache.emplace(PersistentCache::default_path());
    std::optional<ApproxC> hit = cache ? cache->get("curveword", desc, prec) : std::nullopt;
    ApproxR v;
    if (hit) {
      v = hit->real_part();
    } else {
      v = eval_curve_word(w, ctx);
      if (cache) cache->put("curveword", desc, prec, ApproxC(v));
    }
    std::cout << "value = " << v.value.to_fixed(prec) << '\n';
    std::cout << "err   = " << v.err.to_string() << '\n';
  }
  std::cerr << "time  = " << seconds_since(t0) << " s\n";
  return kOk;
}

int cmd_verify_special(Curve curve, int k, int prec) {
  Context ctx(prec);
  Bound tol = Bound::pow10(-(prec - 10));
  Report rep;
  int phi = curve == Curve::g ? 2 : 4;
  for (int j = 1; j <= k - 1; ++j) {
    std::vector<int> ls(j, phi);
    ls.push_back(0);
    ls.insert(ls.end(), k - j - 1, phi);
    CurveWord w(curve, ls);
    ClosedForm cf = closed_form_special(curve, j, k);
    Bound r = residual(eval_curve_word(w, ctx), evaluate(cf, ctx));
    rep.line(r <= tol, w.to_string(), "residual " + r.to_string() + "  closed form " + cf.to_string());
  }
  if (curve == Curve::h && k % 2 == 0 && k >= 4) {
    ClosedForm printed = closed::h_even_weight(k / 2, true);
    std::vector<int> ls(k - 1, phi);
    ls.push_back(0);
    Bound r = residual(eval_curve_word(CurveWord(curve, ls), ctx), evaluate(printed, ctx));
    std::cout << "note  log3 term with (pi/sqrt3)^" << k - 1 << " differs from the integral by " << r.to_string()
              << '\n';
  }
  return rep.exit_code();
}

int cmd_verify_shuffle(Curve curve, int weight, int prec) {
  Context ctx(prec);
  Bound tol = Bound::pow10(-(prec - 10));
  Report rep;
  for (auto& c : verify_shuffle(curve, weight, ctx, tol)) rep.line(c.pass, c.identity, "residual " + c.residual.to_string());
  for (auto& c : verify_symmetric_power(curve, std::max(weight, 2), ctx, tol))
    rep.line(c.pass, c.identity, "residual " + c.residual.to_string());
  return rep.exit_code();
}

int cmd_verify_arc(const std::string& z0) {
  ArcLemmaResult r = verify_arc_lemma(parse_unit(z0), Context(20));
  Report rep;
  auto fmt = [](cld z) {
    std::ostringstream o;
    o.precision(15);
    o << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return o.str();
  };
  rep.line(r.residual1 <= 1e-10, "log(1-z)/z", "lhs " + fmt(r.lhs1) + "  rhs " + fmt(r.rhs1) + "  residual " + std::to_string(r.residual1));
  rep.line(r.residual2 <= 1e-10, "log(1+z)/z", "lhs " + fmt(r.lhs2) + "  rhs " + fmt(r.rhs2) + "  residual " + std::to_string(r.residual2));
  return rep.exit_code();
}

int cmd_verify_distribution(int N, int kmax, int prec) {
  Report rep;
  for (auto& c : verify_distribution(kmax, N, Context(prec)))
    rep.line(c.pass, "k=" + std::to_string(c.k) + " " + c.name, "residual " + c.residual.to_string());
  return rep.exit_code();
}

int cmd_verify_ammv(int weight, long N, int prec) {
  Report rep;
  Context ctx(prec);
  for (int w = 1; w <= weight; ++w)
    for (auto& idx : enumerate_ammv(w)) {
      SeriesValue s = ammv_series(idx, N);
      ApproxR v = ammv_eval(idx, ctx);
      double d = std::abs(static_cast<double>(s.value) - v.value.to_double());
      bool inv = is_invariant(ammv_word(idx));
      std::ostringstream o;
      o << "integral " << v.value.to_string(16) << "  series " << static_cast<double>(s.value) << "  diff " << d
        << "  series err " << static_cast<double>(s.err) << (inv ? "" : "  NOT Galois-invariant");
      rep.line(d <= static_cast<double>(s.err) && inv, idx.to_string(), o.str());
    }
  return rep.exit_code();
}

int cmd_table(Curve curve, int kmax, int prec, const std::string& fmt, const std::string& file, bool allow_large,
              const PslqOptions& popt) {
  if (fmt != "csv" && fmt != "json") throw UsageError("--out must be csv or json");
  TableOptions opt;
  opt.allow_large = allow_large;
  opt.pslq = popt;
  DimTable t = reproduce_dim_table(curve, kmax, Context(prec), opt);
  std::string text = fmt == "csv" ? t.to_csv() : t.to_json().dump(2) + "\n";
  if (file.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(file);
    if (!out) throw UsageError("cannot write " + file);
    out << text;
  }
  for (auto& r : t.rows) {
    std::cerr << "k=" << r.k << " rank " << r.rank << " (published " << r.expected_rank << "), parity " << r.rank_parity0
              << "/" << r.rank_parity1 << " (published " << r.expected_parity0 << "/" << r.expected_parity1 << ") "
              << (r.matches() ? "match" : "MISMATCH") << '\n';
  }
  return kOk;
}

int cmd_constants(const std::vector<std::string>& args, int prec) {
  Context ctx(prec);
  if (args.empty()) throw UsageError("constants: give a name (pi, log2, log3, catalan) or 'zeta s' / 'Lchi3 s'");
  ApproxR v;
  if (args[0] == "zeta" || args[0] == "Lchi3") {
    if (args.size() != 2) throw UsageError("constants: '" + args[0] + "' needs one integer argument");
    int s;
    try {
      s = std::stoi(args[1]);
    } catch (const std::exception&) {
      throw UsageError("constants: bad integer '" + args[1] + "'");
    }
    v = args[0] == "zeta" ? zeta(s, ctx) : dirichlet_L_chi3(s, ctx);
  } else {
    if (args.size() != 1) throw UsageError("constants: too many arguments");
    v = const_eval(args[0], ctx);
  }
  std::cout << v.value.to_fixed(prec) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iterated integrals on the curves g and h: evaluation, verification and dimension tables"};
  app.require_subcommand(1);

  std::string curve_s = "g", word;
  int prec = 30;
  long direct = 0;
  bool no_cache = false;
  auto* ev = app.add_subcommand("eval", "evaluate I_f(word)");
  ev->add_option("--curve", curve_s, "g or h");
  ev->add_option("--word", word, "letter indices, e.g. \"2,2,0\"")->required();
  ev->add_option("--prec", prec, "decimal digits");
  ev->add_option("--direct", direct, "use the direct curve series with this many terms");
  ev->add_flag("--no-cache", no_cache, "do not read or write the value cache");

  auto* ver = app.add_subcommand("verify", "check identities");
  ver->require_subcommand(1);
  int k = 4, weight = 3, N = 4, kmax = 8;
  long ammv_terms = 1000000;
  std::string z0 = "i";
  int vprec = 60;
  auto* v_sc = ver->add_subcommand("special-case", "closed forms of phi^j w0 phi^(k-j-1)");
  v_sc->add_option("--curve", curve_s);
  v_sc->add_option("--k", k);
  v_sc->add_option("--prec", vprec);
  auto* v_sh = ver->add_subcommand("shuffle", "shuffle product identities");
  v_sh->add_option("--curve", curve_s);
  v_sh->add_option("--weight", weight);
  v_sh->add_option("--prec", vprec);
  auto* v_arc = ver->add_subcommand("arc-lemma", "the two arc integrals along C_0(1, z0)");
  v_arc->add_option("--z0", z0, "1, i, -i, z6, z6c or a Cyc literal");
  auto* v_dist = ver->add_subcommand("distribution", "polylog identities at roots of unity");
  v_dist->add_option("--N", N, "4 or 6");
  v_dist->add_option("--kmax", kmax);
  v_dist->add_option("--prec", vprec);
  auto* v_ammv = ver->add_subcommand("ammv-cross", "AMMV series against the iterated-integral route");
  v_ammv->add_option("--weight", weight);
  v_ammv->add_option("--terms", ammv_terms);
  v_ammv->add_option("--prec", vprec);

  auto* tab = app.add_subcommand("table", "dimension tables");
  tab->require_subcommand(1);
  auto* dims = tab->add_subcommand("dims", "#B, D and PSLQ rank estimates per weight");
  int max_weight = 3, tprec = 150;
  std::string out_fmt = "csv", out_file;
  bool allow_large = false;
  PslqOptions popt;
  dims->add_option("--curve", curve_s);
  dims->add_option("--max-weight", max_weight);
  dims->add_option("--prec", tprec);
  dims->add_option("--out", out_fmt, "csv or json");
  dims->add_option("--file", out_file, "write the table here instead of stdout");
  dims->add_flag("--allow-large", allow_large, "lift the weight guard");
  dims->add_option("--gamma", popt.gamma, "PSLQ gamma");
  dims->add_option("--max-iterations", popt.max_iterations, "PSLQ iteration cap");
  dims->add_option("--threshold", popt.threshold_exponent, "detection threshold exponent t in 10^(-t P)");

  auto* con = app.add_subcommand("constants", "print pi, log2, log3, catalan, zeta s, Lchi3 s");
  std::vector<std::string> cargs;
  con->add_option("name", cargs)->required();
  con->add_option("--prec", prec);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    Curve curve = parse_curve(curve_s);
    if (*ev) return cmd_eval(curve, word, prec, direct, !no_cache);
    if (*v_sc) return cmd_verify_special(curve, k, vprec);
    if (*v_sh) return cmd_verify_shuffle(curve, weight, vprec);
    if (*v_arc) return cmd_verify_arc(z0);
    if (*v_dist) return cmd_verify_distribution(N, kmax, vprec);
    if (*v_ammv) return cmd_verify_ammv(weight, ammv_terms, vprec);
    if (*dims) return cmd_table(curve, max_weight, tprec, out_fmt, out_file, allow_large, popt);
    if (*con) return cmd_constants(cargs, prec);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kNumeric;
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kVerify;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kNumeric;
  }
  return kUsage;
}
