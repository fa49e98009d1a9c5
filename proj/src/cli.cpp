#include "icanon/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "icanon/hecke.hpp"
#include "icanon/quantum.hpp"

namespace icanon::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Invalid command parameters (exit code kParse).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------- windows

/// Smallest radius >= r admissible for the mode (iota: 1/2 + Z, jota: Z).
HalfInt class_radius(HalfInt r, Mode mode) {
  const bool odd = r.twice() % 2 != 0;
  const bool want_odd = mode == Mode::Iota;
  return odd == want_odd ? r : HalfInt::from_twice(r.twice() + 1);
}

HalfInt doubled(HalfInt r, Mode mode) { return class_radius(HalfInt::from_twice(2 * r.twice() - 1), mode); }

HalfInt auto_radius(const JobConfig& cfg, const std::vector<WeightFunction>& fs) {
  HalfInt r = HalfInt::integer(0);
  for (const auto& f : fs)
    for (HalfInt v : f.values()) r = std::max(r, v < HalfInt::integer(0) ? -v : v);
  return class_radius(r + HalfInt::integer(cfg.slack), cfg.mode);
}

/// Runs body on growing windows: a fixed window fails on WindowOverflow, an
/// automatic one is doubled until max_radius.
std::string with_window(const JobConfig& cfg, HalfInt auto_start, const std::function<std::string(const Window&)>& body,
                        std::ostream& err) {
  if (cfg.radius) return body(Window::symmetric(*cfg.radius, cfg.mode));
  HalfInt r = auto_start;
  while (true) {
    try {
      return body(Window::symmetric(r, cfg.mode));
    } catch (const WindowOverflow& e) {
      const HalfInt next = doubled(r, cfg.mode);
      if (cfg.max_radius < next) throw WindowOverflow(std::string(e.what()) + " (window cap " + cfg.max_radius.to_string() + " reached)");
      err << "note: " << e.what() << "; retrying with window radius " << next.to_string() << "\n";
      r = next;
    }
  }
}

// ---------------------------------------------------------------- inputs

WeightFunction top_from_cfg(const JobConfig& cfg) {
  if (cfg.f_text.empty() == cfg.lambda_text.empty()) throw UsageError("give exactly one of --f and --lambda");
  if (!cfg.f_text.empty()) return WeightFunction::parse(cfg.m, cfg.n, cfg.mode, cfg.f_text);
  const Weight lam = Weight::parse(cfg.m, cfg.n, cfg.lambda_text);
  const WeightFunction f = f_from_lambda(lam, RootDatum(cfg.m, cfg.n));
  if (f.mode() != cfg.mode)
    throw UnsupportedWeightClass("weight " + lam.to_string() + " does not belong to mode " +
                                 (cfg.mode == Mode::Iota ? std::string("i") : std::string("j")));
  return f;
}

WeightFunction normalize(const WeightFunction& f, const ZetaDatum& z, std::ostream& err) {
  if (is_antidominant(f, z.parabolic)) return f;
  const WeightFunction rep = antidominant_rep(f, z.parabolic).first;
  err << "warning: f = " << f.to_string() << " is not anti-dominant for zeta = " << z.label()
      << "; using the orbit representative f = " << rep.to_string() << "\n";
  return rep;
}

bool is_table_kind(const std::string& k) {
  return k == "verma" || k == "whittaker" || k == "tilting" || k == "bgg" || k == "simple";
}

MultiplicityTable::Kind table_kind(const std::string& k) {
  using K = MultiplicityTable::Kind;
  if (k == "verma") return K::VermaComposition;
  if (k == "whittaker") return K::WhittakerComposition;
  if (k == "tilting") return K::TiltingInStandard;
  if (k == "bgg") return K::ProjectiveInStandard;
  if (k == "simple") return K::SimpleInVerma;
  throw UsageError("unknown table kind '" + k + "'");
}

// ---------------------------------------------------------------- subcommands

std::string run_basis(const JobConfig& cfg, std::ostream& err) {
  const WeightFunction f0 = WeightFunction::parse(cfg.m, cfg.n, cfg.mode, cfg.f_text);
  const ZetaDatum z = ZetaDatum::parse(cfg.m, cfg.n, cfg.zeta);
  const std::string& kind = cfg.kind;
  const bool symmetrized = kind == "calT" || kind == "calTprime" || kind == "calL";
  const WeightFunction f = symmetrized ? normalize(f0, z, err) : f0;
  if (kind != "bar" && kind != "T" && kind != "L" && !symmetrized)
    throw UsageError("unknown basis kind '" + kind + "' (T, L, calT, calTprime, calL, bar)");
  // Automatic windows are also doubled (at most twice) while some terms are
  // uncertified; expansions that are genuinely infinite keep a truncation note.
  const HalfInt start = auto_radius(cfg, {f});
  const HalfInt certify_cap = std::min(cfg.max_radius, doubled(doubled(start, cfg.mode), cfg.mode));
  return with_window(cfg, start, [&](const Window& w) {
    w.require(f);
    BarCache cache(cfg.m, cfg.n, w);
    if (kind == "bar") {
      CanonicalExpansion e;
      e.top = f;
      for (const auto& [g, c] : bar_full(f, cache).terms()) e.terms.emplace(g, c);
      return render_expansion(e, cfg, w, cfg.format, "bar");
    }
    const CanonicalExpansion e = kind == "T"   ? canonical_T(f, cache)
                                 : kind == "L" ? dual_canonical_L(f, cache)
                                               : sym_canonical(f, z.parabolic, parse_kind(kind), cache);
    if (!cfg.radius && !e.uncertified.empty() && !(certify_cap < doubled(w.hi(), cfg.mode)))
      throw WindowOverflow(std::to_string(e.uncertified.size()) + " terms of " + kind + "[" + f.to_string() +
                           "] not certified in " + w.to_string());
    return render_expansion(e, cfg, w, cfg.format);
  }, err);
}

std::string run_mult(const JobConfig& cfg, std::ostream& err) {
  const auto kind = table_kind(cfg.kind);
  const ZetaDatum z = ZetaDatum::parse(cfg.m, cfg.n, cfg.zeta);
  WeightFunction top = top_from_cfg(cfg);
  if (kind != MultiplicityTable::Kind::VermaComposition && kind != MultiplicityTable::Kind::SimpleInVerma)
    top = normalize(top, z, err);
  return with_window(cfg, auto_radius(cfg, {top}), [&](const Window& w) {
    w.require(top);
    Dictionary d(cfg.m, cfg.n, w);
    return render_table(d.table(kind, top, z), cfg.format);
  }, err);
}

CheckReport from_relation(const RelationReport::Entry& e) {
  CheckReport r{e.relation};
  r.checked = e.checked;
  r.failed = e.failed;
  r.counterexample = e.counterexample;
  return r;
}

std::vector<CheckReport> suite_hecke(const JobConfig& cfg, const Window& w) {
  std::vector<CheckReport> out;
  for (const auto& e : verify_relations(cfg.m, cfg.n, w, 0, cfg.seed, cfg.perturb).entries) out.push_back(from_relation(e));
  return out;
}

std::vector<CheckReport> suite_quantum(const JobConfig& cfg, const Window& w) {
  TensorBar psi(cfg.m, cfg.n, w, InvolutionKind::Coideal);
  CheckReport inter{"psi^iota(u x) = psi^iota(u) psi^iota(x) for coideal generators"}, invol{"psi^iota involutive"};
  const auto gens = iquantum_generators(w);
  for (const auto& f : w.basis(cfg.m, cfg.n)) {
    const FockVector v = FockVector::monomial(cfg.m, cfg.n, w, f);
    const FockVector pv = psi.apply(v);
    invol.record(psi.apply(pv) == v, "M[" + f.to_string() + "]");
    for (const auto& [g, i] : gens)
      inter.record(psi.apply(act_iquantum(g, i, v)) == act_iquantum(g == IGen::k ? IGen::kinv : g, i, pv),
                   "M[" + f.to_string() + "], " + igen_name(g, i));
  }
  std::vector<CheckReport> out{inter, invol};
  // Coefficientwise conjugation of a window matrix realizes (psi (x) psi)(Theta)
  // only when both tensor factors are single modules, hence m + n = 2.
  if (cfg.m + cfg.n == 2) {
    CheckReport th{"bar(Theta) Theta = 1 (first factor split off)"};
    const WindowOperator t = compute_theta(cfg.m, cfg.n, w, 1).total();
    const WindowOperator tb = t.bar_conjugate();
    for (const auto& f : w.basis(cfg.m, cfg.n)) {
      const FockVector x = FockVector::monomial(cfg.m, cfg.n, w, f);
      th.record(tb.apply(t.apply(x)) == x, "M[" + f.to_string() + "]");
    }
    out.push_back(th);
  }
  return out;
}

FockVector as_vector(const CanonicalExpansion& e, const Window& w, int m, int n) {
  FockVector v(m, n, w);
  for (const auto& [g, c] : e.terms) v.add(g, c);
  return v;
}

std::vector<CheckReport> suite_bar(const JobConfig& cfg, const Window& w) {
  BarCache cache(cfg.m, cfg.n, w);
  CheckReport invol{"psi^iota o psi^iota = id (unitriangular, integral)"};
  for (const auto& f : w.basis(cfg.m, cfg.n)) {
    const FockVector& b = bar_full(f, cache);
    invol.record(bar_full(b, cache) == FockVector::monomial(cfg.m, cfg.n, w, f), "M[" + f.to_string() + "]");
  }
  return {invol};
}

std::vector<CheckReport> suite_canonical(const JobConfig& cfg, const Window& w) {
  BarCache cache(cfg.m, cfg.n, w);
  CheckReport inv{"T_f, L_f bar-invariant"}, deg{"degree conditions"}, order{"linear-extension independence"};
  LusztigOptions shuffled;
  shuffled.tie_shuffle_seed = cfg.seed == 0 ? 1 : cfg.seed;
  for (const auto& f : w.basis(cfg.m, cfg.n)) {
    const std::string where = "f = " + f.to_string();
    const auto t = canonical_T(f, cache), l = dual_canonical_L(f, cache);
    const FockVector tv = as_vector(t, w, cfg.m, cfg.n), lv = as_vector(l, w, cfg.m, cfg.n);
    inv.record(bar_full(tv, cache) == tv && bar_full(lv, cache) == lv, where);
    bool ok = t.coefficient(f) == LaurentPoly(1) && l.coefficient(f) == LaurentPoly(1);
    for (const auto& [g, c] : t.terms) ok = ok && (g == f || (c.min_degree() >= 1 && bruhat_leq(g, f)));
    for (const auto& [g, c] : l.terms) ok = ok && (g == f || (c.max_degree() <= -1 && bruhat_leq(g, f)));
    deg.record(ok, where);
    order.record(canonical_T(f, cache, shuffled).terms == t.terms && dual_canonical_L(f, cache, shuffled).terms == l.terms,
                 where);
  }
  return {inv, deg, order};
}

std::vector<CheckReport> suite_dictionary(const JobConfig& cfg, const Window& w) {
  const ZetaDatum z = ZetaDatum::parse(cfg.m, cfg.n, cfg.zeta);
  Dictionary d(cfg.m, cfg.n, w.widened(4));
  const auto tops = w.basis(cfg.m, cfg.n);
  auto out = d.commuting_diagram_check(z, tops, cfg.samples, cfg.seed);
  out.push_back(d.bgg_reciprocity_check(z, tops));
  return out;
}

std::string run_verify(const JobConfig& cfg, bool& passed) {
  const Window w = Window::symmetric(
      cfg.radius ? *cfg.radius : (cfg.mode == Mode::Iota ? HalfInt::from_twice(5) : HalfInt::integer(2)), cfg.mode);
  static const std::vector<std::pair<std::string, std::function<std::vector<CheckReport>(const JobConfig&, const Window&)>>>
      suites{{"hecke", suite_hecke}, {"quantum", suite_quantum}, {"bar", suite_bar},
             {"canonical", suite_canonical}, {"dictionary", suite_dictionary}};
  bool known = cfg.suite == "all";
  for (const auto& [name, fn] : suites) known = known || name == cfg.suite;
  if (!known) throw UsageError("unknown suite '" + cfg.suite + "' (hecke, quantum, bar, canonical, dictionary, all)");

  passed = true;
  Json j;
  j["schema"] = kSchema;
  j["command"] = "verify";
  j["meta"] = {{"m", cfg.m}, {"n", cfg.n}, {"mode", cfg.mode == Mode::Iota ? "i" : "j"}, {"zeta", cfg.zeta},
               {"window", w.to_string()}, {"seed", cfg.seed}, {"perturb", cfg.perturb}, {"version", ICANON_VERSION}};
  Json js = Json::array();
  std::ostringstream text, csv;
  csv << "suite,check,checked,failed,skipped,passed,counterexample\n";
  for (const auto& [name, fn] : suites) {
    if (cfg.suite != "all" && cfg.suite != name) continue;
    const auto reports = fn(cfg, w);
    Json checks = Json::array();
    text << "[" << name << "]\n";
    for (const auto& r : reports) {
      passed = passed && r.passed();
      text << "  " << r.to_string() << "\n";
      checks.push_back({{"name", r.name}, {"checked", r.checked}, {"failed", r.failed}, {"skipped", r.skipped},
                        {"passed", r.passed()}, {"counterexample", r.counterexample}});
      csv << "\"" << name << "\",\"" << r.name << "\"," << r.checked << "," << r.failed << "," << r.skipped << ","
          << (r.passed() ? "true" : "false") << ",\"" << r.counterexample << "\"\n";
    }
    js.push_back({{"suite", name}, {"checks", checks}});
  }
  j["suites"] = js;
  j["passed"] = passed;
  text << (passed ? "ALL PASSED" : "FAILURES") << "\n";
  switch (cfg.format) {
    case Format::Json: return j.dump(2) + "\n";
    case Format::Csv: return csv.str();
    case Format::Text: return text.str();
  }
  return text.str();
}

}  // namespace

// ---------------------------------------------------------------- entry point

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact i-canonical bases on truncated Fock spaces and Whittaker multiplicity tables", "icanon"};
  app.set_version_flag("--version", std::string(ICANON_VERSION));
  app.set_config("--config", "", "key = value configuration file; command-line flags override it");
  app.require_subcommand(1);
  app.fallthrough();

  JobConfig cfg;
  std::string mode = "i", window = "auto", format = "text", max_radius = "24";
  app.add_option("--m", cfg.m, "number of V factors")->check(CLI::Range(0, 6));
  app.add_option("--n", cfg.n, "number of W factors")->check(CLI::Range(0, 6));
  app.add_option("--mode", mode, "i (integer weights, half-integer f) or j (half-integer weights, integer f)")
      ->check(CLI::IsMember({"i", "j"}));
  app.add_option("--zeta", cfg.zeta, "generators of W_zeta, e.g. b0,a1 (0 for zeta = 0)");
  app.add_option("--window", window, "window radius, or auto (value range plus slack, doubled on overflow)");
  app.add_option("--slack", cfg.slack, "slack added to automatic windows")->check(CLI::Range(0, 64));
  app.add_option("--max-radius", max_radius, "cap for automatic window doubling");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", cfg.seed, "seed for sampled checks");

  auto* basis = app.add_subcommand("basis", "expansion of T, L, calT, calTprime, calL or psi^iota(M_f)");
  basis->add_option("--kind", cfg.kind, "T | L | calT | calTprime | calL | bar")->required();
  basis->add_option("--f", cfg.f_text, "weight function, e.g. \"1/2;5/2\"")->required();

  auto* mult = app.add_subcommand("mult", "multiplicity table of the block below lambda");
  mult->add_option("--kind", cfg.kind, "whittaker | verma | tilting | bgg | simple")->required();
  mult->add_option("--lambda", cfg.lambda_text, "weight, e.g. \"0;1\"");
  mult->add_option("--f", cfg.f_text, "weight function instead of --lambda");

  auto* verify = app.add_subcommand("verify", "run verification suites; exit 0 iff all pass");
  verify->add_option("--suite", cfg.suite, "hecke | quantum | bar | canonical | dictionary | all");
  verify->add_flag("--perturb", cfg.perturb, "negative control: break the Hecke quadratic relation");
  verify->add_option("--samples", cfg.samples, "sampled monomials for the dictionary suite");

  auto* exp = app.add_subcommand("export", "write a table (mult kinds) or expansion (basis kinds) to a file");
  exp->add_option("--kind", cfg.kind, "a mult kind or a basis kind")->required();
  exp->add_option("--lambda", cfg.lambda_text, "weight (tables)");
  exp->add_option("--f", cfg.f_text, "weight function");
  exp->add_option("--out", cfg.out_path, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  try {
    cfg.mode = mode == "i" ? Mode::Iota : Mode::Jota;
    cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
    cfg.max_radius = HalfInt::parse(max_radius);
    if (window != "auto") {
      const HalfInt r = HalfInt::parse(window);
      if (!(class_radius(r, cfg.mode) == r) || r < HalfInt::integer(0))
        throw UsageError("window radius " + window + " does not belong to mode " + mode);
      cfg.radius = r;
    }
    ZetaDatum::parse(cfg.m, cfg.n, cfg.zeta).parabolic.generators();  // validates generator names

    if (basis->parsed()) {
      out << run_basis(cfg, err);
    } else if (mult->parsed()) {
      out << run_mult(cfg, err);
    } else if (verify->parsed()) {
      bool passed = false;
      out << run_verify(cfg, passed);
      return passed ? kOk : kFailed;
    } else if (exp->parsed()) {
      if (cfg.format == Format::Text) throw UsageError("export needs --format json or csv");
      std::string body;
      if (is_table_kind(cfg.kind)) {
        body = run_mult(cfg, err);
      } else {
        if (cfg.f_text.empty()) throw UsageError("basis export needs --f");
        body = run_basis(cfg, err);
      }
      std::ofstream file(cfg.out_path);
      if (!file) throw std::runtime_error("cannot open " + cfg.out_path);
      file << body;
      out << "wrote " << cfg.out_path << "\n";
    }
    return kOk;
  } catch (const ConventionError& e) {
    err << "convention error: " << e.what() << "\n";
    return kConvention;
  } catch (const WindowOverflow& e) {
    err << "window error: " << e.what() << "\n";
    return kWindow;
  } catch (const NonConvergence& e) {
    err << "window error: " << e.what() << "\n";
    return kWindow;
  } catch (const ClosureCapExceeded& e) {
    err << "window error: " << e.what() << "\n";
    return kWindow;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
}

}  // namespace icanon::cli
