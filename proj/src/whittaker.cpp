#include "icanon/whittaker.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace icanon {

namespace {

void sort_by_height(std::vector<WeightFunction>& v) {
  std::sort(v.begin(), v.end(), [](const WeightFunction& a, const WeightFunction& b) {
    const HalfInt ha = bruhat_height(a), hb = bruhat_height(b);
    return ha != hb ? ha < hb : a < b;
  });
}

void add_to(GrothVector& v, GClass c, const WeightFunction& f, long long x) {
  if (x == 0) return;
  auto [it, inserted] = v.try_emplace({c, f}, x);
  if (!inserted && (it->second += x) == 0) v.erase(it);
}

std::string gclass_name(GClass c) {
  switch (c) {
    case GClass::Verma: return "M";
    case GClass::Simple: return "L";
    case GClass::WhittakerStandard: return "Mz";
    case GClass::WhittakerSimple: return "Lz";
  }
  return "?";
}

/// psi_zeta at q = 1 of a vector in tildeN-coordinates: tildeN_g -> [M(lambda_g, zeta)].
GrothVector whittaker_classes_at_one(const FockVector& v) {
  GrothVector out;
  for (const auto& [g, c] : v.terms()) add_to(out, GClass::WhittakerStandard, g, eval_at_one(c));
  return out;
}

}  // namespace

// ---------------------------------------------------------------- ZetaDatum, tables, reports

ZetaDatum ZetaDatum::parse(int m, int n, const std::string& text) { return {ParabolicDatum::parse(m, n, text)}; }

std::string ZetaDatum::label() const { return parabolic.to_string(); }

WeightFunction ringel_relabel(const WeightFunction& f, const ZetaDatum& z) {
  const WeightFunction g = act(f, z.parabolic.longest_element());
  std::vector<HalfInt> v(g.values().begin(), g.values().end());
  for (auto& x : v) x = -x;
  return WeightFunction(g.m(), g.n(), g.mode(), std::move(v));
}

long long MultiplicityTable::at(const WeightFunction& row, const WeightFunction& col) const {
  const auto r = std::find(rows.begin(), rows.end(), row);
  const auto c = std::find(cols.begin(), cols.end(), col);
  if (r == rows.end() || c == cols.end()) throw std::out_of_range("index not in table");
  return entries[r - rows.begin()][c - cols.begin()];
}

std::string table_kind_name(MultiplicityTable::Kind k) {
  using K = MultiplicityTable::Kind;
  switch (k) {
    case K::SimpleInVerma: return "simple-in-verma";
    case K::VermaComposition: return "verma";
    case K::WhittakerComposition: return "whittaker";
    case K::TiltingInStandard: return "tilting";
    case K::ProjectiveInStandard: return "bgg";
  }
  return "?";
}

std::string table_kind_formula(MultiplicityTable::Kind k) {
  using K = MultiplicityTable::Kind;
  switch (k) {
    case K::SimpleInVerma: return "ch L(row) = sum entry * ch M(col)";
    case K::VermaComposition: return "[M(row):L(col)]";
    case K::WhittakerComposition: return "[M(row,zeta):L(col,zeta)]";
    case K::TiltingInStandard: return "(T(row):Delta(col))";
    case K::ProjectiveInStandard: return "(P(row):Delta(col))";
  }
  return "?";
}

std::string groth_to_string(const GrothVector& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [key, c] : v)
    s += (s.empty() ? "" : " + ") + std::to_string(c) + "*" + gclass_name(key.first) + "[" + key.second.to_string() + "]";
  return s;
}

void CheckReport::record(bool ok, const std::string& where) {
  ++checked;
  if (!ok) {
    ++failed;
    if (counterexample.empty()) counterexample = where;
  }
}

std::string CheckReport::to_string() const {
  std::ostringstream os;
  os << (passed() ? "PASS " : "FAIL ") << name << ": " << checked - failed << "/" << checked;
  if (skipped) os << " (" << skipped << " outside window)";
  if (!counterexample.empty()) os << "  counterexample: " << counterexample;
  return os.str();
}

// ---------------------------------------------------------------- Dictionary: basic queries

Dictionary::Dictionary(int m, int n, Window window) : m_(m), n_(n), cache_(m, n, window), rd_(m, n) {}

const CanonicalExpansion& Dictionary::dual(const WeightFunction& f) {
  auto it = dual_memo_.find(f);
  if (it == dual_memo_.end()) it = dual_memo_.emplace(f, dual_canonical_L(f, cache_)).first;
  return it->second;
}

const CanonicalExpansion& Dictionary::calT(const WeightFunction& f, const ZetaDatum& z) {
  const auto key = std::pair{z.label(), f};
  auto it = calT_memo_.find(key);
  if (it == calT_memo_.end())
    it = calT_memo_.emplace(key, sym_canonical(f, z.parabolic, CanonicalExpansion::Kind::calT, cache_)).first;
  return it->second;
}

const std::vector<WeightFunction>& Dictionary::closure(const WeightFunction& f) {
  auto it = closure_memo_.find(f);
  if (it == closure_memo_.end()) {
    const auto s = support_closure(f, cache_);
    std::vector<WeightFunction> v(s.begin(), s.end());
    sort_by_height(v);
    it = closure_memo_.emplace(f, std::move(v)).first;
  }
  return it->second;
}

long long Dictionary::dual_at_one(const WeightFunction& g, const WeightFunction& h) {
  const auto& e = dual(h);
  if (e.uncertified.count(g))
    throw ConventionError("dual canonical coefficient (" + g.to_string() + ", " + h.to_string() +
                          ") used inside a certified interval but not certified");
  return eval_at_one(e.coefficient(g));
}

void Dictionary::require_antidominant(const WeightFunction& f, const ZetaDatum& z, const char* what) const {
  if (!is_antidominant(f, z.parabolic))
    throw NotAntidominant(std::string(what) + " f = " + f.to_string() + " is not anti-dominant for zeta = " +
                          z.label());
}

WeightFunction Dictionary::to_f(const Weight& lam) const {
  const WeightFunction f = f_from_lambda(lam, rd_);
  if (f.mode() != window().mode())
    throw UnsupportedWeightClass("weight " + lam.to_string() + " does not belong to the " +
                                 mode_name(window().mode()) + " class");
  return f;
}

std::map<WeightFunction, long long> Dictionary::simple_character(const WeightFunction& f) {
  const auto& e = dual(f);
  std::map<WeightFunction, long long> out;
  for (const auto& [g, c] : e.terms) {
    if (e.uncertified.count(g))
      throw WindowOverflow("simple character of " + f.to_string() + " needs " + g.to_string() + " beyond the window");
    if (const auto x = eval_at_one(c); x != 0) out.emplace(g, x);
  }
  return out;
}

std::map<WeightFunction, long long> Dictionary::simple_character(const Weight& lam) {
  return simple_character(to_f(lam));
}

long long Dictionary::verma_composition(const WeightFunction& mu, const WeightFunction& lam) {
  if (mu == lam) return 1;
  if (!bruhat_leq(lam, mu)) return 0;
  if (!interval_in_window(lam, mu, window()))
    throw WindowOverflow("interval [" + lam.to_string() + ", " + mu.to_string() + "] leaves the window");
  const auto key = std::pair{lam, mu};
  if (auto it = verma_memo_.find(key); it != verma_memo_.end()) return it->second;
  // Sum_h A(lam, h) X(h, mu) = 0 with A(g, h) = l_{gh}(1) and X(g, f) = [M(f):L(g)].
  long long x = 0;
  for (const auto& h : closure(mu)) {
    if (h == lam || !bruhat_leq(lam, h)) continue;
    const long long a = dual_at_one(lam, h);
    if (a != 0) x -= a * verma_composition(mu, h);
  }
  if (x < 0)
    throw ConventionError("negative multiplicity [M(" + mu.to_string() + "):L(" + lam.to_string() + ")] = " +
                          std::to_string(x));
  verma_memo_.emplace(key, x);
  return x;
}

long long Dictionary::verma_composition(const Weight& mu, const Weight& lam) {
  return verma_composition(to_f(mu), to_f(lam));
}

long long Dictionary::whittaker_composition(const WeightFunction& lam, const WeightFunction& mu, const ZetaDatum& z) {
  require_antidominant(lam, z, "lambda");
  require_antidominant(mu, z, "mu");
  return verma_composition(lam, mu);
}

long long Dictionary::tilting_multiplicity(const WeightFunction& lam, const WeightFunction& mu, const ZetaDatum& z) {
  require_antidominant(lam, z, "lambda");
  require_antidominant(mu, z, "mu");
  const WeightFunction rl = ringel_relabel(lam, z), rm = ringel_relabel(mu, z);
  if (!is_antidominant(rl, z.parabolic) || !is_antidominant(rm, z.parabolic))
    throw ConventionError("Ringel relabeling left the anti-dominant set at " + lam.to_string());
  return verma_composition(rm, rl);
}

long long Dictionary::tilting_from_canonical(const WeightFunction& lam, const WeightFunction& mu, const ZetaDatum& z) {
  require_antidominant(lam, z, "lambda");
  require_antidominant(mu, z, "mu");
  const auto& e = calT(lam, z);
  if (e.uncertified.count(mu) || (bruhat_leq(mu, lam) && !interval_in_window(mu, lam, window())))
    throw WindowOverflow("t(" + mu.to_string() + ", " + lam.to_string() + ") leaves the window");
  return eval_at_one(e.coefficient(mu));
}

// ---------------------------------------------------------------- Grothendieck maps

GrothVector Dictionary::gamma_zeta(const GrothVector& v, const ZetaDatum& z) const {
  GrothVector out;
  for (const auto& [key, c] : v) {
    const auto& [cls, f] = key;
    if (cls == GClass::Verma) add_to(out, GClass::WhittakerStandard, antidominant_rep(f, z.parabolic).first, c);
    else if (cls == GClass::Simple) {
      if (is_antidominant(f, z.parabolic)) add_to(out, GClass::WhittakerSimple, f, c);
    } else {
      throw std::invalid_argument("gamma_zeta expects classes of category O");
    }
  }
  return out;
}

GrothVector Dictionary::to_standard(const GrothVector& v, const ZetaDatum& z) {
  GrothVector out;
  for (const auto& [key, c] : v) {
    const auto& [cls, f] = key;
    switch (cls) {
      case GClass::Verma:
      case GClass::WhittakerStandard: add_to(out, cls, f, c); break;
      case GClass::Simple:
        for (const auto& [g, x] : simple_character(f)) add_to(out, GClass::Verma, g, c * x);
        break;
      case GClass::WhittakerSimple: {
        require_antidominant(f, z, "simple Whittaker index");
        // ch L(f, zeta) = sum_g Y(g) ch M(g, zeta), Y the inverse of
        // X(g, h) = [M(h, zeta):L(g, zeta)] over anti-dominant g <= h <= f.
        std::vector<WeightFunction> s;
        for (const auto& g : closure(f))
          if (is_antidominant(g, z.parabolic)) s.push_back(g);
        std::map<WeightFunction, long long> y;
        for (auto g = s.rbegin(); g != s.rend(); ++g) {
          long long val = *g == f ? 1 : 0;
          for (const auto& [h, yh] : y)
            if (h != *g) val -= whittaker_composition(h, *g, z) * yh;
          y.emplace(*g, val);
        }
        for (const auto& [g, x] : y) add_to(out, GClass::WhittakerStandard, g, c * x);
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- tables and checks

std::vector<WeightFunction> Dictionary::lower_block(const WeightFunction& top) {
  std::vector<WeightFunction> out;
  for (const auto& g : closure(top))
    if (interval_in_window(g, top, window())) out.push_back(g);
  return out;
}

MultiplicityTable Dictionary::table(MultiplicityTable::Kind kind, const WeightFunction& top, const ZetaDatum& z) {
  using K = MultiplicityTable::Kind;
  const bool whittaker_indexed = kind != K::SimpleInVerma && kind != K::VermaComposition;
  MultiplicityTable t;
  t.kind = kind;
  t.m = m_;
  t.n = n_;
  t.mode = window().mode();
  t.zeta = z.label();
  t.window = window();
  for (const auto& g : lower_block(top))
    if (!whittaker_indexed || is_antidominant(g, z.parabolic)) t.rows.push_back(g);
  t.cols = t.rows;
  for (const auto& r : t.rows) {
    std::vector<long long> row;
    for (const auto& c : t.cols) {
      switch (kind) {
        case K::SimpleInVerma: row.push_back(r == c ? 1 : bruhat_leq(c, r) ? dual_at_one(c, r) : 0); break;
        case K::VermaComposition: row.push_back(verma_composition(r, c)); break;
        case K::WhittakerComposition: row.push_back(whittaker_composition(r, c, z)); break;
        case K::TiltingInStandard: row.push_back(tilting_multiplicity(r, c, z)); break;
        case K::ProjectiveInStandard: row.push_back(verma_composition(c, r)); break;
      }
    }
    t.entries.push_back(std::move(row));
  }
  return t;
}

CheckReport Dictionary::bgg_reciprocity_check(const ZetaDatum& z, const std::vector<WeightFunction>& tops,
                                              MultiplicityTable* table_out) {
  CheckReport rep{"BGG reciprocity and orbit invariance (zeta = " + z.label() + ")"};
  std::set<WeightFunction> anti;
  for (const auto& t : tops)
    for (const auto& g : lower_block(t))
      if (is_antidominant(g, z.parabolic)) anti.insert(g);
  for (const auto& lam : anti)
    for (const auto& mu : anti) {
      long long v;
      try {
        v = verma_composition(mu, lam);
      } catch (const WindowOverflow&) {
        ++rep.skipped;
        continue;
      }
      const std::string where = "lambda f = " + lam.to_string() + ", mu f = " + mu.to_string();
      if (lam == mu) rep.record(v == 1, where + " (diagonal)");
      for (const auto& w : z.parabolic.elements()) {
        try {
          rep.record(verma_composition(act(mu, w), lam) == v, where + ", w = " + w.to_string());
        } catch (const WindowOverflow&) {
          ++rep.skipped;
        }
      }
    }
  if (table_out) {
    MultiplicityTable& t = *table_out;
    t = {};
    t.kind = MultiplicityTable::Kind::ProjectiveInStandard;
    t.m = m_;
    t.n = n_;
    t.mode = window().mode();
    t.zeta = z.label();
    t.window = window();
    t.rows.assign(anti.begin(), anti.end());
    sort_by_height(t.rows);
    t.cols = t.rows;
    for (const auto& r : t.rows) {
      std::vector<long long> row;
      for (const auto& c : t.cols) {
        try {
          row.push_back(verma_composition(c, r));
        } catch (const WindowOverflow&) {
          row.push_back(-1);  // not certified in this window
        }
      }
      t.entries.push_back(std::move(row));
    }
  }
  return rep;
}

std::vector<CheckReport> Dictionary::commuting_diagram_check(const ZetaDatum& z, const std::vector<WeightFunction>& tops,
                                                             int samples, unsigned seed) {
  const std::string tag = " (zeta = " + z.label() + ")";
  CheckReport mono{"gamma.psi = psi_zeta.phi_zeta on M_f" + tag};
  CheckReport dual_verma{"gamma.psi = psi_zeta.phi_zeta on L_f" + tag};
  CheckReport dual_simple{"gamma[L(lambda_f)] = psi_zeta.phi_zeta(L_f)" + tag};
  CheckReport tilt{"calT_f(1) = Ringel route (T(lambda):Delta(mu))" + tag};

  std::vector<WeightFunction> pool = tops;
  std::mt19937 rng(seed);
  std::shuffle(pool.begin(), pool.end(), rng);
  if (samples >= 0 && static_cast<std::size_t>(samples) < pool.size()) pool.resize(samples);
  std::sort(pool.begin(), pool.end());

  const Window& w = window();
  for (const auto& f : pool) {
    const std::string where = "f = " + f.to_string();
    // Monomials: [M(lambda_f)] -> [M(lambda_f°, zeta)] versus phi_zeta(M_f) at q = 1.
    const auto left = gamma_zeta({{{GClass::Verma, f}, 1}}, z);
    const auto right = whittaker_classes_at_one(phi_zeta(FockVector::monomial(m_, n_, w, f), z.parabolic));
    mono.record(left == right, where + ": " + groth_to_string(left) + " vs " + groth_to_string(right));

    // Dual canonical elements.
    const auto& l = dual(f);
    if (!l.uncertified.empty()) {
      ++dual_verma.skipped;
      ++dual_simple.skipped;
    } else {
      FockVector lv(m_, n_, w);
      for (const auto& [g, c] : l.terms) lv.add(g, c);
      const auto psi_side = whittaker_classes_at_one(phi_zeta(lv, z.parabolic));
      const auto verma_route = gamma_zeta(to_standard({{{GClass::Simple, f}, 1}}, z), z);
      dual_verma.record(verma_route == psi_side,
                        where + ": " + groth_to_string(verma_route) + " vs " + groth_to_string(psi_side));
      try {
        const auto simple_route = to_standard(gamma_zeta({{{GClass::Simple, f}, 1}}, z), z);
        dual_simple.record(simple_route == psi_side,
                           where + ": " + groth_to_string(simple_route) + " vs " + groth_to_string(psi_side));
      } catch (const WindowOverflow&) {
        ++dual_simple.skipped;
      }
    }

    // Tilting: calT_f coefficients at q = 1 against the Ringel route.
    if (is_antidominant(f, z.parabolic)) {
      for (const auto& g : lower_block(f)) {
        if (!is_antidominant(g, z.parabolic)) continue;
        try {
          const long long a = tilting_from_canonical(f, g, z), b = tilting_multiplicity(f, g, z);
          tilt.record(a == b, where + ", mu f = " + g.to_string() + ": t(1) = " + std::to_string(a) +
                                  ", Ringel = " + std::to_string(b));
        } catch (const WindowOverflow&) {
          ++tilt.skipped;
        }
      }
    }
  }
  return {mono, dual_verma, dual_simple, tilt};
}

}  // namespace icanon
