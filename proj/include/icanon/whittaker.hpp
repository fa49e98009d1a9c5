#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "icanon/canonical.hpp"
#include "icanon/weights.hpp"

namespace icanon {

/// A Whittaker-indexed query was given a weight that is not W_zeta-anti-dominant.
struct NotAntidominant : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The Weyl-group shadow of a character zeta: the parabolic W_zeta generated by
/// the even simple roots in Pi_zeta (named by their Weyl generators).
struct ZetaDatum {
  ParabolicDatum parabolic;

  static ZetaDatum trivial(int m, int n) { return {ParabolicDatum::trivial(m, n)}; }
  /// Generator-name list, e.g. "b0,a1" or "" / "0" for zeta = 0.
  static ZetaDatum parse(int m, int n, const std::string& text);
  std::string label() const;
  bool is_trivial() const { return parabolic.generators().empty(); }
};

/// Ringel relabeling lambda -> -w_0^zeta . lambda in f-coordinates: f -> -(f . w_0^zeta).
WeightFunction ringel_relabel(const WeightFunction& f, const ZetaDatum& z);

/// Integer multiplicity table with both index forms and provenance metadata.
struct MultiplicityTable {
  enum class Kind { SimpleInVerma, VermaComposition, WhittakerComposition, TiltingInStandard, ProjectiveInStandard };
  Kind kind = Kind::VermaComposition;
  int m = 0, n = 0;
  Mode mode = Mode::Iota;
  std::string zeta;
  Window window;
  std::vector<WeightFunction> rows, cols;
  std::vector<std::vector<long long>> entries;  // entries[r][c]

  long long at(const WeightFunction& row, const WeightFunction& col) const;
};

std::string table_kind_name(MultiplicityTable::Kind k);
/// Meaning of entries[r][c], e.g. "[M(row):L(col)]".
std::string table_kind_formula(MultiplicityTable::Kind k);

/// Grothendieck classes: Verma / simple objects of O and standard / simple
/// Whittaker objects M(lambda, zeta), L(lambda, zeta); indexed by f-values.
enum class GClass { Verma, Simple, WhittakerStandard, WhittakerSimple };
using GrothVector = std::map<std::pair<GClass, WeightFunction>, long long>;
std::string groth_to_string(const GrothVector& v);

/// Report of a property check: counts and the first counterexample.
struct CheckReport {
  CheckReport() = default;
  explicit CheckReport(std::string n) : name(std::move(n)) {}

  std::string name;
  int checked = 0;
  int failed = 0;
  int skipped = 0;  // queries whose intervals left the window
  std::string counterexample;
  bool passed() const { return failed == 0 && checked > 0; }
  void record(bool ok, const std::string& where);
  std::string to_string() const;
};

/// Grothendieck-level dictionary on one window: multiplicities from dual
/// canonical coefficients at q = 1. Every query whose interval does not fit
/// in the window throws WindowOverflow, so returned numbers are exact.
class Dictionary {
 public:
  Dictionary(int m, int n, Window window);

  int m() const { return m_; }
  int n() const { return n_; }
  const Window& window() const { return cache_.window(); }
  BarCache& cache() { return cache_; }

  /// ch L(lambda_f) = sum_g l_{gf}(1) ch M(lambda_g).
  std::map<WeightFunction, long long> simple_character(const WeightFunction& f);
  std::map<WeightFunction, long long> simple_character(const Weight& lam);
  /// [M(mu):L(lam)] by unitriangular inversion of (l_{gf}(1)) over the interval.
  long long verma_composition(const WeightFunction& mu, const WeightFunction& lam);
  long long verma_composition(const Weight& mu, const Weight& lam);
  /// [M(lam,zeta):L(mu,zeta)] = [M(lam):L(mu)]; both must be W_zeta-anti-dominant.
  long long whittaker_composition(const WeightFunction& lam, const WeightFunction& mu, const ZetaDatum& z);
  /// (T(lam):Delta(mu)) = [M(R mu):L(R lam)] with R = ringel_relabel.
  long long tilting_multiplicity(const WeightFunction& lam, const WeightFunction& mu, const ZetaDatum& z);
  /// t_{f_mu f_lam}(1) from calT_{f_lam} in N-coordinates (independent route).
  long long tilting_from_canonical(const WeightFunction& lam, const WeightFunction& mu, const ZetaDatum& z);

  /// [M(lambda)] -> [M(lambda°, zeta)], [L(lambda)] -> [L(lambda, zeta)] or 0.
  GrothVector gamma_zeta(const GrothVector& v, const ZetaDatum& z) const;
  /// Rewrites Simple / WhittakerSimple classes in Verma / WhittakerStandard classes.
  GrothVector to_standard(const GrothVector& v, const ZetaDatum& z);

  /// Orbit invariance and (P(lam):Delta(mu)) = [M(mu):L(lam)] on all
  /// anti-dominant pairs below the given tops; `table` receives the P-table.
  CheckReport bgg_reciprocity_check(const ZetaDatum& z, const std::vector<WeightFunction>& tops,
                                    MultiplicityTable* table = nullptr);
  /// gamma o psi = psi_zeta o phi_zeta at q = 1 on `samples` monomials drawn
  /// (seeded) from `tops`, on M_f and L_f, plus calT versus the tilting route.
  std::vector<CheckReport> commuting_diagram_check(const ZetaDatum& z, const std::vector<WeightFunction>& tops,
                                                   int samples, unsigned seed);

  /// Table over the certified, kind-appropriate elements of the lower
  /// closure of `top` (anti-dominant ones for Whittaker-indexed kinds).
  MultiplicityTable table(MultiplicityTable::Kind kind, const WeightFunction& top, const ZetaDatum& z);

  /// Linkage-closed index set used by tables: certified g in the closure of top.
  std::vector<WeightFunction> lower_block(const WeightFunction& top);

 private:
  const CanonicalExpansion& dual(const WeightFunction& f);
  const CanonicalExpansion& calT(const WeightFunction& f, const ZetaDatum& z);
  const std::vector<WeightFunction>& closure(const WeightFunction& f);
  /// A(g, h) = l_{gh}(1), with its certification asserted.
  long long dual_at_one(const WeightFunction& g, const WeightFunction& h);
  void require_antidominant(const WeightFunction& f, const ZetaDatum& z, const char* what) const;
  WeightFunction to_f(const Weight& lam) const;

  int m_, n_;
  BarCache cache_;
  RootDatum rd_;
  std::map<WeightFunction, CanonicalExpansion> dual_memo_;
  std::map<std::pair<std::string, WeightFunction>, CanonicalExpansion> calT_memo_;
  std::map<WeightFunction, std::vector<WeightFunction>> closure_memo_;
  std::map<std::pair<WeightFunction, WeightFunction>, long long> verma_memo_;
};

}  // namespace icanon
