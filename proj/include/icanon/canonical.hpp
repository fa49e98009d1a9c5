#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "icanon/barinv.hpp"
#include "icanon/weyl.hpp"

namespace icanon {

/// Expansion of a canonical-type element in a monomial-type basis.
/// T, L, tildeN, tildeM, N: coordinates w.r.t. {M_g};
/// calT: w.r.t. {N_g}; calTprime: w.r.t. {tildeM_g}; calL: w.r.t. {tildeN_g}.
struct CanonicalExpansion {
  enum class Kind { T, L, calT, calTprime, calL, tildeN, tildeM, N };
  WeightFunction top;
  Kind kind = Kind::T;
  std::map<WeightFunction, LaurentPoly> terms;
  /// Indices g whose interval [g, top] does not fit in the window: their
  /// coefficients are window artefacts and must not be reported as exact.
  std::set<WeightFunction> uncertified;

  LaurentPoly coefficient(const WeightFunction& g) const;
  std::string to_string() const;
};

std::string kind_name(CanonicalExpansion::Kind k);
CanonicalExpansion::Kind parse_kind(const std::string& s);

/// Which degree condition the off-top coefficients satisfy.
enum class DegreeSide { Positive /* q Z[q] */, Negative /* q^{-1} Z[q^{-1}] */ };

/// Column g -> coordinates of psi(B_g) in a unitriangular basis {B_g}.
using BarColumn = std::function<std::map<WeightFunction, LaurentPoly>(const WeightFunction&)>;

struct LusztigOptions {
  std::size_t closure_cap = 200000;
  /// Nonzero: shuffle elements of equal height (a different linear extension).
  unsigned tie_shuffle_seed = 0;
};

/// Unique bar-invariant B_top + sum_{g < top} c_g B_g with c_g on the given
/// degree side. Throws ConventionError if a bar defect is not antisymmetric or
/// the columns are not unitriangular, ClosureCapExceeded on runaway closures.
std::map<WeightFunction, LaurentPoly> lusztig_solve(const WeightFunction& top, const BarColumn& bar_column,
                                                    DegreeSide side, const LusztigOptions& opt = {});

CanonicalExpansion canonical_T(const WeightFunction& f, BarCache& cache, const LusztigOptions& opt = {});
CanonicalExpansion dual_canonical_L(const WeightFunction& f, BarCache& cache, const LusztigOptions& opt = {});

/// [W_f] for the stabilizer of an antidominant f inside P.
LaurentPoly stabilizer_bracket(const WeightFunction& f, const ParabolicDatum& p);

struct SymmetrizedMonomials {
  CanonicalExpansion tildeN, tildeM, N;
};

/// tildeN_f = M_f S_zeta, tildeM_f = tildeN_f / [W_f], N_f = [W_zeta]/[W_f] tildeN_f
/// as expansions in {M_g}. Requires f antidominant for P (std::invalid_argument).
SymmetrizedMonomials sym_monomials(const WeightFunction& f, const ParabolicDatum& p, const Window& w);

/// phi_zeta(v) = v S_zeta in tildeN-coordinates: the returned vector's monomial
/// M_g (g antidominant) stands for tildeN_g. M_f S_zeta = q^{-l(tau)} tildeN_{f.tau}.
FockVector phi_zeta(const FockVector& v, const ParabolicDatum& p);

/// Expansion of sum_g c_g B_g (B = N, tildeM, tildeN according to the kind) in {M_g}.
FockVector expand_symmetrized(const CanonicalExpansion& e, const ParabolicDatum& p, const Window& w);

/// calT (N-coordinates), calTprime (tildeM-coordinates) or calL (tildeN-coordinates).
CanonicalExpansion sym_canonical(const WeightFunction& f, const ParabolicDatum& p, CanonicalExpansion::Kind kind,
                                 BarCache& cache, const LusztigOptions& opt = {});

/// Inverse of an upper unitriangular matrix (a[i][j] = 0 for i > j, a[i][i] = 1).
/// Throws std::invalid_argument otherwise.
std::vector<std::vector<LaurentPoly>> invert_unitriangular(const std::vector<std::vector<LaurentPoly>>& a);

}  // namespace icanon
