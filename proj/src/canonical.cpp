#include "icanon/canonical.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "icanon/hecke.hpp"
#include "icanon/weights.hpp"

namespace icanon {

using Kind = CanonicalExpansion::Kind;

LaurentPoly CanonicalExpansion::coefficient(const WeightFunction& g) const {
  auto it = terms.find(g);
  return it == terms.end() ? LaurentPoly() : it->second;
}

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::T: return "T";
    case Kind::L: return "L";
    case Kind::calT: return "calT";
    case Kind::calTprime: return "calTprime";
    case Kind::calL: return "calL";
    case Kind::tildeN: return "tildeN";
    case Kind::tildeM: return "tildeM";
    case Kind::N: return "N";
  }
  return "?";
}

Kind parse_kind(const std::string& s) {
  for (Kind k : {Kind::T, Kind::L, Kind::calT, Kind::calTprime, Kind::calL, Kind::tildeN, Kind::tildeM, Kind::N})
    if (kind_name(k) == s) return k;
  throw std::invalid_argument("unknown basis kind '" + s + "'");
}

namespace {

std::string basis_symbol(Kind k) {
  switch (k) {
    case Kind::calT: return "N";
    case Kind::calTprime: return "tildeM";
    case Kind::calL: return "tildeN";
    default: return "M";
  }
}

}  // namespace

std::string CanonicalExpansion::to_string() const {
  if (terms.empty()) return "0";
  // Top first, then by decreasing height (ties in index order).
  std::vector<WeightFunction> order;
  for (const auto& [g, c] : terms) order.push_back(g);
  std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    if (a == top || b == top) return a == top && !(b == top);
    return bruhat_height(b) < bruhat_height(a);
  });
  std::string s;
  for (const auto& g : order) {
    if (!s.empty()) s += " + ";
    const LaurentPoly& c = terms.at(g);
    if (c != LaurentPoly(1)) s += "(" + c.to_string() + ")*";
    s += basis_symbol(kind) + "[" + g.to_string() + "]";
    if (uncertified.count(g)) s += "?";
  }
  return s;
}

// ---------------------------------------------------------------- Lusztig's algorithm

std::map<WeightFunction, LaurentPoly> lusztig_solve(const WeightFunction& top, const BarColumn& bar_column,
                                                    DegreeSide side, const LusztigOptions& opt) {
  // Support closure and the bar columns it needs.
  std::map<WeightFunction, std::map<WeightFunction, LaurentPoly>> cols;
  std::deque<WeightFunction> todo{top};
  cols.emplace(top, std::map<WeightFunction, LaurentPoly>{});
  while (!todo.empty()) {
    const WeightFunction g = todo.front();
    todo.pop_front();
    auto col = bar_column(g);
    auto diag = col.find(g);
    if (diag == col.end() || diag->second != LaurentPoly(1))
      throw ConventionError("bar column of " + g.to_string() + " has no unit diagonal");
    for (const auto& [h, c] : col) {
      if (h == g) continue;
      if (!bruhat_leq(h, g))
        throw ConventionError("bar column of " + g.to_string() + " reaches non-lower " + h.to_string());
      if (cols.try_emplace(h).second) {
        if (cols.size() > opt.closure_cap)
          throw ClosureCapExceeded("closure of " + top.to_string() + " exceeded " + std::to_string(opt.closure_cap));
        todo.push_back(h);
      }
    }
    cols[g] = std::move(col);
  }

  // Process from the top down in a linear extension (height, then tie order).
  std::vector<WeightFunction> order;
  for (const auto& [g, c] : cols) order.push_back(g);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return bruhat_height(b) < bruhat_height(a); });
  if (opt.tie_shuffle_seed != 0) {
    std::mt19937 rng(opt.tie_shuffle_seed);
    for (std::size_t i = 0; i < order.size();) {
      std::size_t j = i;
      while (j < order.size() && bruhat_height(order[j]) == bruhat_height(order[i])) ++j;
      std::shuffle(order.begin() + i, order.begin() + j, rng);
      i = j;
    }
  }

  std::map<WeightFunction, LaurentPoly> coeff, defect;
  for (const auto& g : order) {
    LaurentPoly c;
    if (g == top) {
      c = 1;
    } else {
      // c - bar(c) = sum_{h above g} bar(c_h) r_{g h} =: a
      const LaurentPoly a = defect[g];
      if (bar(a) != -a)
        throw ConventionError("bar defect at " + g.to_string() + " is not antisymmetric: " + a.to_string());
      for (const auto& [k, x] : a.to_pairs())
        if (side == DegreeSide::Positive ? k > 0 : k < 0) c += LaurentPoly::monomial(k) * LaurentPoly(x);
    }
    if (c.is_zero()) continue;
    coeff.emplace(g, c);
    for (const auto& [h, r] : cols[g])
      if (!(h == g)) defect[h] += bar(c) * r;
  }
  return coeff;
}

namespace {

std::map<WeightFunction, LaurentPoly> column_of(const FockVector& v) {
  return {v.terms().begin(), v.terms().end()};
}

CanonicalExpansion finish(const WeightFunction& f, Kind kind, std::map<WeightFunction, LaurentPoly> terms,
                          const Window& w) {
  CanonicalExpansion e{f, kind, std::move(terms), {}};
  for (const auto& [g, c] : e.terms)
    if (!interval_in_window(g, f, w)) e.uncertified.insert(g);
  return e;
}

}  // namespace

CanonicalExpansion canonical_T(const WeightFunction& f, BarCache& cache, const LusztigOptions& opt) {
  auto col = [&](const WeightFunction& g) { return column_of(bar_full(g, cache)); };
  return finish(f, Kind::T, lusztig_solve(f, col, DegreeSide::Positive, opt), cache.window());
}

CanonicalExpansion dual_canonical_L(const WeightFunction& f, BarCache& cache, const LusztigOptions& opt) {
  auto col = [&](const WeightFunction& g) { return column_of(bar_full(g, cache)); };
  return finish(f, Kind::L, lusztig_solve(f, col, DegreeSide::Negative, opt), cache.window());
}

// ---------------------------------------------------------------- symmetrized bases

LaurentPoly stabilizer_bracket(const WeightFunction& f, const ParabolicDatum& p) {
  return poincare_bracket(stabilizer(f, p));
}

SymmetrizedMonomials sym_monomials(const WeightFunction& f, const ParabolicDatum& p, const Window& w) {
  if (!is_antidominant(f, p)) throw std::invalid_argument("sym_monomials: " + f.to_string() + " is not antidominant");
  const LaurentPoly wf = stabilizer_bracket(f, p);
  const LaurentPoly wz = poincare_bracket(p);
  const FockVector tn = q_symmetrizer_apply(FockVector::monomial(f.m(), f.n(), w, f), p);
  SymmetrizedMonomials out{{f, Kind::tildeN, {}, {}}, {f, Kind::tildeM, {}, {}}, {f, Kind::N, {}, {}}};
  for (const auto& [g, c] : tn.terms()) {
    out.tildeN.terms.emplace(g, c);
    out.tildeM.terms.emplace(g, divide_exact(c, wf));
    out.N.terms.emplace(g, divide_exact(wz * c, wf));
  }
  return out;
}

FockVector phi_zeta(const FockVector& v, const ParabolicDatum& p) {
  FockVector r(v.m(), v.n(), v.window());
  for (const auto& [h, c] : v.terms()) {
    const auto [hm, tau] = antidominant_rep(h, p);
    r.add(hm, c.shifted(-tau.length()));
  }
  return r;
}

FockVector expand_symmetrized(const CanonicalExpansion& e, const ParabolicDatum& p, const Window& w) {
  FockVector r(e.top.m(), e.top.n(), w);
  for (const auto& [g, c] : e.terms) {
    if (e.kind == Kind::T || e.kind == Kind::L) {
      r.add(g, c);
      continue;
    }
    const SymmetrizedMonomials s = sym_monomials(g, p, w);
    const CanonicalExpansion* b = &s.tildeN;
    if (e.kind == Kind::calT || e.kind == Kind::N) b = &s.N;
    if (e.kind == Kind::calTprime || e.kind == Kind::tildeM) b = &s.tildeM;
    for (const auto& [h, x] : b->terms) r.add(h, c * x);
  }
  return r;
}

CanonicalExpansion sym_canonical(const WeightFunction& f, const ParabolicDatum& p, Kind kind, BarCache& cache,
                                 const LusztigOptions& opt) {
  if (kind != Kind::calT && kind != Kind::calTprime && kind != Kind::calL)
    throw std::invalid_argument("sym_canonical: kind must be calT, calTprime or calL");
  if (!is_antidominant(f, p)) throw std::invalid_argument("sym_canonical: " + f.to_string() + " is not antidominant");
  // psi(tildeN_g) = psi(M_g) S_zeta = phi_zeta(psi(M_g)) with coordinates r_{g'g}.
  // tildeM_g and N_g are tildeN_g times the bar-invariant scalars 1/[W_g] and
  // [W_zeta]/[W_g], so in both bases the columns are r_{g'g} [W_g'] / [W_g].
  auto tilde_col = [&](const WeightFunction& g) {
    const FockVector v = phi_zeta(bar_full(g, cache), p);
    return std::map<WeightFunction, LaurentPoly>(v.terms().begin(), v.terms().end());
  };
  BarColumn col = tilde_col;
  if (kind != Kind::calL)
    col = [&](const WeightFunction& g) {
      auto c = tilde_col(g);
      const LaurentPoly wg = stabilizer_bracket(g, p);
      for (auto& [h, x] : c) x = divide_exact(x * stabilizer_bracket(h, p), wg);
      return c;
    };
  const DegreeSide side = kind == Kind::calL ? DegreeSide::Negative : DegreeSide::Positive;
  return finish(f, kind, lusztig_solve(f, col, side, opt), cache.window());
}

// ---------------------------------------------------------------- matrices

std::vector<std::vector<LaurentPoly>> invert_unitriangular(const std::vector<std::vector<LaurentPoly>>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("invert_unitriangular: matrix is not square");
    if (a[i][i] != LaurentPoly(1)) throw std::invalid_argument("invert_unitriangular: diagonal entry is not 1");
    for (std::size_t j = 0; j < i; ++j)
      if (!a[i][j].is_zero()) throw std::invalid_argument("invert_unitriangular: entry below the diagonal");
  }
  // Solve a * b = 1 column by column, bottom row first.
  std::vector<std::vector<LaurentPoly>> b(n, std::vector<LaurentPoly>(n));
  for (std::size_t j = 0; j < n; ++j) {
    b[j][j] = 1;
    for (std::size_t i = j; i-- > 0;) {
      LaurentPoly s;
      for (std::size_t k = i + 1; k <= j; ++k)
        if (!a[i][k].is_zero() && !b[k][j].is_zero()) s += a[i][k] * b[k][j];
      b[i][j] = -s;
    }
  }
  return b;
}

}  // namespace icanon
