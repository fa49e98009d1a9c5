#include "icanon/barinv.hpp"

#include <deque>

#include "icanon/hecke.hpp"
#include "icanon/weights.hpp"

namespace icanon {

namespace {

void check_unitriangular(const WeightFunction& f, const FockVector& v) {
  if (v.coefficient(f) != LaurentPoly(1))
    throw ConventionError("bar image of M[" + f.to_string() + "] has diagonal coefficient " +
                          v.coefficient(f).to_string());
  for (const auto& [g, c] : v.terms())
    if (!(g == f) && !bruhat_leq(g, f))
      throw ConventionError("bar image of M[" + f.to_string() + "] contains M[" + g.to_string() +
                            "], which is not Bruhat-lower");
}

}  // namespace

FockVector bar_factor(const WeightFunction& f, const Window& w) {
  if (f.m() != 0 && f.n() != 0) throw std::invalid_argument("bar_factor expects a pure V-part or W-part");
  w.require(f);
  const auto [fm, tau] = antidominant_rep(f, ParabolicDatum::full(f.m(), f.n()));
  // f = f_- . tau^{-1}, and tau^{-1} is the minimal representative, so M_f = M_{f_-} H_{tau^{-1}}.
  return act_hecke(FockVector::monomial(f.m(), f.n(), w, fm), bar(HeckeElement::basis(tau.inverse())));
}

BarCache::BarCache(int m, int n, Window window)
    : m_(m), n_(n), window_(window), coideal_(m, n, window, InvolutionKind::Coideal) {}

const FockVector& BarCache::bar(const WeightFunction& f) {
  if (auto it = memo_.find(f); it != memo_.end()) return it->second;
  if (frozen_) throw std::logic_error("BarCache is frozen; M[" + f.to_string() + "] was not filled");
  FockVector v = coideal_.of_monomial(f);
  check_unitriangular(f, v);
  if (n_ == 0 && !(v == bar_factor(f, window_)))
    throw ConventionError("coideal and Hecke routes disagree on M[" + f.to_string() + "]");
  return memo_.emplace(f, std::move(v)).first->second;
}

const FockVector* BarCache::find(const WeightFunction& f) const {
  auto it = memo_.find(f);
  return it == memo_.end() ? nullptr : &it->second;
}

const FockVector& bar_full(const WeightFunction& f, BarCache& cache) { return cache.bar(f); }

FockVector bar_full(const FockVector& v, BarCache& cache) {
  FockVector r(cache.m(), cache.n(), cache.window());
  for (const auto& [f, c] : v.terms()) r += icanon::bar(c) * cache.bar(f);
  return r;
}

std::set<WeightFunction> support_closure(const WeightFunction& f, BarCache& cache, std::size_t cap) {
  std::set<WeightFunction> seen{f};
  std::deque<WeightFunction> todo{f};
  while (!todo.empty()) {
    const WeightFunction g = todo.front();
    todo.pop_front();
    for (const auto& [h, c] : cache.bar(g).terms()) {
      if (!seen.insert(h).second) continue;
      if (seen.size() > cap)
        throw ClosureCapExceeded("support closure of M[" + f.to_string() + "] exceeded " + std::to_string(cap) +
                                 " elements");
      todo.push_back(h);
    }
  }
  return seen;
}

bool interval_in_window(const WeightFunction& g, const WeightFunction& f, const Window& w) {
  if (!w.contains(g) || !w.contains(f)) return false;
  if (g == f) return true;
  if (!bruhat_leq(g, f)) return false;
  const RootDatum rd(f.m(), f.n());
  const auto d = rd.simple_root_coordinates(lambda_from_f(f, rd) - lambda_from_f(g, rd));
  const auto& simple = rd.simple_roots();
  for (int j = 0; j < f.size(); ++j) {
    HalfInt lo, hi;  // range of (lambda_h - lambda_g)_j over the box 0 <= c <= d
    for (std::size_t i = 0; i < simple.size(); ++i) {
      const HalfInt a = simple[i][j];
      const HalfInt x = HalfInt::from_twice(a.twice() * d[i].as_int());
      if (x < HalfInt()) lo += x;
      else hi += x;
    }
    const bool eps = j < f.m();
    const HalfInt vmin = eps ? g[j] + lo : g[j] - hi;
    const HalfInt vmax = eps ? g[j] + hi : g[j] - lo;
    if (!w.contains(vmin) || !w.contains(vmax)) return false;
  }
  return true;
}

}  // namespace icanon
