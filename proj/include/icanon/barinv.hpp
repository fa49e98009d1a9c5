#pragma once

#include <map>
#include <set>
#include <stdexcept>

#include "icanon/fock.hpp"
#include "icanon/quantum.hpp"

namespace icanon {

/// support_closure exceeded its step cap (signals an order or convention bug).
struct ClosureCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A computed bar image violated unitriangularity w.r.t. bruhat_leq.
struct ConventionError : std::logic_error {
  using std::logic_error::logic_error;
};

/// psi on the W-part (group S_n) or psi^iota on the V-part (group W_{B_m}) by
/// Hecke recursion: psi(M_{f_-} H_sigma) = M_{f_-} bar(H_sigma) with f_-
/// antidominant. The part is read from the shape: (m,0) V-part, (0,n) W-part.
FockVector bar_factor(const WeightFunction& f, const Window& w);

/// Memo of psi^iota(M_f) on V^{(x) m} (x) W^{(x) n} for one window.
/// Fill phase single-writer (bar()); after freeze() it is immutable and may be
/// read concurrently through find().
class BarCache {
 public:
  BarCache(int m, int n, Window window);

  int m() const { return m_; }
  int n() const { return n_; }
  Mode mode() const { return window_.mode(); }
  const Window& window() const { return window_; }

  /// psi^iota(M_f), computed on first use. Every value is checked to be
  /// unitriangular (ConventionError otherwise); for pure V-parts the Hecke
  /// route is computed as well and must agree.
  const FockVector& bar(const WeightFunction& f);
  /// Cached value or nullptr; safe for concurrent readers once frozen.
  const FockVector* find(const WeightFunction& f) const;
  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }
  std::size_t size() const { return memo_.size(); }

 private:
  int m_, n_;
  Window window_;
  TensorBar coideal_;
  std::map<WeightFunction, FockVector> memo_;
  bool frozen_ = false;
};

/// psi^iota(M_f) through the cache.
const FockVector& bar_full(const WeightFunction& f, BarCache& cache);
/// Anti-linear extension.
FockVector bar_full(const FockVector& v, BarCache& cache);

/// Smallest set containing f and closed under bar supports (all additions
/// strictly Bruhat-lower). Throws ClosureCapExceeded after `cap` insertions.
std::set<WeightFunction> support_closure(const WeightFunction& f, BarCache& cache, std::size_t cap = 200000);

/// Every h with g <= h <= f has all its values inside the window (box bound
/// from the simple-root coordinates of lambda_f - lambda_g). Then the window
/// computation of any coefficient indexed by (g, f) is exact.
bool interval_in_window(const WeightFunction& g, const WeightFunction& f, const Window& w);

}  // namespace icanon
