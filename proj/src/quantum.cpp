#include "icanon/quantum.hpp"

#include <algorithm>
#include <optional>

namespace icanon {

namespace {

const HalfInt kHalf = HalfInt::from_twice(1);
const HalfInt kOne = HalfInt::integer(1);

bool is_v_slot(int slot, int m) { return slot < m; }

/// K_i eigenvalue exponent on a single factor value r.
int k_exponent(bool v_factor, HalfInt node, HalfInt r) {
  const int e = (r == node - kHalf ? 1 : 0) - (r == node + kHalf ? 1 : 0);
  return v_factor ? e : -e;
}

/// Image value of E_i (raise == false) or F_i (raise == true) on one factor, if nonzero.
std::optional<HalfInt> shift_value(bool v_factor, bool is_f, HalfInt node, HalfInt r) {
  if (v_factor) {
    if (!is_f && r == node + kHalf) return r - kOne;
    if (is_f && r == node - kHalf) return r + kOne;
  } else {
    if (!is_f && r == node - kHalf) return r + kOne;
    if (is_f && r == node + kHalf) return r - kOne;
  }
  return std::nullopt;
}

}  // namespace

bool node_in_window(HalfInt node, const Window& w) {
  return value_matches_mode(node + kHalf, w.mode()) && w.contains(node - kHalf) && w.contains(node + kHalf);
}

std::vector<HalfInt> window_nodes(const Window& w) {
  std::vector<HalfInt> out;
  for (HalfInt i = w.lo() + kHalf; i + kHalf <= w.hi(); i += kOne) out.push_back(i);
  return out;
}

FockVector act_chevalley(Chevalley g, HalfInt node, const FockVector& v) {
  FockVector r(v.m(), v.n(), v.window());
  const int m = v.m();
  for (const auto& [f, c] : v.terms()) {
    const auto& vals = f.values();
    const int slots = static_cast<int>(vals.size());
    if (g == Chevalley::K || g == Chevalley::Kinv) {
      int e = 0;
      for (int p = 0; p < slots; ++p) e += k_exponent(is_v_slot(p, m), node, vals[p]);
      r.add(f, c.shifted(g == Chevalley::K ? e : -e));
      continue;
    }
    const bool is_f = g == Chevalley::F;
    for (int p = 0; p < slots; ++p) {
      const auto moved = shift_value(is_v_slot(p, m), is_f, node, vals[p]);
      if (!moved) continue;
      // E: K^{-1} on every later factor; F: K on every earlier factor.
      int e = 0;
      if (is_f)
        for (int q = 0; q < p; ++q) e += k_exponent(is_v_slot(q, m), node, vals[q]);
      else
        for (int q = p + 1; q < slots; ++q) e -= k_exponent(is_v_slot(q, m), node, vals[q]);
      r.add(f.with_value(p, *moved), c.shifted(e));
    }
  }
  return r;
}

FockVector act_iquantum(IGen g, HalfInt i, const FockVector& v) {
  using C = Chevalley;
  const LaurentPoly q = LaurentPoly::q();
  switch (g) {
    case IGen::e: return act_chevalley(C::E, i, v) + act_chevalley(C::Kinv, i, act_chevalley(C::F, -i, v));
    case IGen::f: return act_chevalley(C::F, i, act_chevalley(C::Kinv, -i, v)) + act_chevalley(C::E, -i, v);
    case IGen::k: return act_chevalley(C::K, i, act_chevalley(C::Kinv, -i, v));
    case IGen::kinv: return act_chevalley(C::Kinv, i, act_chevalley(C::K, -i, v));
    case IGen::t: {
      const HalfInt z = HalfInt::integer(0);
      return act_chevalley(C::E, z, v) + q * act_chevalley(C::F, z, act_chevalley(C::Kinv, z, v)) +
             act_chevalley(C::Kinv, z, v);
    }
  }
  throw std::logic_error("unknown coideal generator");
}

FockVector act_iquantum_barred(IGen g, HalfInt i, const FockVector& v) {
  using C = Chevalley;
  const LaurentPoly qi = LaurentPoly::q_inv();
  switch (g) {
    case IGen::e: return act_chevalley(C::E, i, v) + act_chevalley(C::K, i, act_chevalley(C::F, -i, v));
    case IGen::f: return act_chevalley(C::F, i, act_chevalley(C::K, -i, v)) + act_chevalley(C::E, -i, v);
    case IGen::k: return act_chevalley(C::Kinv, i, act_chevalley(C::K, -i, v));
    case IGen::kinv: return act_chevalley(C::K, i, act_chevalley(C::Kinv, -i, v));
    case IGen::t: {
      const HalfInt z = HalfInt::integer(0);
      return act_chevalley(C::E, z, v) + qi * act_chevalley(C::F, z, act_chevalley(C::K, z, v)) +
             act_chevalley(C::K, z, v);
    }
  }
  throw std::logic_error("unknown coideal generator");
}

std::vector<std::pair<IGen, HalfInt>> iquantum_generators(const Window& w) {
  std::vector<std::pair<IGen, HalfInt>> out;
  for (HalfInt i : window_nodes(w)) {
    if (i < HalfInt::integer(0) || !node_in_window(-i, w)) continue;
    if (i == HalfInt::integer(0)) {
      out.emplace_back(IGen::t, i);
      continue;
    }
    out.emplace_back(IGen::e, i);
    out.emplace_back(IGen::f, i);
    out.emplace_back(IGen::k, i);
  }
  return out;
}

std::string igen_name(IGen g, HalfInt i) {
  switch (g) {
    case IGen::e: return "e_" + i.to_string();
    case IGen::f: return "f_" + i.to_string();
    case IGen::k: return "k_" + i.to_string();
    case IGen::kinv: return "k_" + i.to_string() + "^-1";
    case IGen::t: return "t";
  }
  return "?";
}

// ---------------------------------------------------------------- TensorBar

TensorBar::TensorBar(int m, int n, Window window, InvolutionKind kind)
    : m_(m), n_(n), window_(window), kind_(kind), psi_memo_(m + n + 1) {
  if (m < 0 || n < 0) throw std::invalid_argument("negative rank");
  if (static_cast<int>(window_.values().size()) < m + n)
    throw std::invalid_argument("window " + window_.to_string() + " has fewer than m+n values");
  if (kind == InvolutionKind::Coideal && !(window_.lo() == -window_.hi()))
    throw std::invalid_argument("the coideal bar involution needs a symmetric window");
}

FockVector TensorBar::prefix_zero(int p) const {
  const int mp = std::min(p, m_);
  return FockVector(mp, p - mp, window_);
}

FockVector TensorBar::tensor_append(const FockVector& u, HalfInt value, int p) const {
  FockVector r = prefix_zero(p + 1);
  const int mp = std::min(p + 1, m_);
  for (const auto& [h, c] : u.terms()) {
    std::vector<HalfInt> vals = h.values();
    vals.push_back(value);
    r.add(WeightFunction(mp, p + 1 - mp, window_.mode(), std::move(vals)), c);
  }
  return r;
}

const FockVector& TensorBar::of_monomial(const WeightFunction& f) {
  if (f.m() != m_ || f.n() != n_) throw std::invalid_argument("TensorBar: monomial shape mismatch");
  window_.require(f);
  return level_monomial(m_ + n_, f);
}

FockVector TensorBar::apply(const FockVector& v) {
  FockVector r(m_, n_, window_);
  for (const auto& [f, c] : v.terms()) r += bar(c) * of_monomial(f);
  return r;
}

const FockVector& TensorBar::level_monomial(int p, const WeightFunction& g) {
  auto& memo = psi_memo_[p];
  if (auto it = memo.find(g); it != memo.end()) return it->second;
  FockVector result = prefix_zero(p);
  if (p == 0) {
    result.add(g, 1);
  } else {
    std::vector<HalfInt> head(g.values().begin(), g.values().end() - 1);
    const HalfInt r = g.values().back();
    const int mp = std::min(p - 1, m_);
    const FockVector u = level_monomial(p - 1, WeightFunction(mp, p - 1 - mp, window_.mode(), std::move(head)));
    for (HalfInt s : window_.values()) result += tensor_append(c_apply(p - 1, r, s, u), s, p - 1);
  }
  return memo.emplace(g, std::move(result)).first->second;
}

FockVector TensorBar::c_apply(int p, HalfInt r, HalfInt s, const FockVector& u) {
  if (r == s) return u;
  FockVector out = prefix_zero(p);
  const bool v_factor = p < m_;
  if (v_factor ? !(r < s) : !(s < r)) return out;  // C_{r,s} vanishes off the lowering direction
  for (const auto& [h, c] : u.terms()) out += c * c_monomial(p, r, s, h);
  return out;
}

const FockVector& TensorBar::c_monomial(int p, HalfInt r, HalfInt s, const WeightFunction& g) {
  CKey key{p, r, s, g};
  if (auto it = c_memo_.find(key); it != c_memo_.end()) return it->second;

  const bool vx = p < m_;
  const HalfInt j = vx ? s - kHalf : s + kHalf;  // E_j x_s = x_{s'}
  const HalfInt sp = vx ? s - kOne : s + kOne;
  FockVector M = prefix_zero(p);
  M.add(g, 1);
  auto qpow = [](int e) { return LaurentPoly::monomial(e); };

  FockVector res = prefix_zero(p);
  if (kind_ == InvolutionKind::Quantum) {
    // [1 (x) E_j, Theta] = Theta (E_j (x) K_j) - (E_j (x) K_j^{-1}) Theta
    res += qpow(k_exponent(vx, j, r)) * c_apply(p, r, sp, act_chevalley(Chevalley::E, j, M));
    res -= qpow(-k_exponent(vx, j, sp)) * act_chevalley(Chevalley::E, j, c_apply(p, r, sp, M));
  } else {
    // [1 (x) E_j, Theta] = Theta (A (x) K_j) - (A (x) K_j^{-1}) Theta
    //                      + Theta (B (x) P) - (B' (x) P') Theta,
    // with P, P' = (powers of q, K_j) times F_{-j}.
    const HalfInt zero = HalfInt::integer(0);
    IGen a_gen;
    HalfInt a_idx = j;
    std::optional<std::pair<IGen, HalfInt>> b_op, bp_op;
    int p_pre = 0, p_post = 0, p_scalar = 0, pp_pre = 0, pp_post = 0, pp_scalar = 0;
    if (zero < j) {  // e_j;  P = K_j F_{-j},  P' = K_j^{-1} F_{-j}
      a_gen = IGen::e;
      b_op = {IGen::k, j};
      bp_op = {IGen::kinv, j};
      p_post = 1;
      pp_post = -1;
    } else if (j < zero) {  // f_i, i = -j;  P = F_i K_j,  P' = F_i K_j^{-1}
      a_gen = IGen::f;
      a_idx = -j;
      b_op = {IGen::kinv, -j};
      bp_op = {IGen::k, -j};
      p_pre = 1;
      pp_pre = -1;
    } else {  // t;  P = q^{-1} F_0 K_0,  P' = q F_0 K_0^{-1}
      a_gen = IGen::t;
      p_pre = 1;
      p_scalar = -1;
      pp_pre = -1;
      pp_scalar = 1;
    }
    auto apply_b = [&](const std::optional<std::pair<IGen, HalfInt>>& op, const FockVector& v) {
      return op ? act_iquantum(op->first, op->second, v) : v;
    };
    res += qpow(k_exponent(vx, j, r)) * c_apply(p, r, sp, act_iquantum(a_gen, a_idx, M));
    res -= qpow(-k_exponent(vx, j, sp)) * act_iquantum(a_gen, a_idx, c_apply(p, r, sp, M));
    if (auto a = shift_value(vx, true, -j, r)) {
      const int e = p_scalar + p_pre * k_exponent(vx, j, r) + p_post * k_exponent(vx, j, *a);
      res += qpow(e) * c_apply(p, *a, sp, apply_b(b_op, M));
    }
    for (HalfInt b : window_.values()) {
      const auto to = shift_value(vx, true, -j, b);
      if (!to || !(*to == sp)) continue;
      const int e = pp_scalar + pp_pre * k_exponent(vx, j, b) + pp_post * k_exponent(vx, j, sp);
      res -= qpow(e) * apply_b(bp_op, c_apply(p, r, b, M));
    }
  }
  return c_memo_.emplace(std::move(key), std::move(res)).first->second;
}

// ---------------------------------------------------------------- window operators

FockVector WindowOperator::apply(const FockVector& v) const {
  FockVector r(m, n, window);
  for (const auto& [f, c] : v.terms()) {
    auto it = action.find(f);
    if (it == action.end()) throw WindowOverflow("operator undefined on M[" + f.to_string() + "]");
    r += c * it->second;
  }
  return r;
}

WindowOperator WindowOperator::bar_conjugate() const {
  WindowOperator r = *this;
  for (auto& [f, v] : r.action) v = v.bar_coefficients();
  return r;
}

WindowOperator GradedOperator::total() const {
  WindowOperator r;
  bool first = true;
  for (const auto& [deg, op] : pieces) {
    if (first) {
      r = op;
      first = false;
      continue;
    }
    for (const auto& [f, v] : op.action) {
      auto [it, inserted] = r.action.try_emplace(f, v);
      if (!inserted) it->second += v;
    }
  }
  return r;
}

const WindowOperator* GradedOperator::piece(const std::vector<int>& degree) const {
  auto it = pieces.find(degree);
  return it == pieces.end() ? nullptr : &it->second;
}

std::vector<int> weight_degree(const WeightFunction& from, const WeightFunction& to, int first_slot,
                               const std::vector<HalfInt>& nodes) {
  // nu_r = (wt(from) - wt(to))_r;  coefficient of alpha_i = sum_{r < i} nu_r.
  std::map<HalfInt, int> nu;
  auto accumulate = [&](const WeightFunction& f, int sign) {
    for (int p = first_slot; p < static_cast<int>(f.size()); ++p)
      nu[f[p]] += (p < f.m() ? 1 : -1) * sign;
  };
  accumulate(from, 1);
  accumulate(to, -1);
  std::vector<int> deg;
  deg.reserve(nodes.size());
  int total = 0;
  for (const auto& [r, c] : nu) total += c;
  if (total != 0) throw std::logic_error("weight difference outside the root lattice");
  for (HalfInt i : nodes) {
    int c = 0;
    for (const auto& [r, x] : nu)
      if (r < i) c += x;
    deg.push_back(c);
  }
  for (const auto& [r, x] : nu)
    if (x != 0 && (nodes.empty() || r < nodes.front() - kHalf || nodes.back() + kHalf < r))
      throw std::logic_error("weight difference outside the window nodes");
  return deg;
}

namespace {

void add_graded(GradedOperator& g, const std::vector<int>& deg, int degree_bound, int m, int n,
                const Window& w, const WeightFunction& f, const WeightFunction& h, const LaurentPoly& c) {
  int height = 0;
  for (int x : deg) height += x;
  if (height > degree_bound)
    throw NonConvergence("nonzero piece of height " + std::to_string(height) + " exceeds degree bound " +
                         std::to_string(degree_bound) + " on window " + w.to_string());
  auto [it, inserted] = g.pieces.try_emplace(deg);
  if (inserted) {
    it->second.m = m;
    it->second.n = n;
    it->second.window = w;
  }
  auto [jt, fresh] = it->second.action.try_emplace(f, FockVector(m, n, w));
  jt->second.add(h, c);
}

/// Split a vector-valued map into graded pieces; every monomial gets an
/// entry in the degree-0 piece so total() is defined on the whole window.
GradedOperator grade(int m, int n, const Window& w, int first_slot, int degree_bound,
                     const std::map<WeightFunction, FockVector>& values) {
  GradedOperator g;
  g.nodes = window_nodes(w);
  const std::vector<int> zero(g.nodes.size(), 0);
  for (const auto& [f, v] : values) {
    add_graded(g, zero, degree_bound, m, n, w, f, f, 0);
    for (const auto& [h, c] : v.terms())
      add_graded(g, weight_degree(f, h, first_slot, g.nodes), degree_bound, m, n, w, f, h, c);
  }
  return g;
}

std::pair<WeightFunction, WeightFunction> split_monomial(const WeightFunction& f, int split, int m1, int m2) {
  const auto& v = f.values();
  const int n1 = split - m1;
  std::vector<HalfInt> a(v.begin(), v.begin() + split), b(v.begin() + split, v.end());
  return {WeightFunction(m1, n1, f.mode(), a), WeightFunction(m2, static_cast<int>(b.size()) - m2, f.mode(), b)};
}

FockVector tensor_general(const FockVector& x, const FockVector& y, int m, int n) {
  FockVector r(m, n, x.window());
  for (const auto& [a, c] : x.terms())
    for (const auto& [b, d] : y.terms()) {
      std::vector<HalfInt> vals = a.values();
      vals.insert(vals.end(), b.values().begin(), b.values().end());
      r.add(WeightFunction(m, n, a.mode(), std::move(vals)), c * d);
    }
  return r;
}

}  // namespace

GradedOperator compute_theta(int m, int n, const Window& w, int split, int degree_bound) {
  if (split < 0 || split > m + n) throw std::invalid_argument("compute_theta: split out of range");
  const int m1 = std::min(split, m), n1 = split - m1, m2 = m - m1, n2 = n - n1;
  TensorBar psi_t(m, n, w, InvolutionKind::Quantum);
  TensorBar psi_a(m1, n1, w, InvolutionKind::Quantum);
  TensorBar psi_b(m2, n2, w, InvolutionKind::Quantum);
  std::map<WeightFunction, FockVector> values;
  for (const auto& f : w.basis(m, n)) {
    const auto [a, b] = split_monomial(f, split, m1, m2);
    values.emplace(f, psi_t.apply(tensor_general(psi_a.of_monomial(a), psi_b.of_monomial(b), m, n)));
  }
  return grade(m, n, w, split, degree_bound, values);
}

GradedOperator compute_upsilon(int m, int n, const Window& w, int degree_bound) {
  TensorBar psi(m, n, w, InvolutionKind::Quantum);
  TensorBar psi_i(m, n, w, InvolutionKind::Coideal);
  std::map<WeightFunction, FockVector> values;
  for (const auto& f : w.basis(m, n)) values.emplace(f, psi_i.apply(psi.of_monomial(f)));
  return grade(m, n, w, 0, degree_bound, values);
}

int default_degree_bound(const Window& w) { return static_cast<int>(window_nodes(w).size()) + 2; }

namespace {

template <class Solve>
GradedOperator with_doubling(const Window& w, Solve solve) {
  for (int bound = default_degree_bound(w);; bound *= 2) {
    try {
      return solve(bound);
    } catch (const NonConvergence&) {
      if (bound > 1 << 16) throw;
    }
  }
}

}  // namespace

GradedOperator compute_theta(int m, int n, const Window& w, int split) {
  return with_doubling(w, [&](int b) { return compute_theta(m, n, w, split, b); });
}

GradedOperator compute_upsilon(int m, int n, const Window& w) {
  return with_doubling(w, [&](int b) { return compute_upsilon(m, n, w, b); });
}

FockVector tensor(const FockVector& x, const FockVector& y) {
  if (x.n() != 0 || y.m() != 0) throw std::invalid_argument("tensor: expects a V-part and a W-part");
  if (!(x.window() == y.window())) throw std::invalid_argument("tensor: window mismatch");
  return tensor_general(x, y, x.m(), y.n());
}

FockVector theta_i_apply(const FockVector& x, const FockVector& y) {
  TensorBar psi_v(x.m(), 0, x.window(), InvolutionKind::Coideal);
  TensorBar psi_w(0, y.n(), y.window(), InvolutionKind::Quantum);
  TensorBar psi_t(x.m(), y.n(), x.window(), InvolutionKind::Coideal);
  return psi_t.apply(tensor(psi_v.apply(x), psi_w.apply(y)));
}

}  // namespace icanon
