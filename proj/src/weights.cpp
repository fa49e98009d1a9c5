#include "icanon/weights.hpp"

#include <algorithm>
#include <stdexcept>

namespace icanon {

namespace {

void check_shape(const Weight& a, const Weight& b) {
  if (a.m() != b.m() || a.n() != b.n()) throw std::invalid_argument("weight rank mismatch");
}

Weight unit(int m, int n, int slot, int coeff) {
  Weight w = Weight::zero(m, n);
  std::vector<HalfInt> c = w.coords();
  c[slot] = HalfInt::integer(coeff);
  return {m, n, std::move(c)};
}

Weight half_sum(int m, int n, const std::vector<Weight>& roots) {
  Weight s = Weight::zero(m, n);
  for (const auto& r : roots) s = s + r;
  std::vector<HalfInt> c;
  for (HalfInt x : s.coords()) c.push_back(HalfInt::from_twice(x.as_int()));
  return {m, n, std::move(c)};
}

/// lambda_f up to the constant rho: (f(i) ; -f(kbar)).
Weight shifted_lambda(const WeightFunction& f) {
  std::vector<HalfInt> c(f.values());
  for (int k = 0; k < f.n(); ++k) c[f.m() + k] = -c[f.m() + k];
  return {f.m(), f.n(), std::move(c)};
}

/// Prefix-sum solution of v = sum_j c_j alpha_j for the simple roots
/// (-first coordinate, then consecutive differences).
std::vector<HalfInt> prefix_coordinates(const Weight& v) {
  const int r = v.m() + v.n();
  std::vector<HalfInt> c;
  if (r == 0) return c;
  HalfInt s;
  for (HalfInt x : v.coords()) s -= x;
  c.push_back(s);
  for (int j = 0; j + 1 < r; ++j) {
    s += v[j];
    c.push_back(s);
  }
  return c;
}

}  // namespace

// ---------------------------------------------------------------- Weight

Weight::Weight(int m, int n, std::vector<HalfInt> coords) : m_(m), n_(n), coords_(std::move(coords)) {
  if (m < 0 || n < 0) throw std::invalid_argument("negative rank");
  if (static_cast<int>(coords_.size()) != m + n)
    throw std::invalid_argument("weight needs " + std::to_string(m + n) + " coordinates");
}

Weight Weight::parse(int m, int n, const std::string& text) {
  const auto semi = text.find(';');
  std::vector<HalfInt> eps = parse_halfint_list(text.substr(0, semi));
  std::vector<HalfInt> del;
  if (semi != std::string::npos) del = parse_halfint_list(text.substr(semi + 1));
  if (static_cast<int>(eps.size()) != m || static_cast<int>(del.size()) != n)
    throw std::invalid_argument("'" + text + "' does not have shape " + std::to_string(m) + ";" +
                                std::to_string(n));
  eps.insert(eps.end(), del.begin(), del.end());
  return {m, n, std::move(eps)};
}

std::optional<Mode> Weight::weight_class() const {
  if (std::all_of(coords_.begin(), coords_.end(), [](HalfInt x) { return x.is_integer(); })) return Mode::Iota;
  if (std::all_of(coords_.begin(), coords_.end(), [](HalfInt x) { return x.is_half_odd(); })) return Mode::Jota;
  return std::nullopt;
}

Weight Weight::operator+(const Weight& o) const {
  check_shape(*this, o);
  Weight r = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] += o.coords_[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& x : r.coords_) x = -x;
  return r;
}

Weight Weight::operator*(int k) const {
  Weight r = *this;
  for (auto& x : r.coords_) x = k * x;
  return r;
}

std::string Weight::to_string() const {
  std::string s;
  for (int i = 0; i < m_; ++i) s += (i ? "," : "") + coords_[i].to_string();
  s += ";";
  for (int k = 0; k < n_; ++k) s += (k ? "," : "") + coords_[m_ + k].to_string();
  return s;
}

HalfInt form(const Weight& a, const Weight& b) {
  check_shape(a, b);
  // Products of half-integers are quarter-integers in general; callers only
  // pair weights with integral roots, so accumulate in twice-units.
  long long twice = 0;
  for (int i = 0; i < a.m() + a.n(); ++i) {
    const long long prod4 = static_cast<long long>(a[i].twice()) * b[i].twice();  // 4 * a_i b_i
    if (prod4 % 2 != 0) throw std::invalid_argument("form value outside (1/2)Z");
    twice += (i < a.m() ? 1 : -1) * prod4 / 2;
  }
  return HalfInt::from_twice(static_cast<int>(twice));
}

// ---------------------------------------------------------------- RootDatum

RootDatum::RootDatum(int m, int n) : m_(m), n_(n) {
  if (m < 0 || n < 0) throw std::invalid_argument("negative rank");
  auto eps = [&](int i, int c) { return unit(m, n, i, c); };
  auto del = [&](int k, int c) { return unit(m, n, m + k, c); };
  std::vector<Weight> odd;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      even_positive_.push_back(eps(i, 1) + eps(j, -1));
      even_positive_.push_back(eps(i, -1) + eps(j, -1));
    }
    even_positive_.push_back(eps(i, -1));
  }
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) {
      even_positive_.push_back(del(k, 1) + del(l, -1));
      even_positive_.push_back(del(k, -1) + del(l, -1));
    }
    even_positive_.push_back(del(k, -2));
    odd.push_back(del(k, -1));
    for (int i = 0; i < m; ++i) {
      odd.push_back(eps(i, 1) + del(k, -1));
      odd.push_back(eps(i, -1) + del(k, -1));
    }
  }
  positive_ = even_positive_;
  positive_.insert(positive_.end(), odd.begin(), odd.end());

  // Simple roots: minus the first coordinate, then consecutive differences.
  const int r = m + n;
  if (r > 0) simple_.push_back(unit(m, n, 0, -1));
  for (int j = 0; j + 1 < r; ++j) simple_.push_back(unit(m, n, j, 1) + unit(m, n, j + 1, -1));

  if (m > 0) even_simple_.push_back(eps(0, -1));
  for (int i = 0; i + 1 < m; ++i) even_simple_.push_back(eps(i, 1) + eps(i + 1, -1));
  if (n > 0) even_simple_.push_back(del(0, -2));
  for (int k = 0; k + 1 < n; ++k) even_simple_.push_back(del(k, 1) + del(k + 1, -1));

  rho0_ = half_sum(m, n, even_positive_);
  rho_ = rho0_ - half_sum(m, n, odd);
}

std::vector<HalfInt> RootDatum::simple_root_coordinates(const Weight& v) const {
  if (v.m() != m_ || v.n() != n_) throw std::invalid_argument("weight rank mismatch");
  return prefix_coordinates(v);
}

Weight RootDatum::even_simple_root(Generator s) const {
  s.check(m_, n_);
  switch (s.kind) {
    case Generator::Kind::B0: return unit(m_, n_, 0, -1);
    case Generator::Kind::A: return unit(m_, n_, s.index - 1, 1) + unit(m_, n_, s.index, -1);
    case Generator::Kind::C: return unit(m_, n_, m_ + s.index - 1, 1) + unit(m_, n_, m_ + s.index, -1);
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------- dictionary

WeightFunction f_from_lambda(const Weight& lam, const RootDatum& rd) {
  if (lam.m() != rd.m() || lam.n() != rd.n()) throw std::invalid_argument("weight rank mismatch");
  const auto cls = lam.weight_class();
  if (!cls) throw UnsupportedWeightClass("weight " + lam.to_string() + " is neither integral nor half-integral");
  const Weight x = lam + rd.rho();
  std::vector<HalfInt> v(x.coords());
  for (int k = 0; k < lam.n(); ++k) v[lam.m() + k] = -v[lam.m() + k];
  return WeightFunction(lam.m(), lam.n(), *cls, std::move(v));
}

Weight lambda_from_f(const WeightFunction& f, const RootDatum& rd) {
  if (f.m() != rd.m() || f.n() != rd.n()) throw std::invalid_argument("weight function rank mismatch");
  for (HalfInt v : f.values())
    if (!value_matches_mode(v, f.mode()))
      throw UnsupportedWeightClass("weight function " + f.to_string() + " does not match its mode");
  return shifted_lambda(f) - rd.rho();
}

bool bruhat_leq(const WeightFunction& g, const WeightFunction& f) {
  if (g.m() != f.m() || g.n() != f.n()) throw std::invalid_argument("bruhat_leq: rank mismatch");
  if (g.mode() != f.mode()) throw UnsupportedWeightClass("bruhat_leq: mode mismatch");
  for (HalfInt c : prefix_coordinates(shifted_lambda(f) - shifted_lambda(g)))
    if (!c.is_integer() || c < HalfInt()) return false;
  return true;
}

bool bruhat_leq(const WeightFunction& g, const WeightFunction& f, const RootDatum& rd) {
  if (f.m() != rd.m() || f.n() != rd.n()) throw std::invalid_argument("bruhat_leq: rank mismatch");
  return bruhat_leq(g, f);
}

HalfInt bruhat_height(const WeightFunction& f) {
  HalfInt h;
  for (HalfInt c : prefix_coordinates(shifted_lambda(f))) h += c;
  return h;
}

Weight weyl_act(const WeylElement& w, const Weight& x) {
  if (w.m() != x.m() || w.n() != x.n()) throw std::invalid_argument("weyl_act: rank mismatch");
  std::vector<HalfInt> c(x.coords().size());
  for (int i = 0; i < x.m(); ++i) {
    const int j = w.signed_perm()[i];
    c[i] = j > 0 ? x[j - 1] : -x[-j - 1];
  }
  for (int k = 0; k < x.n(); ++k) c[x.m() + k] = x[x.m() + w.perm()[k] - 1];
  return {x.m(), x.n(), std::move(c)};
}

Weight dot_action(const WeylElement& w, const Weight& lam, const RootDatum& rd) {
  return weyl_act(w, lam + rd.rho0()) - rd.rho0();
}

bool is_antidominant_zeta(const Weight& lam, const ParabolicDatum& p, const RootDatum& rd) {
  const Weight x = lam + rd.rho0();
  for (Generator s : p.generators()) {
    const Weight alpha = rd.even_simple_root(s);
    const int aa = form(alpha, alpha).as_int();  // 1, 2 or -2
    const HalfInt pairing = HalfInt::from_twice(2 * form(x, alpha).twice() / aa);
    if (pairing.is_integer() && pairing > HalfInt()) return false;
  }
  return true;
}

bool is_typical(const WeightFunction& f) {
  for (HalfInt e : f.eps())
    for (HalfInt d : f.delta())
      if (e == d || e == -d) return false;
  return true;
}

}  // namespace icanon
