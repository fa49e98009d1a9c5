#include "icanon/fock.hpp"

#include <functional>

namespace icanon {

// ---------------------------------------------------------------- Window

Window::Window(HalfInt lo, HalfInt hi, Mode mode) : lo_(lo), hi_(hi), mode_(mode) {
  if (!value_matches_mode(lo, mode) || !value_matches_mode(hi, mode))
    throw UnsupportedWeightClass("window bounds " + lo.to_string() + ".." + hi.to_string() +
                                 " do not belong to mode " + mode_name(mode));
  if (hi < lo) throw std::invalid_argument("window has lo > hi");
}

bool Window::contains(const WeightFunction& f) const {
  if (f.mode() != mode_) return false;
  for (HalfInt v : f.values())
    if (!contains(v)) return false;
  return true;
}

std::vector<HalfInt> Window::values() const {
  std::vector<HalfInt> out;
  for (HalfInt v = lo_; v <= hi_; v += HalfInt::integer(1)) out.push_back(v);
  return out;
}

std::vector<WeightFunction> Window::basis(int m, int n) const {
  const auto vals = values();
  std::vector<WeightFunction> out;
  std::vector<HalfInt> cur(m + n);
  std::function<void(int)> rec = [&](int slot) {
    if (slot == m + n) {
      out.emplace_back(m, n, mode_, cur);
      return;
    }
    for (HalfInt v : vals) {
      cur[slot] = v;
      rec(slot + 1);
    }
  };
  rec(0);
  return out;  // lexicographic generation order is already sorted
}

void Window::require(const WeightFunction& f) const {
  if (!contains(f)) throw WindowOverflow("monomial M[" + f.to_string() + "] leaves window " + to_string());
}

Window Window::widened(int k) const { return {lo_ - HalfInt::integer(k), hi_ + HalfInt::integer(k), mode_}; }

std::string Window::to_string() const { return "[" + lo_.to_string() + "," + hi_.to_string() + "]"; }

// ---------------------------------------------------------------- FockVector

FockVector::FockVector(int m, int n, Window window) : m_(m), n_(n), window_(window) {
  if (m < 0 || n < 0) throw std::invalid_argument("negative rank");
  if (static_cast<int>(window_.values().size()) < m + n)
    throw std::invalid_argument("window " + window_.to_string() + " has fewer than m+n values");
}

FockVector FockVector::monomial(int m, int n, const Window& window, const WeightFunction& f) {
  FockVector v(m, n, window);
  v.add(f, 1);
  return v;
}

LaurentPoly FockVector::coefficient(const WeightFunction& f) const {
  auto it = terms_.find(f);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void FockVector::add(const WeightFunction& f, const LaurentPoly& c) {
  if (f.m() != m_ || f.n() != n_) throw std::invalid_argument("monomial shape mismatch");
  window_.require(f);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(f, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void FockVector::check_compatible(const FockVector& o) const {
  if (o.m_ != m_ || o.n_ != n_ || !(o.window_ == window_))
    throw std::invalid_argument("FockVector shape/window mismatch");
}

FockVector& FockVector::operator+=(const FockVector& o) {
  check_compatible(o);
  for (const auto& [f, c] : o.terms_) add(f, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  check_compatible(o);
  for (const auto& [f, c] : o.terms_) add(f, -c);
  return *this;
}

FockVector operator*(const LaurentPoly& c, const FockVector& v) {
  FockVector r(v.m_, v.n_, v.window_);
  if (c.is_zero()) return r;
  for (const auto& [f, x] : v.terms_) r.terms_.emplace_hint(r.terms_.end(), f, c * x);
  return r;
}

FockVector FockVector::bar_coefficients() const {
  FockVector r = *this;
  for (auto& [f, c] : r.terms_) c = bar(c);
  return r;
}

std::map<WeightFunction, LaurentPoly::Coeff> FockVector::at_one() const {
  std::map<WeightFunction, LaurentPoly::Coeff> out;
  for (const auto& [f, c] : terms_)
    if (auto v = eval_at_one(c); v != 0) out.emplace(f, v);
  return out;
}

std::string FockVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) s += " + ";
    first = false;
    const auto& [f, c] = *it;
    if (c != LaurentPoly(1)) s += "(" + c.to_string() + ")*";
    s += "M[" + f.to_string() + "]";
  }
  return s;
}

}  // namespace icanon
