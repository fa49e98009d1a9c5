#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "icanon/halfint.hpp"
#include "icanon/laurent.hpp"
#include "icanon/weight_function.hpp"

namespace icanon {

/// An operator needed a monomial whose values leave the active window.
struct WindowOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite value range [lo, hi] of the given mode; truncates the Fock space.
class Window {
 public:
  Window() = default;
  Window(HalfInt lo, HalfInt hi, Mode mode);
  /// [-radius, radius]; the radius must belong to the mode.
  static Window symmetric(HalfInt radius, Mode mode) { return {-radius, radius, mode}; }

  HalfInt lo() const { return lo_; }
  HalfInt hi() const { return hi_; }
  Mode mode() const { return mode_; }
  bool contains(HalfInt v) const { return lo_ <= v && v <= hi_; }
  bool contains(const WeightFunction& f) const;
  /// The admissible values lo, lo+1, ..., hi.
  std::vector<HalfInt> values() const;
  /// Every weight function of shape (m, n) with values in the window, sorted.
  std::vector<WeightFunction> basis(int m, int n) const;
  /// Throws WindowOverflow unless f is inside.
  void require(const WeightFunction& f) const;
  /// Window widened by k steps on each side.
  Window widened(int k) const;

  std::string to_string() const;

  friend bool operator==(const Window&, const Window&) = default;

 private:
  HalfInt lo_ = HalfInt::from_twice(-1);
  HalfInt hi_ = HalfInt::from_twice(1);
  Mode mode_ = Mode::Iota;
};

/// Finitely supported LaurentPoly combination of monomials M_f, f in a window.
class FockVector {
 public:
  using Terms = std::map<WeightFunction, LaurentPoly>;

  FockVector() = default;
  FockVector(int m, int n, Window window);
  static FockVector monomial(int m, int n, const Window& window, const WeightFunction& f);

  int m() const { return m_; }
  int n() const { return n_; }
  const Window& window() const { return window_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LaurentPoly coefficient(const WeightFunction& f) const;

  /// Adds c * M_f (throws WindowOverflow for out-of-window f).
  void add(const WeightFunction& f, const LaurentPoly& c);

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const LaurentPoly& c, const FockVector& v);
  friend bool operator==(const FockVector& a, const FockVector& b) { return a.terms_ == b.terms_; }

  /// Coefficientwise bar (the anti-linear part of a bar involution).
  FockVector bar_coefficients() const;
  /// Every coefficient evaluated at q = 1.
  std::map<WeightFunction, LaurentPoly::Coeff> at_one() const;

  std::string to_string() const;

 private:
  void check_compatible(const FockVector& o) const;

  int m_ = 0;
  int n_ = 0;
  Window window_;
  Terms terms_;
};

}  // namespace icanon
