#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace icanon {

/// Raised by divide_exact when the remainder is nonzero.
struct NotDivisible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Integer Laurent polynomial in one variable q.
///
/// Stored sparsely as exponent -> coefficient with no zero coefficients, so
/// equality of values is equality of the maps.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;
  using Terms = std::map<int, Coeff>;

  LaurentPoly() = default;
  LaurentPoly(Coeff c) {  // NOLINT: implicit from integer constants
    if (c != 0) terms_[0] = c;
  }

  static LaurentPoly monomial(int exponent, Coeff c = 1);
  static LaurentPoly q() { return monomial(1); }
  static LaurentPoly q_inv() { return monomial(-1); }
  static LaurentPoly from_pairs(const std::vector<std::pair<int, Coeff>>& pairs);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coeff(int exponent) const;
  int min_degree() const;
  int max_degree() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  /// Returns q^k times this polynomial.
  LaurentPoly shifted(int k) const;

  /// Every exponent lies in [lo, hi].
  bool degrees_within(int lo, int hi) const;

  /// Coefficients as a list of [exponent, coefficient] pairs, ascending exponent.
  std::vector<std::pair<int, Coeff>> to_pairs() const;

  std::string to_string() const;

 private:
  void add_term(int e, Coeff c);
  Terms terms_;
};

/// q -> q^{-1}.
LaurentPoly bar(const LaurentPoly& p);

/// [s] = q^{s-1} + q^{s-3} + ... + q^{1-s}; s must be positive.
LaurentPoly quantum_integer(int s);

/// Exact quotient num / den; throws NotDivisible if den does not divide num.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

/// Value at q = 1 (sum of coefficients).
LaurentPoly::Coeff eval_at_one(const LaurentPoly& p);

}  // namespace icanon
