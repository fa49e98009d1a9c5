#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace icanon {

/// Exact element of (1/2)Z, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInt integer(int v) { return from_twice(2 * v); }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool is_half_odd() const { return twice_ % 2 != 0; }
  /// Integer value; only meaningful when is_integer().
  constexpr int as_int() const { return twice_ / 2; }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
  friend constexpr HalfInt operator*(int k, HalfInt a) { return from_twice(k * a.twice_); }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  std::string to_string() const;

  /// Parses "3", "-5/2", "1/2" (also accepts the unicode minus sign).
  /// Throws std::invalid_argument on malformed text or values outside (1/2)Z.
  static HalfInt parse(const std::string& text);

 private:
  int twice_ = 0;
};

/// Parses a comma separated list of HalfInt values; empty text gives an empty list.
std::vector<HalfInt> parse_halfint_list(const std::string& text);

std::string join_halfints(const std::vector<HalfInt>& values);

}  // namespace icanon
