#pragma once

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "icanon/halfint.hpp"

namespace icanon {

/// Which Fock index set is in use: iota has half-integer values (integer
/// weights), jota has integer values (half-integer weights).
enum class Mode { Iota, Jota };

std::string mode_name(Mode mode);
Mode parse_mode(const std::string& text);
bool value_matches_mode(HalfInt v, Mode mode);

/// Weight, weight-function or window data of the wrong class for the mode.
struct UnsupportedWeightClass : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A function {1..m, 1bar..nbar} -> values; slots 0..m-1 are the
/// epsilon slots, slots m..m+n-1 the delta slots.
class WeightFunction {
 public:
  WeightFunction() = default;
  WeightFunction(int m, int n, Mode mode, std::vector<HalfInt> values);

  /// Text form "v1,...,vm;w1,...,wn".
  static WeightFunction parse(int m, int n, Mode mode, const std::string& text);

  int m() const { return m_; }
  int n() const { return n_; }
  Mode mode() const { return mode_; }
  int size() const { return m_ + n_; }
  HalfInt operator[](int slot) const { return values_[slot]; }
  const std::vector<HalfInt>& values() const { return values_; }
  std::span<const HalfInt> eps() const { return {values_.data(), static_cast<std::size_t>(m_)}; }
  std::span<const HalfInt> delta() const {
    return {values_.data() + m_, static_cast<std::size_t>(n_)};
  }

  WeightFunction with_value(int slot, HalfInt v) const;

  std::string to_string() const;

  friend auto operator<=>(const WeightFunction&, const WeightFunction&) = default;
  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

 private:
  int m_ = 0;
  int n_ = 0;
  Mode mode_ = Mode::Iota;
  std::vector<HalfInt> values_;
};

}  // namespace icanon
