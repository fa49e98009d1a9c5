#include "icanon/halfint.hpp"
#include "icanon/weight_function.hpp"

#include <charconv>
#include <stdexcept>

namespace icanon {

namespace {

std::string normalize_minus(std::string s) {
  // U+2212 MINUS SIGN, as it appears in hand-written weight strings.
  const std::string minus = "\xE2\x88\x92";
  for (std::size_t pos; (pos = s.find(minus)) != std::string::npos;) s.replace(pos, minus.size(), "-");
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

long long parse_int(const std::string& s, const std::string& whole) {
  long long v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last)
    throw std::invalid_argument("malformed number '" + whole + "'");
  return v;
}

}  // namespace

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

HalfInt HalfInt::parse(const std::string& raw) {
  const std::string text = trim(normalize_minus(raw));
  if (text.empty()) throw std::invalid_argument("empty number");
  const auto slash = text.find('/');
  if (slash == std::string::npos) return integer(static_cast<int>(parse_int(text, text)));
  const long long num = parse_int(trim(text.substr(0, slash)), text);
  const long long den = parse_int(trim(text.substr(slash + 1)), text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  if ((2 * num) % den != 0) throw std::invalid_argument("'" + text + "' is not in (1/2)Z");
  return from_twice(static_cast<int>(2 * num / den));
}

std::vector<HalfInt> parse_halfint_list(const std::string& text) {
  std::vector<HalfInt> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(HalfInt::parse(text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join_halfints(const std::vector<HalfInt>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ",";
    s += values[i].to_string();
  }
  return s;
}

std::string mode_name(Mode mode) { return mode == Mode::Iota ? "i" : "j"; }

Mode parse_mode(const std::string& text) {
  if (text == "i" || text == "iota") return Mode::Iota;
  if (text == "j" || text == "jota") return Mode::Jota;
  throw std::invalid_argument("unknown mode '" + text + "' (expected i or j)");
}

bool value_matches_mode(HalfInt v, Mode mode) {
  return mode == Mode::Iota ? v.is_half_odd() : v.is_integer();
}

WeightFunction::WeightFunction(int m, int n, Mode mode, std::vector<HalfInt> values)
    : m_(m), n_(n), mode_(mode), values_(std::move(values)) {
  if (m < 0 || n < 0) throw std::invalid_argument("negative rank");
  if (static_cast<int>(values_.size()) != m + n)
    throw std::invalid_argument("weight function needs " + std::to_string(m + n) + " values, got " +
                                std::to_string(values_.size()));
  for (HalfInt v : values_)
    if (!value_matches_mode(v, mode))
      throw UnsupportedWeightClass("value " + v.to_string() + " does not belong to mode " + mode_name(mode));
}

WeightFunction WeightFunction::parse(int m, int n, Mode mode, const std::string& text) {
  const auto semi = text.find(';');
  std::vector<HalfInt> eps = parse_halfint_list(text.substr(0, semi));
  std::vector<HalfInt> del;
  if (semi != std::string::npos) del = parse_halfint_list(text.substr(semi + 1));
  if (static_cast<int>(eps.size()) != m || static_cast<int>(del.size()) != n)
    throw std::invalid_argument("'" + text + "' does not have shape " + std::to_string(m) + ";" +
                                std::to_string(n));
  eps.insert(eps.end(), del.begin(), del.end());
  return WeightFunction(m, n, mode, std::move(eps));
}

WeightFunction WeightFunction::with_value(int slot, HalfInt v) const {
  WeightFunction r = *this;
  r.values_.at(slot) = v;
  return r;
}

std::string WeightFunction::to_string() const {
  std::string s;
  for (int i = 0; i < m_; ++i) s += (i ? "," : "") + values_[i].to_string();
  s += ";";
  for (int k = 0; k < n_; ++k) s += (k ? "," : "") + values_[m_ + k].to_string();
  return s;
}

}  // namespace icanon
