#include "icanon/laurent.hpp"

#include <sstream>

namespace icanon {

namespace {

LaurentPoly::Coeff checked_add(LaurentPoly::Coeff a, LaurentPoly::Coeff b) {
  LaurentPoly::Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly coefficient overflow");
  return r;
}

LaurentPoly::Coeff checked_mul(LaurentPoly::Coeff a, LaurentPoly::Coeff b) {
  LaurentPoly::Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly coefficient overflow");
  return r;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(int exponent, Coeff c) {
  LaurentPoly p;
  if (c != 0) p.terms_[exponent] = c;
  return p;
}

LaurentPoly LaurentPoly::from_pairs(const std::vector<std::pair<int, Coeff>>& pairs) {
  LaurentPoly p;
  for (const auto& [e, c] : pairs) p.add_term(e, c);
  return p;
}

LaurentPoly::Coeff LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw std::logic_error("min_degree of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw std::logic_error("max_degree of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int e, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, checked_mul(ca, cb));
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

bool LaurentPoly::degrees_within(int lo, int hi) const {
  return terms_.empty() || (min_degree() >= lo && max_degree() <= hi);
}

std::vector<std::pair<int, LaurentPoly::Coeff>> LaurentPoly::to_pairs() const {
  return {terms_.begin(), terms_.end()};
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Coeff a = c < 0 ? -c : c;
    if (e == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << "q";
    if (e != 1) os << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
  }
  return os.str();
}

LaurentPoly bar(const LaurentPoly& p) {
  std::vector<std::pair<int, LaurentPoly::Coeff>> pairs;
  for (const auto& [e, c] : p.terms()) pairs.emplace_back(-e, c);
  return LaurentPoly::from_pairs(pairs);
}

LaurentPoly quantum_integer(int s) {
  if (s <= 0) throw std::invalid_argument("quantum_integer requires s >= 1, got " + std::to_string(s));
  LaurentPoly r;
  for (int e = s - 1; e >= 1 - s; e -= 2) r += LaurentPoly::monomial(e);
  return r;
}

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("divide_exact by zero");
  if (num.is_zero()) return {};
  const int quot_min = num.min_degree() - den.min_degree();
  const int den_top = den.max_degree();
  const LaurentPoly::Coeff lead = den.coeff(den_top);
  LaurentPoly rem = num;
  LaurentPoly quot;
  while (!rem.is_zero()) {
    const int e = rem.max_degree() - den_top;
    const LaurentPoly::Coeff c = rem.coeff(rem.max_degree());
    if (e < quot_min || c % lead != 0)
      throw NotDivisible("(" + num.to_string() + ") is not divisible by (" + den.to_string() + ")");
    const LaurentPoly term = LaurentPoly::monomial(e, c / lead);
    quot += term;
    rem -= term * den;
  }
  return quot;
}

LaurentPoly::Coeff eval_at_one(const LaurentPoly& p) {
  LaurentPoly::Coeff s = 0;
  for (const auto& [e, c] : p.terms()) s = checked_add(s, c);
  return s;
}

}  // namespace icanon
