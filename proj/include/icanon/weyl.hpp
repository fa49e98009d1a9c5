#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "icanon/laurent.hpp"
#include "icanon/weight_function.hpp"

namespace icanon {

/// A simple reflection of W_{B_m} x S_n: "b0" negates epsilon slot 1,
/// "a<i>" swaps epsilon slots i,i+1, "c<k>" swaps delta slots k,k+1
/// (all indices 1-based, as in the CLI names).
struct Generator {
  enum class Kind { B0, A, C };
  Kind kind = Kind::B0;
  int index = 0;

  static Generator b0() { return {Kind::B0, 0}; }
  static Generator a(int i) { return {Kind::A, i}; }
  static Generator c(int k) { return {Kind::C, k}; }
  static Generator parse(const std::string& name);

  std::string name() const;
  /// Throws std::invalid_argument if the generator does not exist for (m, n).
  void check(int m, int n) const;

  friend auto operator<=>(const Generator&, const Generator&) = default;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// All simple reflections of W_{B_m} x S_n, in the order b0, a1.., c1...
std::vector<Generator> all_generators(int m, int n);

/// Element of W_{B_m} x S_n in one-line notation: signed()[i-1] = w(i) in
/// {+-1..+-m}, perm()[k-1] = w(k) in {1..n}. Acts on weight functions on the
/// right by (f.w)(i) = f(w(i)) with f(-j) := -f(j).
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(std::vector<int> signed_perm, std::vector<int> perm);
  static WeylElement identity(int m, int n);
  static WeylElement generator(int m, int n, Generator s);
  static WeylElement from_word(int m, int n, const std::vector<Generator>& word);

  int m() const { return static_cast<int>(signed_.size()); }
  int n() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& signed_perm() const { return signed_; }
  const std::vector<int>& perm() const { return perm_; }
  bool is_identity() const;

  /// (this * o)(i) = this(o(i)).
  WeylElement operator*(const WeylElement& o) const;
  WeylElement inverse() const;
  WeylElement times_generator(Generator s) const;

  /// Coxeter length: inv + neg + nsp on the signed part, inv on the perm part.
  int length() const;
  /// A reduced word s_1...s_k with w = s_1 * ... * s_k.
  std::vector<Generator> reduced_word() const;

  std::string to_string() const;

  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;
  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  std::vector<int> signed_;
  std::vector<int> perm_;
};

/// f . w  (right action on positions, sign flips on epsilon slots).
WeightFunction act(const WeightFunction& f, const WeylElement& w);
WeightFunction act(const WeightFunction& f, Generator s);

/// The f-coordinate form of "(lambda_f + rho_0, alpha_s^vee) is not a positive
/// integer": b0: f(1) >= 0; a_i: f(i) <= f(i+1); c_k: f(kbar) >= f(k+1 bar).
bool is_antidominant_for(const WeightFunction& f, Generator s);

/// f is strictly the lower (antidominant) end of the pair {f, f.s}.
bool is_strictly_lower_for(const WeightFunction& f, Generator s);

/// One simple factor of a standard parabolic subgroup.
struct ParabolicFactor {
  char type = 'A';  // 'A' or 'B'
  int rank = 0;
  std::vector<Generator> gens;
};

/// A standard parabolic subgroup W_zeta of W_{B_m} x S_n.
class ParabolicDatum {
 public:
  ParabolicDatum() : ParabolicDatum(0, 0, {}) {}
  ParabolicDatum(int m, int n, std::vector<Generator> gens);
  static ParabolicDatum trivial(int m, int n) { return {m, n, {}}; }
  static ParabolicDatum full(int m, int n) { return {m, n, all_generators(m, n)}; }
  /// Comma separated generator names; empty text or "0" gives the trivial subgroup.
  static ParabolicDatum parse(int m, int n, const std::string& text);
  /// Every standard parabolic subgroup (all generator subsets).
  static std::vector<ParabolicDatum> all(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<Generator>& generators() const { return gens_; }
  bool contains(Generator s) const;
  bool is_trivial() const { return gens_.empty(); }

  std::vector<ParabolicFactor> factors() const;
  /// All group elements, sorted by (length, element).
  const std::vector<WeylElement>& elements() const;
  std::size_t order() const { return elements().size(); }
  WeylElement longest_element() const;

  std::string to_string() const;

  friend bool operator==(const ParabolicDatum& a, const ParabolicDatum& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.gens_ == b.gens_;
  }

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<Generator> gens_;
  std::vector<WeylElement> elements_;  // enumerated eagerly; values stay immutable
};

/// Exponents of each factor: A_r -> 1..r, B_r -> 1,3,..,2r-1.
std::vector<std::vector<int>> exponents(const ParabolicDatum& p);

/// [W] = prod over factors and exponents e of [e+1].
LaurentPoly poincare_bracket(const ParabolicDatum& p);

/// f is antidominant for every generator of P.
bool is_antidominant(const WeightFunction& f, const ParabolicDatum& p);

/// (f_minus, tau): f_minus = f.tau antidominant for P, tau of minimal length.
std::pair<WeightFunction, WeylElement> antidominant_rep(const WeightFunction& f, const ParabolicDatum& p);

/// Stabilizer of an antidominant f: the standard parabolic generated by the
/// generators of P fixing f. Throws std::invalid_argument if f is not antidominant.
ParabolicDatum stabilizer(const WeightFunction& f, const ParabolicDatum& p);

/// Minimal-length representatives of W_f \ W_zeta (f antidominant), with lengths,
/// sorted by (length, element).
std::vector<std::pair<WeylElement, int>> shortest_coset_reps(const WeightFunction& f, const ParabolicDatum& p);

/// The orbit f.P, sorted.
std::vector<WeightFunction> orbit(const WeightFunction& f, const ParabolicDatum& p);

}  // namespace icanon
