#pragma once

#include <map>
#include <string>
#include <vector>

#include "icanon/fock.hpp"
#include "icanon/laurent.hpp"
#include "icanon/weyl.hpp"

namespace icanon {

/// Element sum_w c_w H_w of the Hecke algebra of W_{B_m} x S_n, with
/// (H_s - q^{-1})(H_s + q) = 0.
class HeckeElement {
 public:
  using Terms = std::map<WeylElement, LaurentPoly>;

  HeckeElement() = default;
  HeckeElement(int m, int n) : m_(m), n_(n) {}
  static HeckeElement basis(const WeylElement& w, const LaurentPoly& c = 1);
  static HeckeElement one(int m, int n) { return basis(WeylElement::identity(m, n)); }

  int m() const { return m_; }
  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coefficient(const WeylElement& w) const;
  void add(const WeylElement& w, const LaurentPoly& c);

  /// Right multiplication by a generator H_s.
  HeckeElement times_generator(Generator s) const;

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);
  friend HeckeElement operator*(const LaurentPoly& c, const HeckeElement& h);
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  int m_ = 0;
  int n_ = 0;
  Terms terms_;
};

/// Bar involution of the Hecke algebra: q -> q^{-1}, H_w -> H_{w^{-1}}^{-1}.
HeckeElement bar(const HeckeElement& h);

/// S_zeta = sum_{sigma in W_zeta} q^{l(w_0^zeta) - l(sigma)} H_sigma.
HeckeElement q_symmetrizer(const ParabolicDatum& p);

/// Right action of H_s on a Fock vector. With g = f.s:
///   g == f          : M_f H = q^{-1} M_f
///   g strictly lower: M_f H = M_g + (q^{-1} - q) M_f
///   f strictly lower: M_f H = M_g
/// `perturb` flips the sign of the (q^{-1} - q) term (negative control only).
FockVector act_generator(const FockVector& v, Generator s, bool perturb = false);
FockVector act_word(const FockVector& v, const std::vector<Generator>& word, bool perturb = false);
/// v . h for a Hecke element h (each H_w applied through a reduced word).
FockVector act_hecke(const FockVector& v, const HeckeElement& h);
/// v . S_zeta.
FockVector q_symmetrizer_apply(const FockVector& v, const ParabolicDatum& p);

/// Result of a relation-check harness: per-relation pass counts and the first
/// counterexample found for each failing relation.
struct RelationReport {
  struct Entry {
    std::string relation;
    int checked = 0;
    int failed = 0;
    std::string counterexample;
  };
  std::vector<Entry> entries;
  bool all_passed() const;
  std::string to_string() const;
};

/// Checks the quadratic relations, braid relations (orders 3 and 4), and
/// commutation of distant / cross-factor generators as operator identities
/// on the window monomials (all of them if sample_count <= 0, otherwise a
/// deterministic sample drawn with `seed`).
RelationReport verify_relations(int m, int n, const Window& window, int sample_count = 0,
                                unsigned seed = 0, bool perturb = false);

}  // namespace icanon
