#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icanon/halfint.hpp"
#include "icanon/weight_function.hpp"
#include "icanon/weyl.hpp"

namespace icanon {

/// A vector in the epsilon/delta coordinate lattice (coefficients of
/// eps_1..eps_m then delta_1..delta_n), used for weights and roots alike.
class Weight {
 public:
  Weight() = default;
  Weight(int m, int n, std::vector<HalfInt> coords);
  static Weight zero(int m, int n) { return {m, n, std::vector<HalfInt>(m + n)}; }
  /// Text form "e1,...,em;d1,...,dn".
  static Weight parse(int m, int n, const std::string& text);

  int m() const { return m_; }
  int n() const { return n_; }
  HalfInt operator[](int i) const { return coords_[i]; }
  const std::vector<HalfInt>& coords() const { return coords_; }
  /// Iota for integral coordinates, Jota for coordinates in 1/2 + Z, nullopt otherwise.
  std::optional<Mode> weight_class() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight operator*(int k) const;

  std::string to_string() const;

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<HalfInt> coords_;
};

/// Bilinear form (eps_i, eps_j) = delta_ij, (delta_k, delta_l) = -delta_kl.
HalfInt form(const Weight& a, const Weight& b);

/// Root datum of osp(2m+1|2n) for the Borel with simple roots
/// -eps_1, eps_i - eps_{i+1}, eps_m - delta_1, delta_k - delta_{k+1}.
class RootDatum {
 public:
  RootDatum(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<Weight>& positive_roots() const { return positive_; }
  const std::vector<Weight>& even_positive_roots() const { return even_positive_; }
  const std::vector<Weight>& simple_roots() const { return simple_; }
  const std::vector<Weight>& even_simple_roots() const { return even_simple_; }
  const Weight& rho() const { return rho_; }
  const Weight& rho0() const { return rho0_; }

  /// Coefficients of v in the simple-root basis (in order of simple_roots()).
  std::vector<HalfInt> simple_root_coordinates(const Weight& v) const;
  /// Even simple root attached to a Weyl generator: b0 -> -eps_1,
  /// a_i -> eps_i - eps_{i+1}, c_k -> delta_k - delta_{k+1}.
  Weight even_simple_root(Generator s) const;

 private:
  int m_, n_;
  std::vector<Weight> positive_, even_positive_, simple_, even_simple_;
  Weight rho_, rho0_;
};

WeightFunction f_from_lambda(const Weight& lam, const RootDatum& rd);
Weight lambda_from_f(const WeightFunction& f, const RootDatum& rd);

/// g <= f: lambda_f - lambda_g is a non-negative integer combination of
/// positive roots (equivalently of simple roots, which form a basis).
bool bruhat_leq(const WeightFunction& g, const WeightFunction& f);
bool bruhat_leq(const WeightFunction& g, const WeightFunction& f, const RootDatum& rd);

/// Linear height functional (sum of simple-root coordinates of lambda_f up to a
/// constant); g < f implies height(g) < height(f), so sorting by height gives a
/// linear extension of the Bruhat order.
HalfInt bruhat_height(const WeightFunction& f);

/// Right position action on weights, w(x)_i = x_{w(i)} with signs on epsilon slots.
Weight weyl_act(const WeylElement& w, const Weight& x);

/// w . lam = w(lam + rho0) - rho0 with weyl_act; satisfies f_{w.lam} = f_lam . w.
Weight dot_action(const WeylElement& w, const Weight& lam, const RootDatum& rd);

/// (lam + rho0, alpha^vee) is not a positive integer for every alpha in Pi_zeta.
bool is_antidominant_zeta(const Weight& lam, const ParabolicDatum& p, const RootDatum& rd);

/// No epsilon-slot value equals plus or minus a delta-slot value.
bool is_typical(const WeightFunction& f);

}  // namespace icanon
