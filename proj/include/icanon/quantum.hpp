#pragma once

#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "icanon/fock.hpp"
#include "icanon/halfint.hpp"

namespace icanon {

/// A graded solve could not be completed within the requested degree bound.
struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- U action

/// Chevalley generators of U(gl_infinity) at a node i (i in Z in iota mode,
/// i in 1/2 + Z in jota mode); Kinv is K_i^{-1}.
enum class Chevalley { E, F, K, Kinv };

/// Node i is usable on the window: both i - 1/2 and i + 1/2 lie in it.
bool node_in_window(HalfInt node, const Window& w);
/// All usable nodes, ascending.
std::vector<HalfInt> window_nodes(const Window& w);

/// Action on V^{(x) m'} (x) W^{(x) n'} (the shape of v) through the iterated
/// coproduct Delta(E) = 1 (x) E + E (x) K^{-1}, Delta(F) = F (x) 1 + K (x) F.
FockVector act_chevalley(Chevalley g, HalfInt node, const FockVector& v);

// ---------------------------------------------------------------- coideal action

/// Generators of the coideal subalgebra, embedded by
///   e_i -> E_i + K_i^{-1} F_{-i},  f_i -> F_i K_{-i}^{-1} + E_{-i},
///   k_i -> K_i K_{-i}^{-1},        t -> E_0 + q F_0 K_0^{-1} + K_0^{-1}
/// (index i > 0 for e, f, k; t only in iota mode, index ignored).
enum class IGen { e, f, k, kinv, t };

FockVector act_iquantum(IGen g, HalfInt index, const FockVector& v);
/// The bar-conjugate image psi(iota(u)) in U, e.g. e_i -> E_i + K_i F_{-i}.
FockVector act_iquantum_barred(IGen g, HalfInt index, const FockVector& v);
/// Usable generator indices of the coideal on a symmetric window:
/// (e,i), (f,i), (k,i) for nodes i > 0, plus t in iota mode.
std::vector<std::pair<IGen, HalfInt>> iquantum_generators(const Window& w);
std::string igen_name(IGen g, HalfInt index);

// ---------------------------------------------------------------- tensor bar involutions

enum class InvolutionKind { Quantum, Coideal };

/// Bar involution psi (Quantum) or psi^iota (Coideal) on the window
/// truncation of V^{(x) m} (x) W^{(x) n}, built one tensor factor at a time:
/// psi_{L (x) X} = Theta_{L,X} (psi_L (x) id), with Theta_{L,X} = 1 + sum_{r != s}
/// C_{r,s} (x) |x_s><x_r|. Each C_{r,s} is read off from the intertwining
/// equation of the single generator E_j with E_j x_s = x_{s'} (s' one step
/// back towards r), and all other relations are left as independent checks.
///
/// Every generator used preserves the window subspace of L, so the returned
/// coefficients are the exact window projections of the true values.
/// Not thread-safe while filling its memo tables.
class TensorBar {
 public:
  TensorBar(int m, int n, Window window, InvolutionKind kind);

  int m() const { return m_; }
  int n() const { return n_; }
  const Window& window() const { return window_; }
  InvolutionKind kind() const { return kind_; }

  /// psi(M_f).
  const FockVector& of_monomial(const WeightFunction& f);
  /// Anti-linear extension.
  FockVector apply(const FockVector& v);

 private:
  using CKey = std::tuple<int, HalfInt, HalfInt, WeightFunction>;

  const FockVector& level_monomial(int p, const WeightFunction& g);
  FockVector c_apply(int p, HalfInt r, HalfInt s, const FockVector& u);
  const FockVector& c_monomial(int p, HalfInt r, HalfInt s, const WeightFunction& g);
  FockVector tensor_append(const FockVector& u, HalfInt value, int p) const;
  FockVector prefix_zero(int p) const;

  int m_, n_;
  Window window_;
  InvolutionKind kind_;
  std::vector<std::map<WeightFunction, FockVector>> psi_memo_;
  std::map<CKey, FockVector> c_memo_;
};

// ---------------------------------------------------------------- window operators

/// Linear operator given by its values on window monomials.
struct WindowOperator {
  int m = 0, n = 0;
  Window window;
  std::map<WeightFunction, FockVector> action;

  FockVector apply(const FockVector& v) const;
  /// Matrix entries barred (the bar-conjugate operator w.r.t. coefficientwise bar).
  WindowOperator bar_conjugate() const;
};

/// Operator split into pieces by a root-lattice degree (coefficients of the
/// simple roots alpha_i, listed over window_nodes()).
struct GradedOperator {
  std::map<std::vector<int>, WindowOperator> pieces;
  std::vector<HalfInt> nodes;
  WindowOperator total() const;
  const WindowOperator* piece(const std::vector<int>& degree) const;
};

/// Theta_{M,N} on (first `split` factors) (x) (remaining factors) of
/// V^{(x) m} (x) W^{(x) n}: Theta = psi_T (psi_M (x) psi_N). Pieces graded by
/// the degree nu with Theta_nu in U^+_nu (x) U^-_{-nu}. Throws NonConvergence
/// if a nonzero piece has height above degree_bound.
GradedOperator compute_theta(int m, int n, const Window& w, int split, int degree_bound);

/// Upsilon on V^{(x) m} (x) W^{(x) n} as the window operator psi^iota o psi;
/// pieces graded by the weight lowering nu. Throws NonConvergence as above.
GradedOperator compute_upsilon(int m, int n, const Window& w, int degree_bound);

/// Default degree bound: the number of root steps in the window plus 2.
int default_degree_bound(const Window& w);
/// As above, starting from default_degree_bound and doubling on NonConvergence.
GradedOperator compute_theta(int m, int n, const Window& w, int split);
GradedOperator compute_upsilon(int m, int n, const Window& w);

/// Theta^iota (x (x) y) = psi^iota_T (psi^iota(x) (x) psi(y)) for x on the
/// V-part (shape (m,0)) and y on the W-part (shape (0,n)).
FockVector theta_i_apply(const FockVector& x, const FockVector& y);

/// Tensor product of a V-part vector and a W-part vector (same window).
FockVector tensor(const FockVector& x, const FockVector& y);

/// Root-lattice degree of the weight difference wt(from) - wt(to) with
/// wt(v_r) = eps_r, wt(w_r) = -eps_r, restricted to the given slots.
std::vector<int> weight_degree(const WeightFunction& from, const WeightFunction& to, int first_slot,
                               const std::vector<HalfInt>& nodes);

}  // namespace icanon
