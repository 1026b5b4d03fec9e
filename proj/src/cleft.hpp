#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "crossed.hpp"
#include "hom_space.hpp"
#include "homology.hpp"
#include "whhom.hpp"

namespace whcx {

// A finite-dimensional E-bimodule; left[x] and right[x] are e_x·(−) and (−)·e_x.
struct Bimodule {
  int dim = 0;
  int p = 0;
  std::vector<Matrix> left, right;

  Matrix left_of(const Vec& e) const;
  Matrix right_of(const Vec& e) const;
  Report verify(const Algebra& e) const;
};
Bimodule regular_bimodule(const Algebra& e);

// A crossed product E = A#_f H with a stable subalgebra K ⊆ A and an E-bimodule M.
class Cleft {
 public:
  Cleft(std::shared_ptr<const CrossedProduct> cp, std::vector<Vec> k, Bimodule m);

  const CrossedProduct& cp() const { return *cp_; }
  const WeakHopf& H() const { return cp_->H(); }
  const Algebra& A() const { return cp_->A(); }
  const std::vector<Vec>& K() const { return k_; }
  const Bimodule& M() const { return m_; }
  int p() const { return cp_->p(); }
  int dK() const { return static_cast<int>(k_.size()); }
  bool k_valued() const;
  // Throws Unsupported unless f takes its values in K.
  void require_k_valued() const;

  // Ā^{⊗_K r}; the unit space at r = 0.
  SpacePtr abar_power(int r) const;
  // M⊗Ā^{⊗r}⊗, raw shape [dM] + [dA]*r.
  SpacePtr w(int r) const;
  // X̄_{rs}(M), raw shape [dH]*s + [dM] + [dA]*r.
  SpacePtr xbar(int r, int s) const;
  // X̂_{rs}(M), raw shape [dM] + [dE]*s + [dA]*r; equal to W_r at s = 0.
  SpacePtr xhat(int r, int s) const;

  // H̄^{⊗s}⊗_k Ā^{⊗r}, raw shape [dH]*s + [dA]*r.
  SpacePtr xbar_domain(int r, int s) const;
  // Ẽ^{⊗_A s}⊗Ā^{⊗r}, raw shape [dE]*s + [dA]*r.
  SpacePtr xhat_domain(int r, int s) const;
  const HomSpace& xbar_co(int r, int s) const;
  // Equal to X̄^{r0} at s = 0.
  const HomSpace& xhat_co(int r, int s) const;

  // X̄_{rs} → X̄_{r−1,s}, X̄_{r,s−1}, X̄_{r+1,s−2}.
  Matrix d0(int r, int s) const;
  Matrix d1(int r, int s) const;
  Matrix d2(int r, int s) const;
  // X̂_{rs} → X̄_{rs} and back.
  Matrix theta(int r, int s) const;
  Matrix lambda(int r, int s) const;

  // Cochain maps into X̄^{rs}: from X̄^{r−1,s}, X̄^{r,s−1}, X̄^{r+1,s−2}.
  // printed = true omits the sign (−1)^r on the last term of d_0.
  Matrix co_d0(int r, int s, bool printed = false) const;
  Matrix co_d1(int r, int s) const;
  Matrix co_d2(int r, int s) const;
  // X̄^{rs} → X̂^{rs} and back.
  Matrix co_theta(int r, int s) const;
  Matrix co_lambda(int r, int s) const;

  // F^h_r on W_r and 𝔥_r: W_r → W_{r+1}.
  Matrix F(const Vec& h, int r) const;
  Matrix frak_h(const Vec& h, const Vec& l, int r) const;
  // F^*_h on X̄^{r0} and 𝔥^r: X̄^{r+1,0} → X̄^{r0}.
  Matrix F_co(const Vec& h, int r) const;
  Matrix frak_h_co(const Vec& h, const Vec& l, int r) const;

  // (W_*, b) and (X̄^{*0}, b^*) up to degree top.
  GradedComplex a_chains(int top) const;
  GradedComplex a_cochains(int top) const;

  // Total complexes of (X̄, d̄⁰ + d̄¹) through total degree n_top; need f valued in K.
  TotalComplex chains(int n_top) const;
  TotalComplex cochains(int n_top) const;

  // Element-level helpers.
  Vec m_left(const Vec& e, const Vec& m) const;
  Vec m_right(const Vec& m, const Vec& e) const;
  Vec gamma_times(const Tuple& hs) const;      // γ(h_1)⋯γ(h_t)
  Vec gamma_inv_times(const Tuple& hs) const;  // γ⁻¹(h_t)⋯γ⁻¹(h_1)
  // h_1·(h_2·(…(h_t·a))); hs[i] is the index of h_{i+1}.
  Vec act_chain(const Tuple& hs, const Vec& a) const;

 private:
  std::shared_ptr<const CrossedProduct> cp_;
  std::vector<Vec> k_;
  Bimodule m_;
  std::shared_ptr<const ActionTable> ka_left_, ka_right_, km_left_, km_right_, ke_right_, hl_m_;
  mutable std::mutex mu_;
  mutable std::map<int, SpacePtr> abar_, w_;
  mutable std::map<std::pair<int, int>, SpacePtr> xbar_, xhat_, xbar_dom_, xhat_dom_;
  mutable std::map<std::pair<int, int>, std::shared_ptr<HomSpace>> xbar_co_, xhat_co_;
  mutable std::map<int, std::vector<Matrix>> f_basis_, f_co_basis_;
  const std::vector<Matrix>& f_basis(int r) const;
  const std::vector<Matrix>& f_co_basis(int r) const;
};

// Normalized Hochschild complexes of E relative to a subalgebra K ⊆ E (basis in E coordinates).
GradedComplex canonical_homology(const Algebra& e, const std::vector<Vec>& k, const Bimodule& m, int top);
GradedComplex canonical_cohomology(const Algebra& e, const std::vector<Vec>& k, const Bimodule& m, int top);
// (E⊗Ē^{⊗*}⊗, b, B) through degree top.
MixedComplex canonical_mixed(const Algebra& e, const std::vector<Vec>& k, int top);

// j(K) inside E.
std::vector<Vec> k_in_e(const Cleft& c);

std::vector<int> hochschild_homology_cleft(const Cleft& c, int n_max);
std::vector<int> hochschild_cohomology_cleft(const Cleft& c, int n_max);
std::vector<int> canonical_homology_dims(const Cleft& c, int n_max);
std::vector<int> canonical_cohomology_dims(const Cleft& c, int n_max);

// Checks at chain level: Θ∘Λ = I and Λ∘Θ = I for r + s ≤ n (both variances).
Report verify_theta_lambda(const Cleft& c, int n);
// d̄∘d̄ = 0 on the total complex, d̄² = 0 when f is K-valued, and the double-complex identity.
Report verify_xbar_differentials(const Cleft& c, int n);

// F¹ = id, chain maps, the homotopy for every basis pair, and the induced module axioms.
Report verify_module_structure(const Cleft& c, int r_max);
Report verify_module_structure_co(const Cleft& c, int r_max);

// H^K_r(A,M) with the induced left H-action, and H^r_K(A,M) with the right action.
HModule a_homology_module(const Cleft& c, int r);
HModule a_cohomology_module(const Cleft& c, int r);

struct E2Comparison {
  std::map<std::pair<int, int>, int> filtration;  // (r, s) → dim from the pages
  std::map<std::pair<int, int>, int> via_h;       // (r, s) → H_s(H, H_r(A,M))
  Report report;
};
E2Comparison spectral_e2(const Cleft& c, int n_max);
E2Comparison spectral_e2_co(const Cleft& c, int n_max);

// A = K: the left H-module M⊗ and the right H-module M^K of the examples.
HModule coinvariant_module(const Cleft& c);
HModule invariant_module(const Cleft& c);

// Cup product of β ∈ X̄^{rs}(E), β' ∈ X̄^{r's'}(E) as X̄^{r+r',s+s'} coordinates.
Vec cup(const Cleft& c, int r, int s, const Vec& b, int r2, int s2, const Vec& b2);
// Cap product of y ∈ X̄_{rs}(M) with β ∈ X̄^{r's'}(E), in X̄_{r−r',s−s'}(M).
Vec cap(const Cleft& c, const Cleft& ce, int r, int s, const Vec& y, int r2, int s2, const Vec& b);
// The (0,0) cochain with value 1_E.
Vec unit_cocycle(const Cleft& c);

// Total-degree products on the total complexes (summand order as in TotalComplex).
Vec cup_total(const Cleft& c, const TotalComplex& tc, int n, const Vec& x, int n2, const Vec& y);
Vec cap_total(const Cleft& c, const Cleft& ce, const TotalComplex& ch, const TotalComplex& co, int n, const Vec& y,
              int n2, const Vec& b);
Report verify_products(const Cleft& c, int n_max);

// T_s(h_0⊗h_1⊗…⊗h_s) ∈ A; hs = (h_0, …, h_s).
Vec t_map(const Cleft& c, const Tuple& hs);
Vec t_map(const Cleft& c, const Vec& h0, const Tuple& rest);
// Both equalities relating γ(h_0)γ_×⁻¹ and T_s, on all basis tuples for s ≤ s_max.
Report verify_t_maps(const Cleft& c, int s_max);

// D̄⁰: X̄_{rs} → X̄_{r,s+1} and D̄¹: X̄_{rs} → X̄_{r+1,s} (M = E).
Matrix connes0(const Cleft& c, int r, int s);
Matrix connes1(const Cleft& c, int r, int s);
// (X̄, d̄, D̄) through total degree top.
MixedComplex xbar_mixed(const Cleft& c, int top);

struct CyclicComparison {
  CyclicDims xbar, canonical;
  Report report;
};
CyclicComparison cyclic_compare(const Cleft& c, int n_max, int trunc);

}  // namespace whcx
