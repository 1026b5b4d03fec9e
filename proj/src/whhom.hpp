#pragma once

#include <memory>
#include <vector>

#include "hom_space.hpp"
#include "homology.hpp"
#include "space.hpp"
#include "weak_hopf.hpp"

namespace whcx {

// A finite-dimensional H-module; act[h] is the matrix of e_h·(−) or (−)·e_h.
struct HModule {
  int dim = 0;
  int p = 0;
  bool right = false;
  std::vector<Matrix> act;

  Matrix action(const Vec& h) const;
  Report verify(const WeakHopf& H) const;
};

HModule regular_left(const WeakHopf& H);
// H^L with h·x = Π^L(hx).
HModule trivial_left(const WeakHopf& H);
// H^R with x·h = Π^R(xh).
HModule trivial_right(const WeakHopf& H);
// The action axioms for H^R and Π^R being right H-linear.
Report verify_hr_module(const WeakHopf& H);

// H^L acting on the module through the inclusion; r indexes hl_basis.
std::shared_ptr<const ActionTable> hl_module_table(const WeakHopf& H, const HModule& n);

// H̄^{⊗s}⊗_{H^L}N for s = 0..top with the printed differentials d_s.
struct HChains {
  GradedComplex c;
  std::vector<SpacePtr> spaces;
};
HChains homology_complex(const WeakHopf& H, const HModule& n, int top);
std::vector<int> homology_of_H(const WeakHopf& H, const HModule& n, int n_max);

// Hom_{H^L}(H̄^{⊗s}, N) for s = 0..top with the printed d^s.
struct HCochains {
  GradedComplex c;
  std::vector<HomSpace> spaces;
};
HCochains cohomology_complex(const WeakHopf& H, const HModule& n, int top);
std::vector<int> cohomology_of_H(const WeakHopf& H, const HModule& n, int n_max);

// The augmented resolution: degree 0 is H^R, degree k ≥ 1 is H̄^{⊗k−1}⊗_{H^L}H.
struct Resolution {
  GradedComplex aug;
  std::vector<SpacePtr> spaces;  // spaces[s] = H̄^{⊗s}⊗_{H^L}H
  std::vector<Matrix> hbar_maps; // contraction, hbar_maps[k]: degree k → k + 1
};
Resolution build_resolution(const WeakHopf& H, int s_max);
// ħ∘d' + d'∘ħ = id in augmented degrees up to s_max + 1.
Report verify_resolution(const Resolution& r, int s_max);

// Tor and Ext computed from the resolution directly.
std::vector<int> tor_via_resolution(const WeakHopf& H, const HModule& n, int n_max);
std::vector<int> ext_via_resolution(const WeakHopf& H, const HModule& n, int n_max);

// The printed d_s on raw tuples (h_1..h_s, n) for a left action table.
Formula hochschild_h_formula(const WeakHopf& H, std::shared_ptr<const std::vector<Matrix>> act, int s);

}  // namespace whcx
