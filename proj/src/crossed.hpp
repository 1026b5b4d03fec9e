#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "space.hpp"
#include "weak_hopf.hpp"

namespace whcx {

using HPtr = std::shared_ptr<const WeakHopf>;

// ρ: H⊗A → A, stored as rho[h][a] = e_h·e_a.
struct WeakMeasure {
  HPtr H;
  Algebra A;
  std::vector<std::vector<Vec>> rho;

  int p() const { return A.p; }
  Vec act(int h, int a) const { return rho[h][a]; }
  Vec act(int h, const Vec& a) const;
  Vec act(const Vec& h, const Vec& a) const;
  Vec act_one(int h) const { return act(h, A.unit); }

  Report verify_measure() const;
  // The weak module algebra conditions, the full module condition and its consequences.
  Report verify_module_algebra() const;
  bool full_module() const;
};

// Maps H⊗H → A, f[h][l].
using Cocycle = std::vector<std::vector<Vec>>;

Cocycle u2(const WeakMeasure& m);
Cocycle convolution(const WeakMeasure& m, const Cocycle& f, const Cocycle& g);
Cocycle trivial_cocycle(const WeakMeasure& m);
bool cocycle_equal(const Cocycle& a, const Cocycle& b);

struct CocycleInverse {
  Cocycle inv;
  bool unique = true;
};
std::optional<CocycleInverse> invert_cocycle(const WeakMeasure& m, const Cocycle& f);
Report verify_cocycle_pair(const WeakMeasure& m, const Cocycle& f, const Cocycle& finv);

Report verify_crossed_hypotheses(const WeakMeasure& m, const Cocycle& f);

// Span of {h·1_A}, in echelon form.
std::vector<Vec> minimal_stable_subalgebra(const WeakMeasure& m);
// Subalgebra, stable under ρ, and containing {h·1_A}.
Report verify_stable_subalgebra(const WeakMeasure& m, const std::vector<Vec>& k);
bool cocycle_in(const Cocycle& f, const std::vector<Vec>& k, int p);

// One term c·j(e_a)γ(e_h) of an element of E.
struct AH {
  Scalar c;
  int a, h;
};

class CrossedProduct {
 public:
  // gamma_inv_override replaces the computed γ⁻¹ (used only for negative controls).
  CrossedProduct(WeakMeasure m, Cocycle f, Cocycle finv, const Matrix* gamma_inv_override = nullptr);

  const WeakMeasure& measure() const { return m_; }
  const WeakHopf& H() const { return *m_.H; }
  const Algebra& A() const { return m_.A; }
  const Algebra& E() const { return e_; }
  const Cocycle& f() const { return f_; }
  const Cocycle& finv() const { return finv_; }
  int p() const { return m_.A.p; }
  int dim() const { return e_.dim; }
  int dA() const { return m_.A.dim; }
  int dH() const { return m_.H->dim(); }

  const Matrix& nabla() const { return nabla_; }
  // A⊗H (index a*dH + h) → E coordinates; nullopt outside im ∇.
  std::optional<Vec> coords(const Vec& ah) const;
  Vec include(const Vec& e) const;
  const std::vector<AH>& expand(int i) const { return expand_[i]; }

  const Vec& j(int a) const { return j_[a]; }
  const std::vector<Vec>& j_table() const { return j_; }
  const Vec& gamma(int h) const { return gamma_[h]; }
  const Vec& gamma_inv(int h) const { return gamma_inv_[h]; }
  Vec j(const Vec& a) const;
  Vec gamma(const Vec& h) const;
  Vec gamma_inv(const Vec& h) const;
  Vec mul(const Vec& x, const Vec& y) const { return e_.mul(x, y); }
  const Vec& one() const { return e_.unit; }
  // δ_E(e_i) as a dE·dH vector (index e*dH + h).
  const Vec& delta(int i) const { return delta_[i]; }
  Vec delta(const Vec& x) const;

  // a×h in raw A⊗H coordinates.
  Vec cross_raw(int a, int h) const { return nabla_.col(a * dH() + h); }

  Report verify() const;
  Report verify_comodule() const;
  Report verify_cleft_identities(int s_max = 3) const;

 private:
  WeakMeasure m_;
  Cocycle f_, finv_;
  Matrix nabla_;
  Echelon img_;
  std::vector<Vec> basis_;  // E basis inside A⊗H
  Algebra e_;
  std::vector<std::vector<AH>> expand_;
  std::vector<Vec> j_, gamma_, gamma_inv_, delta_;
  Vec raw_product(const Vec& x, const Vec& y) const;
};

// A-bimodule structure of E through j: tables of j(a)·e_x and e_x·j(a).
std::shared_ptr<const ActionTable> e_left_a(const CrossedProduct& cp);
std::shared_ptr<const ActionTable> e_right_a(const CrossedProduct& cp);
// Ẽ = E/j(A).
SpacePtr etilde(const CrossedProduct& cp);
// base ⊗_A Ẽ^{⊗_A s}; right_base is the right A-action on base.
SpacePtr etilde_over(const CrossedProduct& cp, const SpacePtr& base, const RawAction& right_base, int s);

}  // namespace whcx
