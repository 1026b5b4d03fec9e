#pragma once

#include <memory>
#include <vector>

#include "crossed.hpp"
#include "weak_hopf.hpp"

namespace whcx {

// Finite groupoid: arrows carry (source, target); compose[g][h] is g∘h or -1.
struct Groupoid {
  int objects = 0;
  std::vector<std::pair<int, int>> arrows;
  std::vector<std::vector<int>> compose;
};

Groupoid pair_groupoid(int n);
Groupoid discrete_groupoid(int n);
Groupoid group_groupoid(const std::vector<std::vector<int>>& table);
Groupoid cyclic_group(int n);

// kG with Δg = g⊗g, ε(g) = 1, S(g) = g⁻¹.
WeakHopf groupoid_algebra(const Groupoid& g, int p);
WeakHopf group_algebra(int n, int p);

// Q[x]/(x^n) on the basis 1, x, ..., x^{n-1}.
Algebra truncated_polynomial(int n, int p);
// The algebra H^L on the echelon basis of H^L.
Algebra left_subalgebra(const WeakHopf& h);
// k as a one-dimensional algebra.
Algebra ground_algebra(int p);

// A = k with h·1 = ε(h).
WeakMeasure counit_measure(HPtr h);
// A = H^L with h·l = Π^L(hl).
WeakMeasure trivial_representation(HPtr h);
// H = kC_2 acting on A by the given involution matrix (image of e_i in column i).
WeakMeasure involution_measure(HPtr h, Algebra a, const Matrix& g);
// kC_2 acting on k[x]/(x^2) by x ↦ −x.
WeakMeasure sign_smash_measure(HPtr h);

}  // namespace whcx
