#pragma once

#include <memory>
#include <vector>

#include "builders.hpp"
#include "cleft.hpp"
#include "doctest.h"

// Small crossed products shared by the cleft tests.
namespace fx {

using namespace whcx;

inline std::shared_ptr<const CrossedProduct> crossed(WeakMeasure m, Cocycle f) {
  auto inv = invert_cocycle(m, f);
  REQUIRE(inv);
  return std::make_shared<const CrossedProduct>(std::move(m), f, inv->inv);
}

inline Cleft with_regular(std::shared_ptr<const CrossedProduct> cp, std::vector<Vec> k) {
  Bimodule m = regular_bimodule(cp->E());
  return Cleft(cp, std::move(k), std::move(m));
}

inline Cleft minimal(WeakMeasure m) {
  auto k = minimal_stable_subalgebra(m);
  Cocycle f = trivial_cocycle(m);
  return with_regular(crossed(std::move(m), f), k);
}

// kC_2 over k with K = A = k.
inline Cleft group_c2(int p) { return minimal(counit_measure(std::make_shared<const WeakHopf>(group_algebra(2, p)))); }

// k[x]/(x^2) # QC_2 with x ↦ −x, K = Q.
inline Cleft smash() { return minimal(sign_smash_measure(std::make_shared<const WeakHopf>(group_algebra(2, 0)))); }

// H^L # H for the pair groupoid on two objects, K = A.
inline Cleft trivial_rep() {
  return minimal(trivial_representation(std::make_shared<const WeakHopf>(groupoid_algebra(pair_groupoid(2), 0))));
}

// Upper triangular 2×2 matrices on e11, e12, e22; g acts by conjugation with
// u = 1 + e12 and f(g,g) = u^2 = 1 + 2e12, which is not central in A.
inline Cleft inner_twisted() {
  auto h = std::make_shared<const WeakHopf>(group_algebra(2, 0));
  std::vector<Scalar> t(27, Scalar(0));
  auto set = [&](int i, int j, int k) { t[(i * 3 + j) * 3 + k] = Scalar(1); };
  set(0, 0, 0);
  set(0, 1, 1);
  set(1, 2, 1);
  set(2, 2, 2);
  WeakMeasure m;
  m.A = Algebra::from_tensor(3, 0, t, {Scalar(1), Scalar(0), Scalar(1)});
  m.rho.assign(2, std::vector<Vec>(3));
  for (int x = 0; x < 3; ++x) m.rho[0][x] = m.A.basis(x);
  m.rho[1][0] = {Scalar(1), Scalar(-1), Scalar(0)};
  m.rho[1][1] = {Scalar(0), Scalar(1), Scalar(0)};
  m.rho[1][2] = {Scalar(0), Scalar(1), Scalar(1)};
  m.H = h;
  Cocycle f = u2(m);
  f[1][1] = {Scalar(1), Scalar(2), Scalar(1)};
  auto k = minimal_stable_subalgebra(m);
  REQUIRE(verify_crossed_hypotheses(m, f).ok());
  return with_regular(crossed(std::move(m), f), k);
}

inline Cleft qc2() { return group_c2(0); }
inline Cleft f2c2() { return group_c2(2); }

// The K-valued fixtures.
inline std::vector<Cleft (*)()> all() { return {qc2, f2c2, smash, trivial_rep}; }

}  // namespace fx
