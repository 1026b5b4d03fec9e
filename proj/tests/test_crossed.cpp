#include "builders.hpp"
#include "crossed.hpp"
#include "doctest.h"

using namespace whcx;

namespace {

CrossedProduct make(WeakMeasure m) {
  Cocycle f = trivial_cocycle(m);
  auto inv = invert_cocycle(m, f);
  REQUIRE(inv);
  return CrossedProduct(std::move(m), f, inv->inv);
}

}  // namespace

TEST_CASE("sign smash product is 4-dimensional and cleft") {
  auto h = std::make_shared<const WeakHopf>(group_algebra(2, 0));
  WeakMeasure m = sign_smash_measure(h);
  CHECK(m.verify_module_algebra().ok());
  CHECK(verify_crossed_hypotheses(m, trivial_cocycle(m)).ok());
  CrossedProduct cp = make(m);
  CHECK(cp.dim() == 4);
  Report r = cp.verify();
  CHECK(r.ok());
  if (!r.ok()) MESSAGE(r.first_failure()->name << " " << r.first_failure()->witness);
  Report c = cp.verify_cleft_identities(2);
  CHECK(c.ok());
  if (!c.ok()) MESSAGE(c.first_failure()->name << " " << c.first_failure()->witness);
  CHECK(minimal_stable_subalgebra(m).size() == 1);
}

TEST_CASE("trivial representation of the pair groupoid") {
  auto h = std::make_shared<const WeakHopf>(groupoid_algebra(pair_groupoid(2), 0));
  WeakMeasure m = trivial_representation(h);
  CHECK(m.A.dim == 2);
  Report mr = m.verify_module_algebra();
  CHECK(mr.ok());
  CrossedProduct cp = make(m);
  CHECK(cp.dim() == 4);
  Report r = cp.verify();
  CHECK(r.ok());
  if (!r.ok()) MESSAGE(r.first_failure()->name << " " << r.first_failure()->witness);
  Report c = cp.verify_cleft_identities(2);
  CHECK(c.ok());
  if (!c.ok()) MESSAGE(c.first_failure()->name << " " << c.first_failure()->witness);
  auto k = minimal_stable_subalgebra(m);
  CHECK(k.size() == 2);
  CHECK(verify_stable_subalgebra(m, k).ok());
}

TEST_CASE("counit measure gives E = H") {
  for (int p : {0, 2}) {
    auto h = std::make_shared<const WeakHopf>(group_algebra(2, p));
    CrossedProduct cp = make(counit_measure(h));
    CHECK(cp.dim() == 2);
    CHECK(cp.verify().ok());
  }
}

TEST_CASE("corrupted γ⁻¹ fails inv implica cleft") {
  auto h = std::make_shared<const WeakHopf>(group_algebra(2, 0));
  WeakMeasure m = sign_smash_measure(h);
  Cocycle f = trivial_cocycle(m);
  auto inv = invert_cocycle(m, f);
  REQUIRE(inv);
  CrossedProduct good(m, f, inv->inv);
  Matrix bad(good.dim(), 2, 0);
  bad.set_col(0, good.gamma(0));
  bad.set_col(1, good.gamma(1));
  bad.set_col(1, good.one());
  CrossedProduct cp(m, f, inv->inv, &bad);
  Report r = cp.verify();
  const Check* c = r.find("inv implica cleft (γ*γ⁻¹ = γ∘Π^L)");
  REQUIRE(c);
  CHECK_FALSE(c->pass);
}

TEST_CASE("zero cocycle is not invertible") {
  auto h = std::make_shared<const WeakHopf>(group_algebra(2, 0));
  WeakMeasure m = sign_smash_measure(h);
  Cocycle z(2, std::vector<Vec>(2, zero_vec(2, 0)));
  CHECK_FALSE(invert_cocycle(m, z));
}
