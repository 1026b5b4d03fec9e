#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "cleft.hpp"

namespace whcx::detail {

// (−1)^k in the field of characteristic p.
Scalar sgn(int k, int p);
// Emits c·(pre ⊗ fs[0] ⊗ … ⊗ post), each fs[k] in atom coordinates.
void emit_mixed(const Tuple& pre, const std::vector<Vec>& fs, const Tuple& post, const Scalar& c, const Emit& e);
// ev applied to pre ⊗ fs ⊗ post, extended linearly.
Vec eval_mixed(const Eval& ev, int dst, int p, const Tuple& pre, const std::vector<Vec>& fs, const Tuple& post);
std::shared_ptr<const ActionTable> table_of(int n_ring, int n_atom, const std::function<Vec(int, int)>& f);
Formula as_formula(const RawAction& act, int r);
Tuple slice(const Tuple& t, int a, int b);

using Triple = std::function<void(const Scalar&, const Vec&, const std::vector<Vec>&, const Vec&)>;
// Σ c·(γ⁻¹(h^{(1)}), h^{(2)}·ā, γ(h^{(3)})).
void for_each_F(const Cleft& c, int h, const Tuple& a, const Triple& fn);
// Σ ±c·(γ⁻¹(l^{(1)})γ⁻¹(h^{(1)}), 𝔗(h^{(2)}, l^{(2)}, ā), γ(h^{(3)}l^{(3)})).
void for_each_T(const Cleft& c, int h, int l, const Tuple& a, const Triple& fn);

}  // namespace whcx::detail
