#pragma once

#include <memory>

#include "space.hpp"
#include "weak_hopf.hpp"

namespace whcx {

// H^L acting on an H atom by multiplication; r indexes hl_basis.
std::shared_ptr<const ActionTable> hl_left_table(const WeakHopf& h);
std::shared_ptr<const ActionTable> hl_right_table(const WeakHopf& h);

// H̄ = H/H^L.
SpacePtr hbar(const WeakHopf& h);
// H̄^{⊗_{H^L} s} for s ≥ 1; raw shape [dim H]*s.
SpacePtr hbar_power(const WeakHopf& h, int s);
// H̄^{⊗_{H^L} s} ⊗_{H^L} W for a left H^L-action on W; W itself when s = 0.
SpacePtr hbar_over(const WeakHopf& h, int s, const SpacePtr& w, const RawAction& left_w);

}  // namespace whcx
