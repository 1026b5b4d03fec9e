#include "hspaces.hpp"

#include <stdexcept>

namespace whcx {

std::shared_ptr<const ActionTable> hl_left_table(const WeakHopf& h) {
  const auto& b = h.hl_basis();
  auto tab = std::make_shared<ActionTable>(b.size(), std::vector<SVec>(h.dim()));
  for (size_t r = 0; r < b.size(); ++r)
    for (int x = 0; x < h.dim(); ++x) (*tab)[r][x] = sparse(h.mul(b[r], unit_vec(h.dim(), x, h.prime())));
  return tab;
}

std::shared_ptr<const ActionTable> hl_right_table(const WeakHopf& h) {
  const auto& b = h.hl_basis();
  auto tab = std::make_shared<ActionTable>(b.size(), std::vector<SVec>(h.dim()));
  for (size_t r = 0; r < b.size(); ++r)
    for (int x = 0; x < h.dim(); ++x) (*tab)[r][x] = sparse(h.mul(unit_vec(h.dim(), x, h.prime()), b[r]));
  return tab;
}

SpacePtr hbar(const WeakHopf& h) { return quotient_by(Space::atom(h.dim(), h.prime(), "H"), h.hl_basis()); }

SpacePtr hbar_power(const WeakHopf& h, int s) {
  if (s < 1) throw std::invalid_argument("hbar_power needs s >= 1");
  SpacePtr hb = hbar(h);
  int r = static_cast<int>(h.hl_basis().size());
  auto right = slot_action(hl_right_table(h), -1);
  auto left = slot_action(hl_left_table(h), 0);
  SpacePtr cur = hb;
  for (int k = 1; k < s; ++k) cur = balanced_tensor(cur, hb, r, right, left);
  return cur;
}

SpacePtr hbar_over(const WeakHopf& h, int s, const SpacePtr& w, const RawAction& left_w) {
  if (s == 0) return w;
  int r = static_cast<int>(h.hl_basis().size());
  return balanced_tensor(hbar_power(h, s), w, r, slot_action(hl_right_table(h), -1), left_w);
}

}  // namespace whcx
