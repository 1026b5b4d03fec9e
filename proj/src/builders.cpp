#include "builders.hpp"

#include <stdexcept>

namespace whcx {

Groupoid pair_groupoid(int n) {
  if (n < 1) throw std::invalid_argument("pair groupoid needs at least one object");
  Groupoid g;
  g.objects = n;
  // arrow (i,j) goes j -> i; index i*n + j
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.arrows.emplace_back(j, i);
  int m = n * n;
  g.compose.assign(m, std::vector<int>(m, -1));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (g.arrows[a].first == g.arrows[b].second) g.compose[a][b] = (a / n) * n + (b % n);
  return g;
}

Groupoid discrete_groupoid(int n) {
  if (n < 1) throw std::invalid_argument("discrete groupoid needs at least one object");
  Groupoid g;
  g.objects = n;
  for (int i = 0; i < n; ++i) g.arrows.emplace_back(i, i);
  g.compose.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) g.compose[i][i] = i;
  return g;
}

Groupoid group_groupoid(const std::vector<std::vector<int>>& table) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("empty group table");
  Groupoid g;
  g.objects = 1;
  g.arrows.assign(n, {0, 0});
  g.compose = table;
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("group table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw std::invalid_argument("group table entry out of range");
  }
  return g;
}

Groupoid cyclic_group(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return group_groupoid(t);
}

WeakHopf groupoid_algebra(const Groupoid& g, int p) {
  int n = static_cast<int>(g.arrows.size());
  if (static_cast<int>(g.compose.size()) != n) throw std::invalid_argument("groupoid composition has wrong size");
  // identities: arrows e with e∘e = e on a single object
  std::vector<int> id_of(g.objects, -1);
  for (int e = 0; e < n; ++e)
    if (g.arrows[e].first == g.arrows[e].second && g.compose[e][e] == e) {
      bool neutral = true;
      for (int h = 0; h < n && neutral; ++h) {
        if (g.arrows[h].second == g.arrows[e].first && g.compose[e][h] != h) neutral = false;
        if (g.arrows[h].first == g.arrows[e].first && g.compose[h][e] != h) neutral = false;
      }
      if (neutral) id_of[g.arrows[e].first] = e;
    }
  for (int x = 0; x < g.objects; ++x)
    if (id_of[x] < 0) throw std::invalid_argument("groupoid object without identity arrow");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool composable = g.arrows[a].first == g.arrows[b].second;
      int c = g.compose[a][b];
      if (composable != (c >= 0)) throw std::invalid_argument("groupoid composition does not match sources and targets");
      if (c >= 0 && (g.arrows[c].first != g.arrows[b].first || g.arrows[c].second != g.arrows[a].second))
        throw std::invalid_argument("groupoid composition has wrong endpoints");
    }
  Algebra alg;
  alg.dim = n;
  alg.p = p;
  alg.table.assign(n, std::vector<SVec>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.compose[a][b] >= 0) alg.table[a][b] = {{g.compose[a][b], Scalar(1, p)}};
  alg.unit = zero_vec(n, p);
  for (int x = 0; x < g.objects; ++x) alg.unit[id_of[x]] = Scalar(1, p);
  Coalgebra co;
  co.dim = n;
  co.p = p;
  co.comult.assign(n, {});
  for (int a = 0; a < n; ++a) co.comult[a].push_back({Scalar(1, p), {a, a}});
  co.counit.assign(n, Scalar(1, p));
  Matrix s(n, n, p);
  for (int a = 0; a < n; ++a) {
    int inv = -1;
    for (int b = 0; b < n && inv < 0; ++b)
      if (g.compose[a][b] == id_of[g.arrows[a].second] && g.compose[b][a] == id_of[g.arrows[a].first]) inv = b;
    if (inv < 0) throw std::invalid_argument("groupoid arrow without inverse");
    s(inv, a) = Scalar(1, p);
  }
  return WeakHopf(std::move(alg), std::move(co), std::move(s));
}

WeakHopf group_algebra(int n, int p) { return groupoid_algebra(cyclic_group(n), p); }

Algebra truncated_polynomial(int n, int p) {
  Algebra a;
  a.dim = n;
  a.p = p;
  a.table.assign(n, std::vector<SVec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i + j < n) a.table[i][j] = {{i + j, Scalar(1, p)}};
  a.unit = unit_vec(n, 0, p);
  return a;
}

Algebra left_subalgebra(const WeakHopf& h) {
  const auto& basis = h.hl_basis();
  int n = static_cast<int>(basis.size());
  int p = h.prime();
  Algebra a;
  a.dim = n;
  a.p = p;
  a.table.assign(n, std::vector<SVec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto c = coordinates(h.hl_echelon(), h.mul(basis[i], basis[j]));
      if (!c) throw std::logic_error("H^L is not closed under products");
      a.table[i][j] = sparse(*c);
    }
  auto u = coordinates(h.hl_echelon(), h.one());
  if (!u) throw std::logic_error("1 is not in H^L");
  a.unit = *u;
  return a;
}

Algebra ground_algebra(int p) {
  Algebra a;
  a.dim = 1;
  a.p = p;
  a.table = {{{{0, Scalar(1, p)}}}};
  a.unit = {Scalar(1, p)};
  return a;
}

WeakMeasure counit_measure(HPtr h) {
  WeakMeasure m;
  m.A = ground_algebra(h->prime());
  m.rho.assign(h->dim(), std::vector<Vec>(1));
  for (int i = 0; i < h->dim(); ++i) m.rho[i][0] = {h->eps(i)};
  m.H = std::move(h);
  return m;
}

WeakMeasure trivial_representation(HPtr h) {
  WeakMeasure m;
  m.A = left_subalgebra(*h);
  const auto& b = h->hl_basis();
  m.rho.assign(h->dim(), std::vector<Vec>(b.size()));
  for (int i = 0; i < h->dim(); ++i)
    for (size_t l = 0; l < b.size(); ++l) {
      Vec v = h->pi_l().apply(h->mul(unit_vec(h->dim(), i, h->prime()), b[l]));
      auto c = coordinates(h->hl_echelon(), v);
      if (!c) throw std::logic_error("Π^L leaves H^L");
      m.rho[i][l] = *c;
    }
  m.H = std::move(h);
  return m;
}

WeakMeasure involution_measure(HPtr h, Algebra a, const Matrix& g) {
  if (h->dim() != 2) throw std::invalid_argument("involution measure needs kC_2");
  WeakMeasure m;
  m.rho.assign(2, std::vector<Vec>(a.dim));
  for (int i = 0; i < a.dim; ++i) {
    m.rho[0][i] = unit_vec(a.dim, i, a.p);
    m.rho[1][i] = g.col(i);
  }
  m.A = std::move(a);
  m.H = std::move(h);
  return m;
}

WeakMeasure sign_smash_measure(HPtr h) {
  int p = h->prime();
  Matrix g(2, 2, p);
  g(0, 0) = Scalar(1, p);
  g(1, 1) = Scalar(-1, p);
  return involution_measure(std::move(h), truncated_polynomial(2, p), g);
}

}  // namespace whcx
