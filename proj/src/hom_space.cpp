#include "hom_space.hpp"

#include <map>

namespace whcx {

HomSpace::HomSpace(SpacePtr src, int dst_dim, int p, const std::vector<Intertwine>& constraints)
    : src_(std::move(src)), dst_(dst_dim), p_(p) {
  int n = src_->dim();
  int unknowns = dst_ * n;
  // φ is stored row-major: entry (i, j) is unknown i * n + j.
  std::vector<Vec> rows;
  for (const auto& c : constraints) {
    // (φL − Rφ)(i, j) = Σ_k φ(i,k) L(k,j) − Σ_k R(i,k) φ(k,j)
    for (int i = 0; i < dst_; ++i)
      for (int j = 0; j < n; ++j) {
        Vec row = zero_vec(unknowns, p_);
        for (int k = 0; k < n; ++k) row[i * n + k] += c.L(k, j);
        for (int k = 0; k < dst_; ++k) row[k * n + j] -= c.R(i, k);
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  }
  std::vector<Vec> ker;
  if (rows.empty()) {
    for (int u = 0; u < unknowns; ++u) ker.push_back(unit_vec(unknowns, u, p_));
  } else {
    ker = kernel_basis(Matrix::from_rows(rows, unknowns, p_));
  }
  ech_ = echelon(ker, unknowns, p_);
  for (const auto& r : ech_.rows) {
    Vec v = dense(r, unknowns, p_);
    Matrix m(dst_, n, p_);
    for (int i = 0; i < dst_; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = v[i * n + j];
    basis_.push_back(std::move(m));
  }
}

Matrix HomSpace::combine(const Vec& c) const {
  Matrix m(dst_, src_->dim(), p_);
  for (size_t k = 0; k < basis_.size(); ++k)
    if (!c[k].is_zero()) m = m + c[k] * basis_[k];
  return m;
}

std::optional<Vec> HomSpace::coords(const Matrix& m) const {
  int n = src_->dim();
  Vec v = zero_vec(dst_ * n, p_);
  for (int i = 0; i < dst_; ++i)
    for (int j = 0; j < n; ++j) v[i * n + j] = m(i, j);
  return coordinates(ech_, v);
}

Eval evaluator(const Space& sp, const Matrix& beta) {
  auto cache = std::make_shared<std::map<Tuple, Vec>>();
  const Space* s = &sp;
  return [s, beta, cache](const Tuple& t) -> Vec {
    auto it = cache->find(t);
    if (it != cache->end()) return it->second;
    Vec out = zero_vec(beta.rows(), beta.prime());
    for (const auto& [j, c] : s->project(t))
      for (int i = 0; i < beta.rows(); ++i) out[i] += c * beta(i, j);
    cache->emplace(t, out);
    return out;
  };
}

Matrix induce_comap(const HomSpace& src, const HomSpace& dst, const CoFormula& f, bool check,
                    const std::string& label) {
  const Space& x = *dst.src();
  int p = dst.prime();
  Matrix out(dst.dim(), src.dim(), p);
  for (int k = 0; k < src.dim(); ++k) {
    Eval ev = evaluator(*src.src(), src.element(k));
    Matrix img(dst.dst_dim(), x.dim(), p);
    for (int j = 0; j < x.dim(); ++j) img.set_col(j, f(x.rep(j), ev));
    if (check) {
      for_each_tuple(x.shape(), [&](const Tuple& t) {
        Vec lhs = f(t, ev);
        Vec rhs = zero_vec(dst.dst_dim(), p);
        for (const auto& [j, c] : x.project(t)) axpy(rhs, c, img.col(j));
        if (lhs != rhs) throw IllDefined(label + " is not well defined on the quotient", t);
      });
    }
    auto c = dst.coords(img);
    if (!c) throw IllDefined(label + " leaves the constrained Hom space", x.dim() ? x.rep(0) : Tuple{});
    out.set_col(k, *c);
  }
  return out;
}

Matrix action_matrix(const Space& sp, const Formula& f, const std::string& label) {
  return induce_map(sp, sp, f, true, label);
}

}  // namespace whcx
