#include "linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace whcx {

Vec zero_vec(int n, int p) { return Vec(static_cast<size_t>(n), Scalar(0, p)); }

Vec unit_vec(int n, int i, int p) {
  Vec v = zero_vec(n, p);
  v[i] = Scalar(1, p);
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (a.is_zero()) return;
  for (size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

void axpy(Vec& y, const Scalar& a, const SVec& x) {
  if (a.is_zero()) return;
  for (const auto& [i, c] : x) y[i] += a * c;
}

SVec sparse(const Vec& v) {
  SVec s;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(static_cast<int>(i), v[i]);
  return s;
}

Vec dense(const SVec& v, int n, int p) {
  Vec d = zero_vec(n, p);
  for (const auto& [i, c] : v) d[i] += c;
  return d;
}

Matrix::Matrix(int rows, int cols, int p)
    : rows_(rows), cols_(cols), p_(p), a_(static_cast<size_t>(rows) * cols, Scalar(0, p)) {}

Matrix Matrix::identity(int n, int p) {
  Matrix m(n, n, p);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar(1, p);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols, int p) {
  Matrix m(static_cast<int>(rows.size()), cols, p);
  for (int i = 0; i < m.rows_; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, int rows, int p) {
  Matrix m(rows, static_cast<int>(cols.size()), p);
  for (int j = 0; j < m.cols_; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

Vec Matrix::row(int i) const {
  return Vec(a_.begin() + static_cast<long>(i) * cols_, a_.begin() + static_cast<long>(i + 1) * cols_);
}

Vec Matrix::col(int j) const {
  Vec v;
  v.reserve(rows_);
  for (int i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

void Matrix::set_col(int j, const Vec& v) {
  for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, p_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Vec Matrix::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("apply: size mismatch");
  Vec y = zero_vec(rows_, p_);
  for (int j = 0; j < cols_; ++j) {
    if (x[j].is_zero()) continue;
    for (int i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero()) y[i] += a * x[j];
    }
  }
  return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: size mismatch");
  Matrix c(a.rows_, b.cols_, std::max(a.p_, b.p_));
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) c(i, j) += x * y;
      }
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: size mismatch");
  Matrix c = a;
  for (size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: size mismatch");
  Matrix c = a;
  for (size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix c = a;
  for (auto& x : c.a_) x *= s;
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

namespace {

// v -= a * w, both sorted by index.
SVec sub_scaled(const SVec& v, const Scalar& a, const SVec& w) {
  SVec out;
  out.reserve(v.size() + w.size());
  size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.push_back(v[i++]);
    } else if (i == v.size() || w[j].first < v[i].first) {
      out.emplace_back(w[j].first, -(a * w[j].second));
      ++j;
    } else {
      Scalar c = v[i].second - a * w[j].second;
      if (!c.is_zero()) out.emplace_back(v[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Echelon echelon_sparse(const std::vector<SVec>& input, int cols, int p) {
  std::map<int, SVec> basis;  // pivot -> row with leading 1
  for (const auto& row : input) {
    SVec v;
    for (const auto& e : row)
      if (!e.second.is_zero()) v.push_back(e);
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    size_t k = 0;
    while (k < v.size()) {
      auto it = basis.find(v[k].first);
      if (it == basis.end()) {
        ++k;
        continue;
      }
      Scalar a = v[k].second;
      v = sub_scaled(v, a, it->second);
    }
    if (v.empty()) continue;
    // v has no entries at existing pivots; its first entry becomes a new pivot.
    Scalar inv = Scalar(1, p) / v.front().second;
    for (auto& e : v) e.second *= inv;
    int piv = v.front().first;
    // keep reduced: clear this pivot column from existing rows
    for (auto& [q, r] : basis) {
      auto f = std::find_if(r.begin(), r.end(), [&](const auto& e) { return e.first == piv; });
      if (f != r.end()) {
        Scalar a = f->second;
        r = sub_scaled(r, a, v);
      }
    }
    basis.emplace(piv, std::move(v));
  }
  Echelon e;
  e.cols = cols;
  e.p = p;
  for (auto& [piv, r] : basis) {
    e.pivots.push_back(piv);
    e.rows.push_back(std::move(r));
  }
  return e;
}

Echelon echelon(const std::vector<Vec>& rows, int cols, int p) {
  std::vector<SVec> s;
  s.reserve(rows.size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("echelon: ragged rows");
    s.push_back(sparse(r));
  }
  return echelon_sparse(s, cols, p);
}

Echelon echelon(const Matrix& m) {
  std::vector<SVec> s(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) s[i].emplace_back(j, m(i, j));
  return echelon_sparse(s, m.cols(), m.prime());
}

int rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return static_cast<int>(echelon(m).rows.size());
}

std::vector<Vec> kernel_basis(const Echelon& e) {
  std::vector<bool> is_piv(e.cols, false);
  for (int q : e.pivots) is_piv[q] = true;
  std::vector<Vec> out;
  for (int f = 0; f < e.cols; ++f) {
    if (is_piv[f]) continue;
    Vec v = unit_vec(e.cols, f, e.p);
    for (size_t k = 0; k < e.rows.size(); ++k)
      for (const auto& [j, c] : e.rows[k])
        if (j == f) v[e.pivots[k]] = -c;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> kernel_basis(const Matrix& m) { return kernel_basis(echelon(m)); }

std::optional<Matrix> solve_linear(const Matrix& m, const Matrix& rhs) {
  if (m.rows() != rhs.rows()) throw std::invalid_argument("solve_linear: row counts differ");
  int p = std::max(m.prime(), rhs.prime());
  int n = m.cols();
  // Row-reduce the augmented matrix [m | rhs].
  std::vector<SVec> aug(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < n; ++j)
      if (!m(i, j).is_zero()) aug[i].emplace_back(j, m(i, j));
    for (int j = 0; j < rhs.cols(); ++j)
      if (!rhs(i, j).is_zero()) aug[i].emplace_back(n + j, rhs(i, j));
  }
  Echelon e = echelon_sparse(aug, n + rhs.cols(), p);
  Matrix x(n, rhs.cols(), p);
  for (size_t k = 0; k < e.rows.size(); ++k) {
    int piv = e.pivots[k];
    if (piv >= n) return std::nullopt;
    for (const auto& [j, c] : e.rows[k])
      if (j >= n) x(piv, j - n) = c;
  }
  return x;
}

QuotientPresentation make_quotient(int ambient_dim, const std::vector<Vec>& relations, int p) {
  QuotientPresentation q;
  q.ambient_dim = ambient_dim;
  q.relations = relations;
  q.p = p;
  Echelon e = echelon(relations, ambient_dim, p);
  std::vector<int> qindex(ambient_dim, -1);
  std::vector<bool> is_piv(ambient_dim, false);
  for (int piv : e.pivots) is_piv[piv] = true;
  for (int i = 0; i < ambient_dim; ++i)
    if (!is_piv[i]) {
      qindex[i] = static_cast<int>(q.complement.size());
      q.complement.push_back(i);
    }
  q.quotient_dim = static_cast<int>(q.complement.size());
  q.proj_cols.assign(ambient_dim, {});
  for (int i = 0; i < ambient_dim; ++i)
    if (!is_piv[i]) q.proj_cols[i] = {{qindex[i], Scalar(1, p)}};
  for (size_t k = 0; k < e.rows.size(); ++k) {
    SVec col;
    for (const auto& [j, c] : e.rows[k])
      if (j != e.pivots[k]) col.emplace_back(qindex[j], -c);
    q.proj_cols[e.pivots[k]] = std::move(col);
  }
  return q;
}

Matrix QuotientPresentation::projection() const {
  Matrix m(quotient_dim, ambient_dim, p);
  for (int j = 0; j < ambient_dim; ++j)
    for (const auto& [i, c] : proj_cols[j]) m(i, j) = c;
  return m;
}

Matrix QuotientPresentation::section() const {
  Matrix m(ambient_dim, quotient_dim, p);
  for (int i = 0; i < quotient_dim; ++i) m(complement[i], i) = Scalar(1, p);
  return m;
}

std::optional<Vec> coordinates(const Echelon& basis, const Vec& v) {
  Vec c = zero_vec(static_cast<int>(basis.rows.size()), basis.p);
  Vec rest = v;
  for (size_t k = 0; k < basis.rows.size(); ++k) {
    c[k] = v[basis.pivots[k]];
    if (!c[k].is_zero())
      for (const auto& [j, x] : basis.rows[k]) rest[j] -= c[k] * x;
  }
  if (!is_zero(rest)) return std::nullopt;
  return c;
}

}  // namespace whcx
