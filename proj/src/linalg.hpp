#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace whcx {

using Vec = std::vector<Scalar>;
using SVec = std::vector<std::pair<int, Scalar>>;

Vec zero_vec(int n, int p);
Vec unit_vec(int n, int i, int p);
bool is_zero(const Vec& v);
void axpy(Vec& y, const Scalar& a, const Vec& x);  // y += a x
void axpy(Vec& y, const Scalar& a, const SVec& x);
SVec sparse(const Vec& v);
Vec dense(const SVec& v, int n, int p);

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, int p);

  static Matrix identity(int n, int p);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols, int p);
  static Matrix from_cols(const std::vector<Vec>& cols, int rows, int p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int prime() const { return p_; }
  Scalar& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Vec row(int i) const;
  Vec col(int j) const;
  void set_col(int j, const Vec& v);
  Matrix transpose() const;
  bool is_zero() const;
  Vec apply(const Vec& x) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  int rows_ = 0, cols_ = 0, p_ = 0;
  std::vector<Scalar> a_;
};

// Reduced row echelon form; pivots are chosen at the lowest available column.
struct Echelon {
  std::vector<SVec> rows;  // nonzero reduced rows, sorted by column
  std::vector<int> pivots;
  int cols = 0;
  int p = 0;
};

Echelon echelon(const std::vector<Vec>& rows, int cols, int p);
Echelon echelon_sparse(const std::vector<SVec>& rows, int cols, int p);
Echelon echelon(const Matrix& m);

int rank(const Matrix& m);
std::vector<Vec> kernel_basis(const Matrix& m);
std::vector<Vec> kernel_basis(const Echelon& e);
std::optional<Matrix> solve_linear(const Matrix& m, const Matrix& rhs);

// Quotient of k^ambient by the span of `relations`. The complement basis is
// formed by the standard vectors at non-pivot positions.
struct QuotientPresentation {
  int ambient_dim = 0;
  int quotient_dim = 0;
  std::vector<Vec> relations;
  std::vector<int> complement;   // ambient index of each quotient basis vector
  std::vector<SVec> proj_cols;   // projection of each ambient basis vector
  Matrix projection() const;
  Matrix section() const;
  int p = 0;
};

QuotientPresentation make_quotient(int ambient_dim, const std::vector<Vec>& relations, int p);

// Coordinates in a subspace given by an echelon basis; nullopt if v is outside.
std::optional<Vec> coordinates(const Echelon& basis, const Vec& v);

}  // namespace whcx
