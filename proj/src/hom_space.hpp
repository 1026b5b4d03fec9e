#pragma once

#include <functional>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "space.hpp"

namespace whcx {

// φ∘L = R∘φ for a linear map L on the source space and R on the target.
struct Intertwine {
  Matrix L, R;
};

// Linear maps from a presented space into k^dst cut out by intertwining constraints.
// Elements are dst × src.dim matrices; the basis is the kernel basis of the constraints.
class HomSpace {
 public:
  HomSpace(SpacePtr src, int dst_dim, int p, const std::vector<Intertwine>& constraints);

  const SpacePtr& src() const { return src_; }
  int dst_dim() const { return dst_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int prime() const { return p_; }
  const Matrix& element(int k) const { return basis_[k]; }
  Matrix combine(const Vec& c) const;
  // Coordinates of a map in the basis; nullopt if it violates a constraint.
  std::optional<Vec> coords(const Matrix& m) const;

 private:
  SpacePtr src_;
  int dst_, p_;
  std::vector<Matrix> basis_;
  Echelon ech_;
};

// Evaluates a cochain on a raw source tuple.
using Eval = std::function<Vec(const Tuple&)>;
// Value of the new cochain on a raw tuple of the target's source space.
using CoFormula = std::function<Vec(const Tuple&, const Eval&)>;

// Matrix of β ↦ f(β) between Hom spaces. With `check`, f(β) is evaluated on every
// raw tuple and compared with its value through the presentation.
Matrix induce_comap(const HomSpace& src, const HomSpace& dst, const CoFormula& f, bool check = true,
                    const std::string& label = "cochain map");

// Evaluates a single matrix-represented cochain on raw tuples.
Eval evaluator(const Space& sp, const Matrix& beta);

// Matrix of a linear map on a presented space given by left-multiplying each
// value by a fixed matrix, as used for intertwining constraints.
Matrix action_matrix(const Space& sp, const Formula& f, const std::string& label);

}  // namespace whcx
