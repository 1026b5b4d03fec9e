#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace whcx {

using Tuple = std::vector<int>;
using Emit = std::function<void(const Scalar&, const Tuple&)>;
// A multilinear formula given on raw basis tuples, emitting raw output tuples.
using Formula = std::function<void(const Tuple&, const Emit&)>;

class Space;
using SpacePtr = std::shared_ptr<const Space>;

// A finite-dimensional space presented as an iterated quotient of tensor
// products of atomic spaces. Elements of the atomic tensor power are "raw";
// every quotient basis vector is represented by a single raw tuple.
class Space {
 public:
  enum class Kind { Atom, Unit, Tensor, Quotient };

  static SpacePtr atom(int n, int p, std::string name = {});
  static SpacePtr unit(int p);
  static SpacePtr tensor(const SpacePtr& a, const SpacePtr& b);
  static SpacePtr quotient(const SpacePtr& base, const std::vector<SVec>& relations);

  int dim() const { return dim_; }
  int arity() const { return static_cast<int>(shape_.size()); }
  int prime() const { return p_; }
  const std::vector<int>& shape() const { return shape_; }
  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  Tuple rep(int i) const;
  SVec project(const int* t) const;
  SVec project(const Tuple& t) const { return project(t.data()); }
  void project_add(const Tuple& t, const Scalar& c, Vec& out) const;

  // Quotient structure (Kind::Quotient only).
  const SpacePtr& base() const { return a_; }
  const QuotientPresentation& presentation() const { return q_; }

 private:
  void rep_into(int i, int* out) const;

  Kind kind_ = Kind::Atom;
  int dim_ = 0, p_ = 0;
  std::vector<int> shape_;
  std::string name_;
  SpacePtr a_, b_;
  QuotientPresentation q_;
};

// Calls fn on every raw tuple of the given shape (odometer order).
void for_each_tuple(const std::vector<int>& shape, const std::function<void(const Tuple&)>& fn);
long tuple_count(const std::vector<int>& shape);

// Raw one-sided action of basis element r on a raw tuple.
using RawAction = std::function<void(const Tuple&, int, const Emit&)>;

// tab[r][i] is the image of atom basis i under basis element r of the ring.
using ActionTable = std::vector<std::vector<SVec>>;
// Acts on one tuple slot; negative slots count from the end.
RawAction slot_action(std::shared_ptr<const ActionTable> tab, int slot);

// Projects c·(x_1⊗…⊗x_n), each x_i in the coordinates of the matching atom.
void project_tensor(const Space& sp, const std::vector<const Vec*>& factors, const Scalar& c, Vec& out);
// Emits the raw tuples of c·(x_1⊗…⊗x_n).
void emit_tensor(const std::vector<const Vec*>& factors, const Scalar& c, const Emit& emit);

// V ⊗_R W for a right action of R on V and a left action on W.
SpacePtr balanced_tensor(const SpacePtr& v, const SpacePtr& w, int r_dim, const RawAction& right_v,
                         const RawAction& left_w);
// X / [X,K] for commuting left and right actions of K on X.
SpacePtr coinvariants(const SpacePtr& x, int k_dim, const RawAction& left, const RawAction& right);
// X / span(sub), sub given in the coordinates of X.
SpacePtr quotient_by(const SpacePtr& x, const std::vector<Vec>& sub);

struct IllDefined : std::runtime_error {
  IllDefined(const std::string& what, Tuple w) : std::runtime_error(what), witness(std::move(w)) {}
  Tuple witness;
};

// Matrix of the map induced by a formula on representatives. When `check`
// is set, the formula is evaluated on every raw tuple of src and compared
// with the induced matrix; a mismatch throws IllDefined.
Matrix induce_map(const Space& src, const Space& dst, const Formula& f, bool check = true,
                  const std::string& label = "map");

// Evaluates a formula on one raw tuple and projects into dst.
Vec eval_projected(const Space& dst, const Formula& f, const Tuple& t);

}  // namespace whcx
