#include "space.hpp"

#include <sstream>
#include <stdexcept>

#include "report.hpp"

namespace whcx {

std::string tuple_str(const std::vector<int>& t) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ')';
  return os.str();
}

std::string basis_witness(const std::vector<int>& idx) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << "e_" << (idx[i] + 1);
  os << ')';
  return os.str();
}

SpacePtr Space::atom(int n, int p, std::string name) {
  auto s = std::make_shared<Space>();
  s->kind_ = Kind::Atom;
  s->dim_ = n;
  s->p_ = p;
  s->shape_ = {n};
  s->name_ = std::move(name);
  return s;
}

SpacePtr Space::unit(int p) {
  auto s = std::make_shared<Space>();
  s->kind_ = Kind::Unit;
  s->dim_ = 1;
  s->p_ = p;
  s->name_ = "k";
  return s;
}

SpacePtr Space::tensor(const SpacePtr& a, const SpacePtr& b) {
  auto s = std::make_shared<Space>();
  s->kind_ = Kind::Tensor;
  s->dim_ = a->dim_ * b->dim_;
  s->p_ = std::max(a->p_, b->p_);
  s->shape_ = a->shape_;
  s->shape_.insert(s->shape_.end(), b->shape_.begin(), b->shape_.end());
  s->name_ = "(" + a->name_ + "⊗" + b->name_ + ")";
  s->a_ = a;
  s->b_ = b;
  return s;
}

SpacePtr Space::quotient(const SpacePtr& base, const std::vector<SVec>& relations) {
  std::vector<Vec> dense_rel;
  dense_rel.reserve(relations.size());
  for (const auto& r : relations) dense_rel.push_back(dense(r, base->dim_, base->p_));
  auto s = std::make_shared<Space>();
  s->kind_ = Kind::Quotient;
  s->p_ = base->p_;
  s->shape_ = base->shape_;
  s->name_ = base->name_ + "/~";
  s->a_ = base;
  s->q_ = make_quotient(base->dim_, dense_rel, base->p_);
  s->dim_ = s->q_.quotient_dim;
  return s;
}

void Space::rep_into(int i, int* out) const {
  switch (kind_) {
    case Kind::Atom:
      out[0] = i;
      return;
    case Kind::Unit:
      return;
    case Kind::Tensor:
      a_->rep_into(i / b_->dim_, out);
      b_->rep_into(i % b_->dim_, out + a_->arity());
      return;
    case Kind::Quotient:
      a_->rep_into(q_.complement[i], out);
      return;
  }
}

Tuple Space::rep(int i) const {
  if (i < 0 || i >= dim_) throw std::out_of_range("Space::rep");
  Tuple t(shape_.size());
  rep_into(i, t.data());
  return t;
}

SVec Space::project(const int* t) const {
  switch (kind_) {
    case Kind::Atom:
      return {{t[0], Scalar(1, p_)}};
    case Kind::Unit:
      return {{0, Scalar(1, p_)}};
    case Kind::Tensor: {
      SVec x = a_->project(t);
      if (x.empty()) return {};
      SVec y = b_->project(t + a_->arity());
      SVec out;
      out.reserve(x.size() * y.size());
      for (const auto& [i, c] : x)
        for (const auto& [j, d] : y) out.emplace_back(i * b_->dim_ + j, c * d);
      return out;
    }
    case Kind::Quotient: {
      SVec x = a_->project(t);
      if (x.size() == 1 && q_.proj_cols[x[0].first].size() <= 1) {
        const auto& col = q_.proj_cols[x[0].first];
        if (col.empty()) return {};
        return {{col[0].first, x[0].second * col[0].second}};
      }
      Vec acc = zero_vec(dim_, p_);
      for (const auto& [j, c] : x) axpy(acc, c, q_.proj_cols[j]);
      return sparse(acc);
    }
  }
  return {};
}

void Space::project_add(const Tuple& t, const Scalar& c, Vec& out) const {
  if (c.is_zero()) return;
  for (const auto& [i, x] : project(t.data())) out[i] += c * x;
}

long tuple_count(const std::vector<int>& shape) {
  long n = 1;
  for (int d : shape) n *= d;
  return n;
}

void for_each_tuple(const std::vector<int>& shape, const std::function<void(const Tuple&)>& fn) {
  for (int d : shape)
    if (d == 0) return;
  Tuple t(shape.size(), 0);
  while (true) {
    fn(t);
    int k = static_cast<int>(shape.size()) - 1;
    while (k >= 0) {
      if (++t[k] < shape[k]) break;
      t[k] = 0;
      --k;
    }
    if (k < 0) return;
  }
}

SpacePtr balanced_tensor(const SpacePtr& v, const SpacePtr& w, int r_dim, const RawAction& right_v,
                         const RawAction& left_w) {
  SpacePtr t = Space::tensor(v, w);
  int p = t->prime();
  int dw = w->dim();
  std::vector<SVec> rels;
  for (int r = 0; r < r_dim; ++r)
    for (int i = 0; i < v->dim(); ++i) {
      Tuple vi = v->rep(i);
      Vec vr = zero_vec(v->dim(), p);
      right_v(vi, r, [&](const Scalar& c, const Tuple& x) { v->project_add(x, c, vr); });
      SVec svr = sparse(vr);
      for (int j = 0; j < dw; ++j) {
        Tuple wj = w->rep(j);
        Vec rw = zero_vec(dw, p);
        left_w(wj, r, [&](const Scalar& c, const Tuple& x) { w->project_add(x, c, rw); });
        Vec rel = zero_vec(t->dim(), p);
        for (const auto& [a, c] : svr) rel[a * dw + j] += c;
        for (int b = 0; b < dw; ++b)
          if (!rw[b].is_zero()) rel[i * dw + b] -= rw[b];
        SVec s = sparse(rel);
        if (!s.empty()) rels.push_back(std::move(s));
      }
    }
  return Space::quotient(t, rels);
}

SpacePtr coinvariants(const SpacePtr& x, int k_dim, const RawAction& left, const RawAction& right) {
  int p = x->prime();
  std::vector<SVec> rels;
  for (int r = 0; r < k_dim; ++r)
    for (int i = 0; i < x->dim(); ++i) {
      Tuple xi = x->rep(i);
      Vec rel = zero_vec(x->dim(), p);
      left(xi, r, [&](const Scalar& c, const Tuple& y) { x->project_add(y, c, rel); });
      right(xi, r, [&](const Scalar& c, const Tuple& y) { x->project_add(y, -c, rel); });
      SVec s = sparse(rel);
      if (!s.empty()) rels.push_back(std::move(s));
    }
  return Space::quotient(x, rels);
}

SpacePtr quotient_by(const SpacePtr& x, const std::vector<Vec>& sub) {
  std::vector<SVec> rels;
  for (const auto& v : sub) rels.push_back(sparse(v));
  return Space::quotient(x, rels);
}

RawAction slot_action(std::shared_ptr<const ActionTable> tab, int slot) {
  return [tab, slot](const Tuple& t, int r, const Emit& emit) {
    int k = slot < 0 ? static_cast<int>(t.size()) + slot : slot;
    Tuple u = t;
    for (const auto& [i, c] : (*tab)[r][t[k]]) {
      u[k] = i;
      emit(c, u);
    }
  };
}

void emit_tensor(const std::vector<const Vec*>& factors, const Scalar& c, const Emit& emit) {
  if (c.is_zero()) return;
  size_t n = factors.size();
  std::vector<SVec> sv(n);
  for (size_t i = 0; i < n; ++i) {
    sv[i] = sparse(*factors[i]);
    if (sv[i].empty()) return;
  }
  Tuple t(n);
  std::vector<size_t> pos(n, 0);
  while (true) {
    Scalar x = c;
    for (size_t i = 0; i < n; ++i) {
      t[i] = sv[i][pos[i]].first;
      x *= sv[i][pos[i]].second;
    }
    emit(x, t);
    bool done = true;
    for (size_t k = n; k-- > 0;) {
      if (++pos[k] < sv[k].size()) {
        done = false;
        break;
      }
      pos[k] = 0;
    }
    if (done) return;
  }
}

void project_tensor(const Space& sp, const std::vector<const Vec*>& factors, const Scalar& c, Vec& out) {
  emit_tensor(factors, c, [&](const Scalar& x, const Tuple& t) { sp.project_add(t, x, out); });
}

Vec eval_projected(const Space& dst, const Formula& f, const Tuple& t) {
  Vec out = zero_vec(dst.dim(), dst.prime());
  f(t, [&](const Scalar& c, const Tuple& y) { dst.project_add(y, c, out); });
  return out;
}

Matrix induce_map(const Space& src, const Space& dst, const Formula& f, bool check, const std::string& label) {
  int p = std::max(src.prime(), dst.prime());
  Matrix m(dst.dim(), src.dim(), p);
  std::vector<Vec> cols;
  for (int i = 0; i < src.dim(); ++i) {
    Vec c = eval_projected(dst, f, src.rep(i));
    m.set_col(i, c);
    cols.push_back(std::move(c));
  }
  if (check && src.dim() > 0) {
    for_each_tuple(src.shape(), [&](const Tuple& t) {
      Vec lhs = eval_projected(dst, f, t);
      Vec rhs = zero_vec(dst.dim(), p);
      for (const auto& [i, c] : src.project(t)) axpy(rhs, c, cols[i]);
      if (lhs != rhs) throw IllDefined(label + " is not well defined on the quotient", t);
    });
  } else if (check) {
    // src = 0: every raw tuple must map to zero.
    for_each_tuple(src.shape(), [&](const Tuple& t) {
      if (!is_zero(eval_projected(dst, f, t))) throw IllDefined(label + " is not well defined on the quotient", t);
    });
  }
  return m;
}

}  // namespace whcx
