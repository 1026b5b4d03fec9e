#include "cleft.hpp"

#include <functional>
#include <stdexcept>
#include <string>

#include "cleft_detail.hpp"
#include "hspaces.hpp"

namespace whcx {

Matrix Bimodule::left_of(const Vec& e) const {
  Matrix m(dim, dim, p);
  for (size_t x = 0; x < e.size(); ++x)
    if (!e[x].is_zero()) m = m + e[x] * left[x];
  return m;
}

Matrix Bimodule::right_of(const Vec& e) const {
  Matrix m(dim, dim, p);
  for (size_t x = 0; x < e.size(); ++x)
    if (!e[x].is_zero()) m = m + e[x] * right[x];
  return m;
}

Report Bimodule::verify(const Algebra& e) const {
  Report r;
  Matrix id = Matrix::identity(dim, p);
  r.add("bimodule unital", left_of(e.unit) == id && right_of(e.unit) == id, "1");
  bool la = true, ra = true, cm = true;
  std::string wl, wr, wc;
  for (int x = 0; x < e.dim; ++x)
    for (int y = 0; y < e.dim; ++y) {
      Vec xy = e.mul(e.basis(x), e.basis(y));
      if (la && !(left_of(xy) == left[x] * left[y])) {
        la = false;
        wl = basis_witness({x, y});
      }
      if (ra && !(right_of(xy) == right[y] * right[x])) {
        ra = false;
        wr = basis_witness({x, y});
      }
      if (cm && !(left[x] * right[y] == right[y] * left[x])) {
        cm = false;
        wc = basis_witness({x, y});
      }
    }
  r.add("bimodule left associative", la, wl);
  r.add("bimodule right associative", ra, wr);
  r.add("bimodule actions commute", cm, wc);
  return r;
}

Bimodule regular_bimodule(const Algebra& e) {
  Bimodule m{e.dim, e.p, {}, {}};
  for (int x = 0; x < e.dim; ++x) {
    Matrix l(e.dim, e.dim, e.p), r(e.dim, e.dim, e.p);
    for (int y = 0; y < e.dim; ++y) {
      l.set_col(y, e.mul(e.basis(x), e.basis(y)));
      r.set_col(y, e.mul(e.basis(y), e.basis(x)));
    }
    m.left.push_back(std::move(l));
    m.right.push_back(std::move(r));
  }
  return m;
}

namespace detail {

Scalar sgn(int k, int p) { return (k % 2) ? Scalar(-1, p) : Scalar(1, p); }

// Emits c·(pre ⊗ fs[0] ⊗ … ⊗ post) with fs given in atom coordinates.
void emit_mixed(const Tuple& pre, const std::vector<Vec>& fs, const Tuple& post, const Scalar& c, const Emit& e) {
  if (c.is_zero()) return;
  Tuple t = pre;
  t.resize(pre.size() + fs.size());
  t.insert(t.end(), post.begin(), post.end());
  size_t base = pre.size();
  std::function<void(size_t, const Scalar&)> rec = [&](size_t k, const Scalar& acc) {
    if (k == fs.size()) {
      e(acc, t);
      return;
    }
    const Vec& v = fs[k];
    for (size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) {
        t[base + k] = static_cast<int>(i);
        rec(k + 1, acc * v[i]);
      }
  };
  rec(0, c);
}

// Σ c·ev(pre ⊗ fs ⊗ post).
Vec eval_mixed(const Eval& ev, int dst, int p, const Tuple& pre, const std::vector<Vec>& fs, const Tuple& post) {
  Vec out = zero_vec(dst, p);
  emit_mixed(pre, fs, post, Scalar(1, p), [&](const Scalar& c, const Tuple& t) { axpy(out, c, ev(t)); });
  return out;
}

std::shared_ptr<const ActionTable> table_of(int n_ring, int n_atom, const std::function<Vec(int, int)>& f) {
  auto tab = std::make_shared<ActionTable>(n_ring, std::vector<SVec>(n_atom));
  for (int r = 0; r < n_ring; ++r)
    for (int x = 0; x < n_atom; ++x) (*tab)[r][x] = sparse(f(r, x));
  return tab;
}

Formula as_formula(const RawAction& act, int r) {
  return [act, r](const Tuple& t, const Emit& e) { act(t, r, e); };
}

Tuple slice(const Tuple& t, int a, int b) { return Tuple(t.begin() + a, t.begin() + b); }

}  // namespace detail

using namespace detail;

Cleft::Cleft(std::shared_ptr<const CrossedProduct> cp, std::vector<Vec> k, Bimodule m)
    : cp_(std::move(cp)), m_(std::move(m)) {
  int p = cp_->p();
  int dA = cp_->dA();
  Echelon e = echelon(k, dA, p);
  for (const auto& r : e.rows) k_.push_back(dense(r, dA, p));
  if (m_.dim && static_cast<int>(m_.left.size()) != cp_->dim()) throw std::invalid_argument("bimodule size differs from E");
  const Algebra& A = cp_->A();
  int dk = dK();
  ka_left_ = table_of(dk, dA, [&](int l, int a) { return A.mul(k_[l], A.basis(a)); });
  ka_right_ = table_of(dk, dA, [&](int l, int a) { return A.mul(A.basis(a), k_[l]); });
  std::vector<Matrix> jl, jr;
  for (int l = 0; l < dk; ++l) {
    Vec jk = cp_->j(k_[l]);
    jl.push_back(m_.left_of(jk));
    jr.push_back(m_.right_of(jk));
  }
  km_left_ = table_of(dk, m_.dim, [&](int l, int x) { return jl[l].col(x); });
  km_right_ = table_of(dk, m_.dim, [&](int l, int x) { return jr[l].col(x); });
  ke_right_ = table_of(dk, cp_->dim(), [&](int l, int x) {
    return cp_->mul(unit_vec(cp_->dim(), x, p), cp_->j(k_[l]));
  });
  const auto& hl = H().hl_basis();
  std::vector<Matrix> gs;
  for (const auto& l : hl) gs.push_back(m_.right_of(cp_->gamma(H().S(l))));
  hl_m_ = table_of(static_cast<int>(hl.size()), m_.dim, [&](int l, int x) { return gs[l].col(x); });
}

bool Cleft::k_valued() const { return cocycle_in(cp_->f(), k_, p()); }

void Cleft::require_k_valued() const {
  if (!k_valued()) throw Unsupported("UnsupportedCocycle: f does not take its values in K");
}

Vec Cleft::m_left(const Vec& e, const Vec& m) const {
  Vec out = zero_vec(m_.dim, p());
  for (size_t x = 0; x < e.size(); ++x)
    if (!e[x].is_zero()) axpy(out, e[x], m_.left[x].apply(m));
  return out;
}

Vec Cleft::m_right(const Vec& m, const Vec& e) const {
  Vec out = zero_vec(m_.dim, p());
  for (size_t x = 0; x < e.size(); ++x)
    if (!e[x].is_zero()) axpy(out, e[x], m_.right[x].apply(m));
  return out;
}

Vec Cleft::gamma_times(const Tuple& hs) const {
  Vec out = cp_->one();
  for (int h : hs) out = cp_->mul(out, cp_->gamma(h));
  return out;
}

Vec Cleft::gamma_inv_times(const Tuple& hs) const {
  Vec out = cp_->one();
  for (int i = static_cast<int>(hs.size()) - 1; i >= 0; --i) out = cp_->mul(out, cp_->gamma_inv(hs[i]));
  return out;
}

Vec Cleft::act_chain(const Tuple& hs, const Vec& a) const {
  Vec v = a;
  for (int i = static_cast<int>(hs.size()) - 1; i >= 0; --i) v = cp_->measure().act(hs[i], v);
  return v;
}

SpacePtr Cleft::abar_power(int r) const {
  std::lock_guard<std::mutex> g(mu_);
  auto it = abar_.find(r);
  if (it != abar_.end()) return it->second;
  SpacePtr out;
  if (r == 0) {
    out = Space::unit(p());
  } else {
    SpacePtr ab = quotient_by(Space::atom(cp_->dA(), p(), "A"), k_);
    out = ab;
    for (int k = 1; k < r; ++k)
      out = balanced_tensor(out, ab, dK(), slot_action(ka_right_, -1), slot_action(ka_left_, 0));
  }
  abar_[r] = out;
  return out;
}

SpacePtr Cleft::w(int r) const {
  SpacePtr ar = r ? abar_power(r) : nullptr;
  std::lock_guard<std::mutex> g(mu_);
  auto it = w_.find(r);
  if (it != w_.end()) return it->second;
  SpacePtr atom = Space::atom(m_.dim, p(), "M");
  SpacePtr out;
  if (r == 0) {
    out = coinvariants(atom, dK(), slot_action(km_left_, 0), slot_action(km_right_, 0));
  } else {
    SpacePtr bt = balanced_tensor(atom, ar, dK(), slot_action(km_right_, 0), slot_action(ka_left_, 0));
    out = coinvariants(bt, dK(), slot_action(km_left_, 0), slot_action(ka_right_, -1));
  }
  w_[r] = out;
  return out;
}

SpacePtr Cleft::xbar(int r, int s) const {
  SpacePtr wr = w(r);
  std::lock_guard<std::mutex> g(mu_);
  auto it = xbar_.find({r, s});
  if (it != xbar_.end()) return it->second;
  SpacePtr out = hbar_over(H(), s, wr, slot_action(hl_m_, 0));
  xbar_[{r, s}] = out;
  return out;
}

SpacePtr Cleft::xhat(int r, int s) const {
  if (s == 0) return w(r);
  SpacePtr ar = r ? abar_power(r) : nullptr;
  std::lock_guard<std::mutex> g(mu_);
  auto it = xhat_.find({r, s});
  if (it != xhat_.end()) return it->second;
  int p = this->p();
  const CrossedProduct& cp = *cp_;
  std::vector<Matrix> ja;
  for (int a = 0; a < cp.dA(); ++a) ja.push_back(m_.right_of(cp.j(a)));
  auto ma_right = table_of(cp.dA(), m_.dim, [&](int a, int x) { return ja[a].col(x); });
  SpacePtr cur = etilde_over(cp, Space::atom(m_.dim, p, "M"), slot_action(ma_right, 0), s);
  if (r) cur = balanced_tensor(cur, ar, dK(), slot_action(ke_right_, -1), slot_action(ka_left_, 0));
  SpacePtr out = coinvariants(cur, dK(), slot_action(km_left_, 0), slot_action(r ? ka_right_ : ke_right_, -1));
  xhat_[{r, s}] = out;
  return out;
}

SpacePtr Cleft::xbar_domain(int r, int s) const {
  SpacePtr ar = abar_power(r);
  std::lock_guard<std::mutex> g(mu_);
  auto it = xbar_dom_.find({r, s});
  if (it != xbar_dom_.end()) return it->second;
  SpacePtr out = s == 0 ? ar : (r == 0 ? hbar_power(H(), s) : Space::tensor(hbar_power(H(), s), ar));
  xbar_dom_[{r, s}] = out;
  return out;
}

SpacePtr Cleft::xhat_domain(int r, int s) const {
  if (s == 0) return abar_power(r);
  SpacePtr ar = r ? abar_power(r) : nullptr;
  std::lock_guard<std::mutex> g(mu_);
  auto it = xhat_dom_.find({r, s});
  if (it != xhat_dom_.end()) return it->second;
  const CrossedProduct& cp = *cp_;
  SpacePtr cur = etilde_over(cp, etilde(cp), slot_action(e_right_a(cp), -1), s - 1);
  if (r) cur = balanced_tensor(cur, ar, dK(), slot_action(ke_right_, -1), slot_action(ka_left_, 0));
  xhat_dom_[{r, s}] = cur;
  return cur;
}

const HomSpace& Cleft::xbar_co(int r, int s) const {
  {
    std::lock_guard<std::mutex> g(mu_);
    auto it = xbar_co_.find({r, s});
    if (it != xbar_co_.end()) return *it->second;
  }
  SpacePtr d = xbar_domain(r, s);
  int p = this->p();
  std::vector<Intertwine> cons;
  if (s >= 1) {
    auto right = slot_action(hl_right_table(H()), s - 1);
    const auto& hl = H().hl_basis();
    for (size_t l = 0; l < hl.size(); ++l)
      cons.push_back({action_matrix(*d, as_formula(right, static_cast<int>(l)), "right H^L action"),
                      m_.left_of(cp_->gamma(H().S(hl[l])))});
  }
  for (int l = 0; l < dK(); ++l) {
    Vec jk = cp_->j(k_[l]);
    if (r >= 1) {
      cons.push_back({action_matrix(*d, as_formula(slot_action(ka_left_, s), l), "left K action"), m_.left_of(jk)});
      cons.push_back({action_matrix(*d, as_formula(slot_action(ka_right_, -1), l), "right K action"), m_.right_of(jk)});
    } else {
      cons.push_back({Matrix(d->dim(), d->dim(), p), m_.left_of(jk) - m_.right_of(jk)});
    }
  }
  auto hs = std::make_shared<HomSpace>(d, m_.dim, p, cons);
  std::lock_guard<std::mutex> g(mu_);
  return *xbar_co_.emplace(std::make_pair(r, s), hs).first->second;
}

const HomSpace& Cleft::xhat_co(int r, int s) const {
  if (s == 0) return xbar_co(r, 0);
  {
    std::lock_guard<std::mutex> g(mu_);
    auto it = xhat_co_.find({r, s});
    if (it != xhat_co_.end()) return *it->second;
  }
  SpacePtr d = xhat_domain(r, s);
  int p = this->p();
  std::vector<Intertwine> cons;
  auto left = slot_action(e_left_a(*cp_), 0);
  for (int a = 0; a < cp_->dA(); ++a)
    cons.push_back({action_matrix(*d, as_formula(left, a), "left A action"), m_.left_of(cp_->j(a))});
  auto right = slot_action(r ? ka_right_ : ke_right_, -1);
  for (int l = 0; l < dK(); ++l)
    cons.push_back({action_matrix(*d, as_formula(right, l), "right K action"), m_.right_of(cp_->j(k_[l]))});
  auto hs = std::make_shared<HomSpace>(d, m_.dim, p, cons);
  std::lock_guard<std::mutex> g(mu_);
  return *xhat_co_.emplace(std::make_pair(r, s), hs).first->second;
}

namespace detail {

// Σ c·(γ⁻¹(h^{(1)}), h^{(2)}·ā, γ(h^{(3)})).
void for_each_F(const Cleft& c, int h, const Tuple& a,
                const std::function<void(const Scalar&, const Vec&, const std::vector<Vec>&, const Vec&)>& fn) {
  int r = static_cast<int>(a.size());
  const CrossedProduct& cp = c.cp();
  for_each_sweedler(c.H(), {h}, r + 2, [&](const Scalar& k, const std::vector<Tuple>& parts) {
    std::vector<Vec> af;
    for (int i = 0; i < r; ++i) af.push_back(cp.measure().act(parts[i + 1][0], a[i]));
    fn(k, cp.gamma_inv(parts[0][0]), af, cp.gamma(parts[r + 1][0]));
  });
}

// Σ ±c·(γ⁻¹(l^{(1)})γ⁻¹(h^{(1)}), 𝔗(h^{(2)}, l^{(2)}, ā), γ(h^{(3)}l^{(3)})), sign (−1)^i included.
void for_each_T(const Cleft& c, int h, int l, const Tuple& a,
                const std::function<void(const Scalar&, const Vec&, const std::vector<Vec>&, const Vec&)>& fn) {
  int r = static_cast<int>(a.size());
  const CrossedProduct& cp = c.cp();
  const WeakHopf& H = c.H();
  int p = c.p();
  const Cocycle& f = cp.f();
  for_each_sweedler(H, {h, l}, r + 3, [&](const Scalar& k, const std::vector<Tuple>& parts) {
    Vec ginv = cp.mul(cp.gamma_inv(parts[0][1]), cp.gamma_inv(parts[0][0]));
    Vec g = cp.gamma(H.mul(unit_vec(H.dim(), parts[r + 2][0], p), unit_vec(H.dim(), parts[r + 2][1], p)));
    for (int i = 0; i <= r; ++i) {
      std::vector<Vec> af;
      for (int j = 1; j <= i; ++j) af.push_back(c.act_chain({parts[j][0], parts[j][1]}, c.A().basis(a[j - 1])));
      af.push_back(f[parts[i + 1][0]][parts[i + 1][1]]);
      for (int q = i + 1; q <= r; ++q) {
        Vec hl = H.mul(unit_vec(H.dim(), parts[q + 1][0], p), unit_vec(H.dim(), parts[q + 1][1], p));
        af.push_back(cp.measure().act(hl, c.A().basis(a[q - 1])));
      }
      fn(k * sgn(i, p), ginv, af, g);
    }
  });
}

}  // namespace detail

Matrix Cleft::d0(int r, int s) const {
  if (r < 1) throw std::invalid_argument("d̄⁰ needs r ≥ 1");
  int p = this->p();
  const Cleft* c = this;
  Formula f = [c, r, s, p](const Tuple& t, const Emit& e) {
    const CrossedProduct& cp = c->cp();
    const Algebra& A = c->A();
    Tuple hs = slice(t, 0, s);
    Vec m = unit_vec(c->M().dim, t[s], p);
    Tuple a = slice(t, s + 1, s + 1 + r);
    emit_mixed(hs, {c->m_right(m, cp.j(a[0]))}, slice(a, 1, r), Scalar(1, p), e);
    for (int i = 1; i <= r - 1; ++i) {
      std::vector<Vec> fs{m};
      for (int k = 0; k < r; ++k) {
        if (k == i - 1) {
          fs.push_back(A.mul(A.basis(a[k]), A.basis(a[k + 1])));
          ++k;
        } else {
          fs.push_back(A.basis(a[k]));
        }
      }
      emit_mixed(hs, fs, {}, sgn(i, p), e);
    }
    emit_mixed(hs, {c->m_left(cp.j(a[r - 1]), m)}, slice(a, 0, r - 1), sgn(r, p), e);
  };
  return induce_map(*xbar(r, s), *xbar(r - 1, s), f, true, "d̄⁰");
}

Matrix Cleft::d1(int r, int s) const {
  if (s < 1) throw std::invalid_argument("d̄¹ needs s ≥ 1");
  int p = this->p();
  const Cleft* c = this;
  Formula f = [c, r, s, p](const Tuple& t, const Emit& e) {
    const CrossedProduct& cp = c->cp();
    const WeakHopf& H = c->H();
    Tuple hs = slice(t, 0, s);
    Vec m = unit_vec(c->M().dim, t[s], p);
    Tuple a = slice(t, s + 1, s + 1 + r);
    Scalar sr = sgn(r, p);
    if (s == 1) {
      emit_mixed({}, {c->m_right(m, cp.gamma(H.pi_r().col(hs[0])))}, a, sr, e);
      for_each_F(*c, hs[0], a, [&](const Scalar& k, const Vec& ginv, const std::vector<Vec>& af, const Vec& g) {
        std::vector<Vec> fs{c->m_left(g, c->m_right(m, ginv))};
        fs.insert(fs.end(), af.begin(), af.end());
        emit_mixed({}, fs, {}, -sr * k, e);
      });
      return;
    }
    Tuple rest = slice(t, 2, t.size());
    emit_mixed({}, {H.mul(H.pib_r().col(hs[0]), unit_vec(H.dim(), hs[1], p))}, rest, sr, e);
    for (int i = 1; i <= s - 1; ++i) {
      Tuple pre = slice(t, 0, i - 1);
      Tuple post = slice(t, i + 1, t.size());
      emit_mixed(pre, {H.mul(unit_vec(H.dim(), hs[i - 1], p), unit_vec(H.dim(), hs[i], p))}, post, sr * sgn(i, p), e);
    }
    Tuple pre = slice(hs, 0, s - 1);
    for_each_F(*c, hs[s - 1], a, [&](const Scalar& k, const Vec& ginv, const std::vector<Vec>& af, const Vec& g) {
      std::vector<Vec> fs{c->m_left(g, c->m_right(m, ginv))};
      fs.insert(fs.end(), af.begin(), af.end());
      emit_mixed(pre, fs, {}, sr * sgn(s, p) * k, e);
    });
  };
  return induce_map(*xbar(r, s), *xbar(r, s - 1), f, true, "d̄¹");
}

Matrix Cleft::d2(int r, int s) const {
  if (s < 2) throw std::invalid_argument("d̄² needs s ≥ 2");
  int p = this->p();
  const Cleft* c = this;
  Formula f = [c, r, s, p](const Tuple& t, const Emit& e) {
    Tuple pre = slice(t, 0, s - 2);
    Vec m = unit_vec(c->M().dim, t[s], p);
    Tuple a = slice(t, s + 1, s + 1 + r);
    for_each_T(*c, t[s - 2], t[s - 1], a, [&](const Scalar& k, const Vec& ginv, const std::vector<Vec>& af, const Vec& g) {
      std::vector<Vec> fs{c->m_left(g, c->m_right(m, ginv))};
      fs.insert(fs.end(), af.begin(), af.end());
      emit_mixed(pre, fs, {}, -k, e);
    });
  };
  return induce_map(*xbar(r, s), *xbar(r + 1, s - 2), f, true, "d̄²");
}

Matrix Cleft::theta(int r, int s) const {
  int p = this->p();
  const Cleft* c = this;
  Formula f = [c, r, s, p](const Tuple& t, const Emit& e) {
    const CrossedProduct& cp = c->cp();
    Vec m = unit_vec(c->M().dim, t[0], p);
    Tuple a = slice(t, 1 + s, 1 + s + r);
    Scalar sign = sgn(r * s, p);
    std::vector<const AH*> pick(s);
    std::function<void(int, const Scalar&)> rec = [&](int i, const Scalar& acc) {
      if (i == s) {
        Tuple hs;
        for (auto* x : pick) hs.push_back(x->h);
        for_each_sweedler(c->H(), hs, 2, [&](const Scalar& k, const std::vector<Tuple>& parts) {
          Vec x = cp.one();
          for (int q = 0; q < s; ++q) x = cp.mul(cp.mul(x, cp.j(pick[q]->a)), cp.gamma(parts[0][q]));
          emit_mixed(parts[1], {c->m_right(m, x)}, a, sign * acc * k, e);
        });
        return;
      }
      for (const auto& term : cp.expand(t[1 + i])) {
        pick[i] = &term;
        rec(i + 1, acc * term.c);
      }
    };
    rec(0, Scalar(1, p));
  };
  return induce_map(*xhat(r, s), *xbar(r, s), f, true, "Θ");
}

Matrix Cleft::lambda(int r, int s) const {
  int p = this->p();
  const Cleft* c = this;
  Formula f = [c, r, s, p](const Tuple& t, const Emit& e) {
    const CrossedProduct& cp = c->cp();
    Tuple hs = slice(t, 0, s);
    Vec m = unit_vec(c->M().dim, t[s], p);
    Tuple a = slice(t, s + 1, s + 1 + r);
    for_each_sweedler(c->H(), hs, 2, [&](const Scalar& k, const std::vector<Tuple>& parts) {
      std::vector<Vec> fs{c->m_right(m, c->gamma_inv_times(parts[0]))};
      for (int q = 0; q < s; ++q) fs.push_back(cp.gamma(parts[1][q]));
      emit_mixed({}, fs, a, sgn(r * s, p) * k, e);
    });
  };
  return induce_map(*xbar(r, s), *xhat(r, s), f, true, "Λ");
}

Matrix Cleft::co_d0(int r, int s, bool printed) const {
  if (r < 1) throw std::invalid_argument("d_0 needs r ≥ 1");
  int p = this->p();
  int dm = m_.dim;
  const Cleft* c = this;
  CoFormula f = [c, r, s, p, dm, printed](const Tuple& t, const Eval& ev) {
    const CrossedProduct& cp = c->cp();
    const Algebra& A = c->A();
    Tuple hs = slice(t, 0, s);
    Tuple a = slice(t, s, s + r);
    Tuple y = hs;
    y.insert(y.end(), a.begin() + 1, a.end());
    Vec out = c->m_left(cp.j(a[0]), ev(y));
    for (int i = 1; i <= r - 1; ++i) {
      std::vector<Vec> fs;
      for (int k = 0; k < r; ++k) {
        if (k == i - 1) {
          fs.push_back(A.mul(A.basis(a[k]), A.basis(a[k + 1])));
          ++k;
        } else {
          fs.push_back(A.basis(a[k]));
        }
      }
      axpy(out, sgn(i, p), eval_mixed(ev, dm, p, hs, fs, {}));
    }
    Tuple z = hs;
    z.insert(z.end(), a.begin(), a.end() - 1);
    axpy(out, printed ? Scalar(1, p) : sgn(r, p), c->m_right(ev(z), cp.j(a[r - 1])));
    return out;
  };
  return induce_comap(xbar_co(r - 1, s), xbar_co(r, s), f, true, printed ? "d_0 (printed)" : "d̄_0");
}

Matrix Cleft::co_d1(int r, int s) const {
  if (s < 1) throw std::invalid_argument("d̄_1 needs s ≥ 1");
  int p = this->p();
  int dm = m_.dim;
  const Cleft* c = this;
  CoFormula f = [c, r, s, p, dm](const Tuple& t, const Eval& ev) {
    const CrossedProduct& cp = c->cp();
    const WeakHopf& H = c->H();
    Tuple hs = slice(t, 0, s);
    Tuple a = slice(t, s, s + r);
    Scalar sr = sgn(r, p);
    Vec out = zero_vec(dm, p);
    if (s == 1) {
      axpy(out, sr, c->m_left(cp.gamma(H.pi_r().col(hs[0])), ev(a)));
      for_each_F(*c, hs[0], a, [&](const Scalar& k, const Vec& ginv, const std::vector<Vec>& af, const Vec& g) {
        axpy(out, -sr * k, c->m_right(c->m_left(ginv, eval_mixed(ev, dm, p, {}, af, {})), g));
      });
      return out;
    }
    Tuple rest = slice(t, 2, t.size());
    axpy(out, sr, eval_mixed(ev, dm, p, {}, {H.mul(H.pib_r().col(hs[0]), unit_vec(H.dim(), hs[1], p))}, rest));
    for (int i = 1; i <= s - 1; ++i) {
      Tuple pre = slice(t, 0, i - 1);
      Tuple post = slice(t, i + 1, t.size());
      axpy(out, sr * sgn(i, p),
           eval_mixed(ev, dm, p, pre, {H.mul(unit_vec(H.dim(), hs[i - 1], p), unit_vec(H.dim(), hs[i], p))}, post));
    }
    Tuple pre = slice(hs, 0, s - 1);
    for_each_F(*c, hs[s - 1], a, [&](const Scalar& k, const Vec& ginv, const std::vector<Vec>& af, const Vec& g) {
      axpy(out, sr * sgn(s, p) * k, c->m_right(c->m_left(ginv, eval_mixed(ev, dm, p, pre, af, {})), g));
    });
    return out;
  };
  return induce_comap(xbar_co(r, s - 1), xbar_co(r, s), f, true, "d̄_1");
}

Matrix Cleft::co_d2(int r, int s) const {
  if (s < 2) throw std::invalid_argument("d̄_2 needs s ≥ 2");
  int p = this->p();
  int dm = m_.dim;
  const Cleft* c = this;
  CoFormula f = [c, r, s, p, dm](const Tuple& t, const Eval& ev) {
    Tuple pre = slice(t, 0, s - 2);
    Tuple a = slice(t, s, s + r);
    Vec out = zero_vec(dm, p);
    for_each_T(*c, t[s - 2], t[s - 1], a, [&](const Scalar& k, const Vec& ginv, const std::vector<Vec>& af, const Vec& g) {
      axpy(out, -k, c->m_right(c->m_left(ginv, eval_mixed(ev, dm, p, pre, af, {})), g));
    });
    return out;
  };
  return induce_comap(xbar_co(r + 1, s - 2), xbar_co(r, s), f, true, "d̄_2");
}

Matrix Cleft::co_theta(int r, int s) const {
  int p = this->p();
  int dm = m_.dim;
  const Cleft* c = this;
  CoFormula f = [c, r, s, p, dm](const Tuple& t, const Eval& ev) {
    const CrossedProduct& cp = c->cp();
    Tuple a = slice(t, s, s + r);
    Vec out = zero_vec(dm, p);
    std::vector<const AH*> pick(s);
    std::function<void(int, const Scalar&)> rec = [&](int i, const Scalar& acc) {
      if (i == s) {
        Tuple hs;
        for (auto* x : pick) hs.push_back(x->h);
        for_each_sweedler(c->H(), hs, 2, [&](const Scalar& k, const std::vector<Tuple>& parts) {
          Vec x = cp.one();
          for (int q = 0; q < s; ++q) x = cp.mul(cp.mul(x, cp.j(pick[q]->a)), cp.gamma(parts[0][q]));
          Tuple y = parts[1];
          y.insert(y.end(), a.begin(), a.end());
          axpy(out, acc * k, c->m_left(x, ev(y)));
        });
        return;
      }
      for (const auto& term : cp.expand(t[i])) {
        pick[i] = &term;
        rec(i + 1, acc * term.c);
      }
    };
    rec(0, sgn(r * s, p));
    return out;
  };
  return induce_comap(xbar_co(r, s), xhat_co(r, s), f, true, "Θ^*");
}

Matrix Cleft::co_lambda(int r, int s) const {
  int p = this->p();
  int dm = m_.dim;
  const Cleft* c = this;
  CoFormula f = [c, r, s, p, dm](const Tuple& t, const Eval& ev) {
    const CrossedProduct& cp = c->cp();
    Tuple hs = slice(t, 0, s);
    Tuple a = slice(t, s, s + r);
    Vec out = zero_vec(dm, p);
    for_each_sweedler(c->H(), hs, 2, [&](const Scalar& k, const std::vector<Tuple>& parts) {
      std::vector<Vec> fs;
      for (int q = 0; q < s; ++q) fs.push_back(cp.gamma(parts[1][q]));
      axpy(out, sgn(r * s, p) * k, c->m_left(c->gamma_inv_times(parts[0]), eval_mixed(ev, dm, p, {}, fs, a)));
    });
    return out;
  };
  return induce_comap(xhat_co(r, s), xbar_co(r, s), f, true, "Λ^*");
}

const std::vector<Matrix>& Cleft::f_basis(int r) const {
  {
    std::lock_guard<std::mutex> g(mu_);
    auto it = f_basis_.find(r);
    if (it != f_basis_.end()) return it->second;
  }
  int p = this->p();
  std::vector<Matrix> out;
  SpacePtr wr = w(r);
  for (int h = 0; h < H().dim(); ++h) {
    const Cleft* c = this;
    Formula f = [c, r, h, p](const Tuple& t, const Emit& e) {
      Vec m = unit_vec(c->M().dim, t[0], p);
      for_each_F(*c, h, slice(t, 1, 1 + r), [&](const Scalar& k, const Vec& ginv, const std::vector<Vec>& af, const Vec& g) {
        std::vector<Vec> fs{c->m_left(g, c->m_right(m, ginv))};
        fs.insert(fs.end(), af.begin(), af.end());
        emit_mixed({}, fs, {}, k, e);
      });
    };
    out.push_back(induce_map(*wr, *wr, f, true, "F^h"));
  }
  std::lock_guard<std::mutex> g(mu_);
  return f_basis_.emplace(r, std::move(out)).first->second;
}

const std::vector<Matrix>& Cleft::f_co_basis(int r) const {
  {
    std::lock_guard<std::mutex> g(mu_);
    auto it = f_co_basis_.find(r);
    if (it != f_co_basis_.end()) return it->second;
  }
  int p = this->p();
  int dm = m_.dim;
  std::vector<Matrix> out;
  const HomSpace& x = xbar_co(r, 0);
  for (int h = 0; h < H().dim(); ++h) {
    const Cleft* c = this;
    CoFormula f = [c, h, p, dm](const Tuple& t, const Eval& ev) {
      Vec out = zero_vec(dm, p);
      for_each_F(*c, h, t, [&](const Scalar& k, const Vec& ginv, const std::vector<Vec>& af, const Vec& g) {
        axpy(out, k, c->m_right(c->m_left(ginv, eval_mixed(ev, dm, p, {}, af, {})), g));
      });
      return out;
    };
    out.push_back(induce_comap(x, x, f, true, "F^*_h"));
  }
  std::lock_guard<std::mutex> g(mu_);
  return f_co_basis_.emplace(r, std::move(out)).first->second;
}

Matrix Cleft::F(const Vec& h, int r) const {
  const auto& b = f_basis(r);
  int n = w(r)->dim();
  Matrix m(n, n, p());
  for (size_t i = 0; i < h.size(); ++i)
    if (!h[i].is_zero()) m = m + h[i] * b[i];
  return m;
}

Matrix Cleft::F_co(const Vec& h, int r) const {
  const auto& b = f_co_basis(r);
  int n = xbar_co(r, 0).dim();
  Matrix m(n, n, p());
  for (size_t i = 0; i < h.size(); ++i)
    if (!h[i].is_zero()) m = m + h[i] * b[i];
  return m;
}

Matrix Cleft::frak_h(const Vec& hv, const Vec& lv, int r) const {
  int p = this->p();
  SpacePtr src = w(r), dst = w(r + 1);
  Matrix out(dst->dim(), src->dim(), p);
  for (size_t h = 0; h < hv.size(); ++h)
    for (size_t l = 0; l < lv.size(); ++l) {
      Scalar c0 = hv[h] * lv[l];
      if (c0.is_zero()) continue;
      const Cleft* c = this;
      int hi = static_cast<int>(h), li = static_cast<int>(l);
      Formula f = [c, r, hi, li, p](const Tuple& t, const Emit& e) {
        Vec m = unit_vec(c->M().dim, t[0], p);
        for_each_T(*c, hi, li, slice(t, 1, 1 + r),
                   [&](const Scalar& k, const Vec& ginv, const std::vector<Vec>& af, const Vec& g) {
                     std::vector<Vec> fs{c->m_left(g, c->m_right(m, ginv))};
                     fs.insert(fs.end(), af.begin(), af.end());
                     emit_mixed({}, fs, {}, -k, e);
                   });
      };
      out = out + c0 * induce_map(*src, *dst, f, true, "𝔥");
    }
  return out;
}

Matrix Cleft::frak_h_co(const Vec& hv, const Vec& lv, int r) const {
  int p = this->p();
  int dm = m_.dim;
  const HomSpace& src = xbar_co(r + 1, 0);
  const HomSpace& dst = xbar_co(r, 0);
  Matrix out(dst.dim(), src.dim(), p);
  for (size_t h = 0; h < hv.size(); ++h)
    for (size_t l = 0; l < lv.size(); ++l) {
      Scalar c0 = hv[h] * lv[l];
      if (c0.is_zero()) continue;
      const Cleft* c = this;
      int hi = static_cast<int>(h), li = static_cast<int>(l);
      CoFormula f = [c, hi, li, p, dm](const Tuple& t, const Eval& ev) {
        Vec out = zero_vec(dm, p);
        for_each_T(*c, hi, li, t, [&](const Scalar& k, const Vec& ginv, const std::vector<Vec>& af, const Vec& g) {
          axpy(out, -k, c->m_right(c->m_left(ginv, eval_mixed(ev, dm, p, {}, af, {})), g));
        });
        return out;
      };
      out = out + c0 * induce_comap(src, dst, f, true, "𝔥^*");
    }
  return out;
}

GradedComplex Cleft::a_chains(int top) const {
  GradedComplex g;
  g.p = p();
  for (int r = 0; r <= top; ++r) g.dims.push_back(w(r)->dim());
  g.d.push_back(Matrix(0, g.dims[0], p()));
  for (int r = 1; r <= top; ++r) g.d.push_back(d0(r, 0));
  g.verify();
  return g;
}

GradedComplex Cleft::a_cochains(int top) const {
  GradedComplex g;
  g.p = p();
  g.cochain = true;
  for (int r = 0; r <= top; ++r) g.dims.push_back(xbar_co(r, 0).dim());
  for (int r = 0; r < top; ++r) g.d.push_back(co_d0(r + 1, 0));
  g.d.push_back(Matrix(0, g.dims[top], p()));
  g.verify();
  return g;
}

TotalComplex Cleft::chains(int n_top) const {
  require_k_valued();
  std::map<std::pair<int, int>, int> dims;
  std::vector<Piece> pieces;
  for (int n = 0; n <= n_top; ++n)
    for (int s = 0; s <= n; ++s) {
      int r = n - s;
      dims[{r, s}] = xbar(r, s)->dim();
      if (r >= 1) pieces.push_back({r, s, r - 1, s, d0(r, s)});
      if (s >= 1) pieces.push_back({r, s, r, s - 1, d1(r, s)});
    }
  return total_complex(dims, pieces, n_top, p(), false);
}

TotalComplex Cleft::cochains(int n_top) const {
  require_k_valued();
  std::map<std::pair<int, int>, int> dims;
  std::vector<Piece> pieces;
  for (int n = 0; n <= n_top; ++n)
    for (int s = 0; s <= n; ++s) {
      int r = n - s;
      dims[{r, s}] = xbar_co(r, s).dim();
      if (r >= 1) pieces.push_back({r - 1, s, r, s, co_d0(r, s)});
      if (s >= 1) pieces.push_back({r, s - 1, r, s, co_d1(r, s)});
    }
  return total_complex(dims, pieces, n_top, p(), true);
}

}  // namespace whcx
