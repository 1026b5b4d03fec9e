#include <stdexcept>
#include <string>

#include "cleft.hpp"
#include "cleft_detail.hpp"

namespace whcx {

using namespace detail;

namespace {

struct EK {
  SpacePtr ebar;
  std::shared_ptr<const ActionTable> kl, kr;  // K acting on an E atom
  std::shared_ptr<const ActionTable> ml, mr;  // K acting on an M atom
};

EK ek_tables(const Algebra& e, const std::vector<Vec>& k, const Bimodule& m) {
  EK t;
  int dk = static_cast<int>(k.size());
  t.ebar = quotient_by(Space::atom(e.dim, e.p, "E"), k);
  t.kl = table_of(dk, e.dim, [&](int l, int x) { return e.mul(k[l], e.basis(x)); });
  t.kr = table_of(dk, e.dim, [&](int l, int x) { return e.mul(e.basis(x), k[l]); });
  if (m.dim) {
    std::vector<Matrix> ml, mr;
    for (int l = 0; l < dk; ++l) {
      ml.push_back(m.left_of(k[l]));
      mr.push_back(m.right_of(k[l]));
    }
    t.ml = table_of(dk, m.dim, [&](int l, int x) { return ml[l].col(x); });
    t.mr = table_of(dk, m.dim, [&](int l, int x) { return mr[l].col(x); });
  }
  return t;
}

SpacePtr ebar_power(const EK& t, int dk, int n, int p) {
  if (n == 0) return Space::unit(p);
  SpacePtr cur = t.ebar;
  for (int i = 1; i < n; ++i) cur = balanced_tensor(cur, t.ebar, dk, slot_action(t.kr, -1), slot_action(t.kl, 0));
  return cur;
}

// M⊗_{K^e}Ē^{⊗_K n}.
SpacePtr canonical_chain_space(const EK& t, int dk, int n, int dm, int p) {
  SpacePtr atom = Space::atom(dm, p, "M");
  if (n == 0) return coinvariants(atom, dk, slot_action(t.ml, 0), slot_action(t.mr, 0));
  SpacePtr bt = balanced_tensor(atom, ebar_power(t, dk, n, p), dk, slot_action(t.mr, 0), slot_action(t.kl, 0));
  return coinvariants(bt, dk, slot_action(t.ml, 0), slot_action(t.kr, -1));
}

Formula hochschild_b(const Algebra& e, const Bimodule& m, int n) {
  int p = e.p;
  return [&e, &m, n, p](const Tuple& t, const Emit& emit) {
    Vec x = unit_vec(m.dim, t[0], p);
    Tuple es = slice(t, 1, 1 + n);
    emit_mixed({}, {m.right_of(e.basis(es[0])).apply(x)}, slice(es, 1, n), Scalar(1, p), emit);
    for (int i = 1; i <= n - 1; ++i) {
      Tuple pre = slice(t, 0, i);
      Tuple post = slice(t, i + 2, t.size());
      emit_mixed(pre, {e.mul(e.basis(t[i]), e.basis(t[i + 1]))}, post, sgn(i, p), emit);
    }
    emit_mixed({}, {m.left_of(e.basis(es[n - 1])).apply(x)}, slice(es, 0, n - 1), sgn(n, p), emit);
  };
}

const HomSpace* make_hom(std::vector<std::unique_ptr<HomSpace>>& keep, const EK& t, const Algebra& e,
                         const std::vector<Vec>& k, const Bimodule& m, int n) {
  int dk = static_cast<int>(k.size());
  SpacePtr d = ebar_power(t, dk, n, e.p);
  std::vector<Intertwine> cons;
  for (int l = 0; l < dk; ++l) {
    if (n == 0) {
      cons.push_back({Matrix(d->dim(), d->dim(), e.p), m.left_of(k[l]) - m.right_of(k[l])});
    } else {
      cons.push_back({action_matrix(*d, as_formula(slot_action(t.kl, 0), l), "left K"), m.left_of(k[l])});
      cons.push_back({action_matrix(*d, as_formula(slot_action(t.kr, -1), l), "right K"), m.right_of(k[l])});
    }
  }
  keep.push_back(std::make_unique<HomSpace>(d, m.dim, e.p, cons));
  return keep.back().get();
}

}  // namespace

GradedComplex canonical_homology(const Algebra& e, const std::vector<Vec>& k, const Bimodule& m, int top) {
  int dk = static_cast<int>(k.size());
  EK t = ek_tables(e, k, m);
  GradedComplex g;
  g.p = e.p;
  std::vector<SpacePtr> sp;
  for (int n = 0; n <= top; ++n) {
    sp.push_back(canonical_chain_space(t, dk, n, m.dim, e.p));
    g.dims.push_back(sp.back()->dim());
  }
  g.d.push_back(Matrix(0, g.dims[0], e.p));
  for (int n = 1; n <= top; ++n) g.d.push_back(induce_map(*sp[n], *sp[n - 1], hochschild_b(e, m, n), true, "b"));
  g.verify();
  return g;
}

GradedComplex canonical_cohomology(const Algebra& e, const std::vector<Vec>& k, const Bimodule& m, int top) {
  EK t = ek_tables(e, k, m);
  int p = e.p;
  std::vector<std::unique_ptr<HomSpace>> keep;
  std::vector<const HomSpace*> sp;
  GradedComplex g;
  g.p = p;
  g.cochain = true;
  for (int n = 0; n <= top; ++n) {
    sp.push_back(make_hom(keep, t, e, k, m, n));
    g.dims.push_back(sp.back()->dim());
  }
  for (int n = 0; n < top; ++n) {
    CoFormula f = [&e, &m, n, p](const Tuple& x, const Eval& ev) {
      Tuple tail = slice(x, 1, n + 1);
      Vec out = m.left_of(e.basis(x[0])).apply(ev(tail));
      for (int i = 1; i <= n; ++i) {
        Tuple pre = slice(x, 0, i - 1);
        Tuple post = slice(x, i + 1, n + 1);
        axpy(out, sgn(i, p), eval_mixed(ev, m.dim, p, pre, {e.mul(e.basis(x[i - 1]), e.basis(x[i]))}, post));
      }
      axpy(out, sgn(n + 1, p), m.right_of(e.basis(x[n])).apply(ev(slice(x, 0, n))));
      return out;
    };
    g.d.push_back(induce_comap(*sp[n], *sp[n + 1], f, true, "b^*"));
  }
  g.d.push_back(Matrix(0, g.dims[top], p));
  g.verify();
  return g;
}

MixedComplex canonical_mixed(const Algebra& e, const std::vector<Vec>& k, int top) {
  Bimodule m = regular_bimodule(e);
  int dk = static_cast<int>(k.size());
  int p = e.p;
  EK t = ek_tables(e, k, m);
  MixedComplex mx;
  mx.b = canonical_homology(e, k, m, top);
  std::vector<SpacePtr> sp;
  for (int n = 0; n <= top; ++n) sp.push_back(canonical_chain_space(t, dk, n, m.dim, p));
  for (int n = 0; n < top; ++n) {
    Formula f = [&e, n, p](const Tuple& x, const Emit& emit) {
      for (int i = 0; i <= n; ++i) {
        Tuple c;
        for (int q = i; q <= n; ++q) c.push_back(x[q]);
        for (int q = 0; q < i; ++q) c.push_back(x[q]);
        emit_mixed({}, {e.unit}, c, sgn(i * n, p), emit);
      }
    };
    mx.B.push_back(induce_map(*sp[n], *sp[n + 1], f, true, "B"));
  }
  return mx;
}

std::vector<Vec> k_in_e(const Cleft& c) {
  std::vector<Vec> out;
  for (const auto& v : c.K()) out.push_back(c.cp().j(v));
  return out;
}

std::vector<int> hochschild_homology_cleft(const Cleft& c, int n_max) {
  return c.chains(n_max + 1).c.homology_dims(n_max);
}

std::vector<int> hochschild_cohomology_cleft(const Cleft& c, int n_max) {
  return c.cochains(n_max + 1).c.homology_dims(n_max);
}

std::vector<int> canonical_homology_dims(const Cleft& c, int n_max) {
  return canonical_homology(c.cp().E(), k_in_e(c), c.M(), n_max + 1).homology_dims(n_max);
}

std::vector<int> canonical_cohomology_dims(const Cleft& c, int n_max) {
  return canonical_cohomology(c.cp().E(), k_in_e(c), c.M(), n_max + 1).homology_dims(n_max);
}

Report verify_theta_lambda(const Cleft& c, int n) {
  Report rep;
  int p = c.p();
  for (int r = 0; r <= n; ++r)
    for (int s = 0; r + s <= n; ++s) {
      std::string at = "(r,s)=(" + std::to_string(r) + "," + std::to_string(s) + ")";
      Matrix th = c.theta(r, s), la = c.lambda(r, s);
      rep.add("Θ∘Λ = id", th * la == Matrix::identity(th.rows(), p), at);
      rep.add("Λ∘Θ = id", la * th == Matrix::identity(la.rows(), p), at);
      Matrix ct = c.co_theta(r, s), cl = c.co_lambda(r, s);
      rep.add("Θ^*∘Λ^* = id", ct * cl == Matrix::identity(ct.rows(), p), at);
      rep.add("Λ^*∘Θ^* = id", cl * ct == Matrix::identity(cl.rows(), p), at);
    }
  return rep;
}

Report verify_xbar_differentials(const Cleft& c, int n) {
  Report rep;
  bool kv = c.k_valued();
  auto zero = [](const Matrix& m) { return m.is_zero(); };
  for (int r = 0; r <= n; ++r)
    for (int s = 0; r + s <= n; ++s) {
      std::string at = "(r,s)=(" + std::to_string(r) + "," + std::to_string(s) + ")";
      if (r >= 2) rep.add("d̄⁰d̄⁰ = 0", zero(c.d0(r - 1, s) * c.d0(r, s)), at);
      if (r >= 1 && s >= 1)
        rep.add("d̄⁰d̄¹ + d̄¹d̄⁰ = 0", zero(c.d0(r, s - 1) * c.d1(r, s) + c.d1(r - 1, s) * c.d0(r, s)), at);
      if (s >= 2) {
        Matrix d11 = c.d1(r, s - 1) * c.d1(r, s);
        Matrix mix = c.d0(r + 1, s - 2) * c.d2(r, s);
        if (r >= 1) mix = mix + c.d2(r - 1, s) * c.d0(r, s);
        rep.add("d̄¹d̄¹ + d̄⁰d̄² + d̄²d̄⁰ = 0", zero(d11 + mix), at);
        if (kv) rep.add("d̄² = 0", zero(c.d2(r, s)), at);
        if (kv) rep.add("d̄¹d̄¹ = 0", zero(d11), at);
      }
      if (s >= 3) rep.add("d̄¹d̄² + d̄²d̄¹ = 0", zero(c.d1(r + 1, s - 2) * c.d2(r, s) + c.d2(r, s - 1) * c.d1(r, s)), at);
      if (s >= 4) rep.add("d̄²d̄² = 0", zero(c.d2(r + 1, s - 2) * c.d2(r, s)), at);
    }
  return rep;
}

}  // namespace whcx
