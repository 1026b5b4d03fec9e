#include "whhom.hpp"

#include "hspaces.hpp"

namespace whcx {

Matrix HModule::action(const Vec& h) const {
  Matrix m(dim, dim, p);
  for (size_t i = 0; i < h.size(); ++i)
    if (!h[i].is_zero()) m = m + h[i] * act[i];
  return m;
}

Report HModule::verify(const WeakHopf& H) const {
  Report r;
  r.add("module unital", action(H.one()) == Matrix::identity(dim, p), "1");
  bool ok = true;
  std::string w;
  for (int a = 0; a < H.dim() && ok; ++a)
    for (int b = 0; b < H.dim() && ok; ++b) {
      Matrix prod = action(H.mul(unit_vec(H.dim(), a, p), unit_vec(H.dim(), b, p)));
      Matrix comp = right ? act[b] * act[a] : act[a] * act[b];
      if (!(prod == comp)) {
        ok = false;
        w = basis_witness({a, b});
      }
    }
  r.add("module associative", ok, w);
  return r;
}

HModule regular_left(const WeakHopf& H) {
  HModule m{H.dim(), H.prime(), false, {}};
  for (int h = 0; h < H.dim(); ++h) {
    Matrix a(H.dim(), H.dim(), H.prime());
    for (int x = 0; x < H.dim(); ++x) a.set_col(x, H.mul(unit_vec(H.dim(), h, H.prime()), unit_vec(H.dim(), x, H.prime())));
    m.act.push_back(std::move(a));
  }
  return m;
}

namespace {

// Action of H on a subalgebra S through a projection P onto S.
HModule projected(const WeakHopf& H, const std::vector<Vec>& basis, const Matrix& proj, bool right) {
  int p = H.prime();
  int d = static_cast<int>(basis.size());
  Echelon e = echelon(basis, H.dim(), p);
  HModule m{d, p, right, {}};
  for (int h = 0; h < H.dim(); ++h) {
    Matrix a(d, d, p);
    Vec eh = unit_vec(H.dim(), h, p);
    for (int x = 0; x < d; ++x) {
      Vec v = proj.apply(right ? H.mul(basis[x], eh) : H.mul(eh, basis[x]));
      auto c = coordinates(e, v);
      if (!c) throw std::logic_error("projection leaves its image");
      a.set_col(x, *c);
    }
    m.act.push_back(std::move(a));
  }
  return m;
}

}  // namespace

HModule trivial_left(const WeakHopf& H) { return projected(H, H.hl_basis(), H.pi_l(), false); }
HModule trivial_right(const WeakHopf& H) { return projected(H, H.hr_basis(), H.pi_r(), true); }

Report verify_hr_module(const WeakHopf& H) {
  Report r = trivial_right(H).verify(H);
  int p = H.prime();
  bool ok = true;
  std::string w;
  for (int x = 0; x < H.dim() && ok; ++x)
    for (int h = 0; h < H.dim() && ok; ++h) {
      Vec ex = unit_vec(H.dim(), x, p), eh = unit_vec(H.dim(), h, p);
      if (H.pi_r().apply(H.mul(ex, eh)) != H.pi_r().apply(H.mul(H.pi_r().apply(ex), eh))) {
        ok = false;
        w = basis_witness({x, h});
      }
    }
  r.add("Π^R right H-linear", ok, w);
  return r;
}

std::shared_ptr<const ActionTable> hl_module_table(const WeakHopf& H, const HModule& n) {
  const auto& b = H.hl_basis();
  auto tab = std::make_shared<ActionTable>(b.size(), std::vector<SVec>(n.dim));
  for (size_t r = 0; r < b.size(); ++r) {
    Matrix a = n.action(b[r]);
    for (int i = 0; i < n.dim; ++i) (*tab)[r][i] = sparse(a.col(i));
  }
  return tab;
}

Formula hochschild_h_formula(const WeakHopf& H, std::shared_ptr<const std::vector<Matrix>> act, int s) {
  const WeakHopf* hp = &H;
  return [hp, act, s](const Tuple& t, const Emit& emit) {
    const WeakHopf& H = *hp;
    int p = H.prime();
    int n = t[s];
    const auto& A = *act;
    int dn = A[0].rows();
    Scalar one(1, p), minus(-1, p);
    Scalar last_sign = s % 2 ? minus : one;
    if (s == 1) {
      Vec v = H.pib_r().col(t[0]);
      Vec out = zero_vec(dn, p);
      for (int h = 0; h < H.dim(); ++h)
        if (!v[h].is_zero())
          for (int i = 0; i < dn; ++i) out[i] += v[h] * A[h](i, n);
      for (int i = 0; i < dn; ++i) out[i] -= A[t[0]](i, n);
      for (int i = 0; i < dn; ++i)
        if (!out[i].is_zero()) emit(out[i], {i});
      return;
    }
    Tuple y(t.begin() + 1, t.end());
    Vec lead = H.mul(H.pib_r().col(t[0]), unit_vec(H.dim(), t[1], p));
    for (int x = 0; x < H.dim(); ++x)
      if (!lead[x].is_zero()) {
        y[0] = x;
        emit(lead[x], y);
      }
    for (int i = 1; i <= s - 1; ++i) {
      Scalar sg = i % 2 ? minus : one;
      Tuple z;
      z.insert(z.end(), t.begin(), t.begin() + (i - 1));
      z.push_back(0);
      z.insert(z.end(), t.begin() + (i + 1), t.end());
      for (const auto& [x, c] : H.alg().mul(t[i - 1], t[i])) {
        z[i - 1] = x;
        emit(sg * c, z);
      }
    }
    Tuple z(t.begin(), t.begin() + s);
    for (int i = 0; i < dn; ++i) {
      const Scalar& c = A[t[s - 1]](i, n);
      if (!c.is_zero()) {
        z[s - 1] = i;
        emit(last_sign * c, z);
      }
    }
  };
}

HChains homology_complex(const WeakHopf& H, const HModule& n, int top) {
  HChains out;
  int p = H.prime();
  out.c.p = p;
  auto atom = Space::atom(n.dim, p, "N");
  auto left = slot_action(hl_module_table(H, n), 0);
  auto act = std::make_shared<const std::vector<Matrix>>(n.act);
  for (int s = 0; s <= top; ++s) {
    out.spaces.push_back(hbar_over(H, s, atom, left));
    out.c.dims.push_back(out.spaces.back()->dim());
  }
  out.c.d.push_back(Matrix(0, out.c.dims[0], p));
  for (int s = 1; s <= top; ++s)
    out.c.d.push_back(induce_map(*out.spaces[s], *out.spaces[s - 1], hochschild_h_formula(H, act, s), true,
                                 "d_" + std::to_string(s)));
  out.c.verify();
  return out;
}

std::vector<int> homology_of_H(const WeakHopf& H, const HModule& n, int n_max) {
  return homology_complex(H, n, n_max + 1).c.homology_dims(n_max);
}

namespace {

Matrix formula_matrix(const Space& sp, const RawAction& act, int r, const std::string& label) {
  return induce_map(sp, sp, [&](const Tuple& t, const Emit& e) { act(t, r, e); }, true, label);
}

void add_scaled(Vec& out, const Scalar& c, const Vec& v) { axpy(out, c, v); }

}  // namespace

HCochains cohomology_complex(const WeakHopf& H, const HModule& n, int top) {
  HCochains out;
  int p = H.prime();
  out.c.p = p;
  out.c.cochain = true;
  auto right = slot_action(hl_right_table(H), -1);
  const auto& hl = H.hl_basis();
  for (int s = 0; s <= top; ++s) {
    if (s == 0) {
      out.spaces.emplace_back(Space::unit(p), n.dim, p, std::vector<Intertwine>{});
    } else {
      SpacePtr x = hbar_power(H, s);
      std::vector<Intertwine> cons;
      for (size_t r = 0; r < hl.size(); ++r)
        cons.push_back({formula_matrix(*x, right, static_cast<int>(r), "right H^L action"), n.action(hl[r])});
      out.spaces.emplace_back(x, n.dim, p, cons);
    }
    out.c.dims.push_back(out.spaces.back().dim());
  }
  const WeakHopf* hp = &H;
  const HModule* np = &n;
  for (int s = 1; s <= top; ++s) {
    CoFormula f = [hp, np, s, p](const Tuple& t, const Eval& ev) {
      const WeakHopf& H = *hp;
      const HModule& N = *np;
      Scalar one(1, p), minus(-1, p);
      Vec out = zero_vec(N.dim, p);
      if (s == 1) {
        Vec m = ev({});
        out = N.action(H.pib_r().col(t[0])).apply(m);
        axpy(out, minus, N.act[t[0]].apply(m));
        return out;
      }
      Tuple y(t.begin() + 1, t.end());
      Vec lead = H.mul(H.pib_r().col(t[0]), unit_vec(H.dim(), t[1], p));
      for (int x = 0; x < H.dim(); ++x)
        if (!lead[x].is_zero()) {
          y[0] = x;
          add_scaled(out, lead[x], ev(y));
        }
      for (int i = 1; i <= s - 1; ++i) {
        Scalar sg = i % 2 ? minus : one;
        Tuple z;
        z.insert(z.end(), t.begin(), t.begin() + (i - 1));
        z.push_back(0);
        z.insert(z.end(), t.begin() + (i + 1), t.end());
        for (const auto& [x, c] : H.alg().mul(t[i - 1], t[i])) {
          z[i - 1] = x;
          add_scaled(out, sg * c, ev(z));
        }
      }
      Tuple z(t.begin(), t.begin() + (s - 1));
      add_scaled(out, s % 2 ? minus : one, N.act[t[s - 1]].apply(ev(z)));
      return out;
    };
    out.c.d.push_back(induce_comap(out.spaces[s - 1], out.spaces[s], f, true, "d^" + std::to_string(s)));
  }
  out.c.d.push_back(Matrix(0, out.c.dims[top], p));
  out.c.verify();
  return out;
}

std::vector<int> cohomology_of_H(const WeakHopf& H, const HModule& n, int n_max) {
  return cohomology_complex(H, n, n_max + 1).c.homology_dims(n_max);
}

Resolution build_resolution(const WeakHopf& H, int s_max) {
  Resolution res;
  int p = H.prime();
  HModule reg = regular_left(H);
  HChains ch = homology_complex(H, reg, s_max + 1);
  res.spaces = ch.spaces;
  const auto& hr = H.hr_basis();
  Echelon hre = echelon(hr, H.dim(), p);
  int dr = static_cast<int>(hr.size());
  GradedComplex& q = res.aug;
  q.p = p;
  q.dims.push_back(dr);
  q.d.push_back(Matrix(0, dr, p));
  Matrix pir(dr, H.dim(), p);
  for (int x = 0; x < H.dim(); ++x) pir.set_col(x, *coordinates(hre, H.pi_r().col(x)));
  for (int s = 0; s <= s_max + 1; ++s) {
    q.dims.push_back(ch.c.dims[s]);
    q.d.push_back(s == 0 ? pir : ch.c.d[s]);
  }
  q.verify();
  res.hbar_maps.push_back(Matrix::from_cols(hr, H.dim(), p));
  for (int k = 1; k <= s_max + 1; ++k) {
    int s = k - 1;
    Scalar sg = k % 2 ? Scalar(-1, p) : Scalar(1, p);
    Vec one = H.one();
    Formula f = [one, sg](const Tuple& t, const Emit& e) {
      Tuple y = t;
      y.push_back(0);
      for (size_t x = 0; x < one.size(); ++x)
        if (!one[x].is_zero()) {
          y.back() = static_cast<int>(x);
          e(sg * one[x], y);
        }
    };
    res.hbar_maps.push_back(induce_map(*res.spaces[s], *res.spaces[s + 1], f, true, "ħ_" + std::to_string(k)));
  }
  return res;
}

Report verify_resolution(const Resolution& r, int s_max) {
  Report rep;
  int top = s_max + 1;
  std::vector<Matrix> id, zero;
  for (int n = 0; n <= top; ++n) {
    id.push_back(Matrix::identity(r.aug.dims[n], r.aug.p));
    zero.push_back(Matrix(r.aug.dims[n], r.aug.dims[n], r.aug.p));
  }
  std::string w;
  bool ok = homotopy_check(id, zero, r.hbar_maps, r.aug, r.aug, top - 1, &w);
  rep.add("ħ∘d' + d'∘ħ = id", ok, w);
  return rep;
}

std::vector<int> tor_via_resolution(const WeakHopf& H, const HModule& n, int n_max) {
  int p = H.prime();
  HModule reg = regular_left(H);
  HChains ch = homology_complex(H, reg, n_max + 1);
  auto rtab = std::make_shared<ActionTable>(H.dim(), std::vector<SVec>(H.dim()));
  for (int h = 0; h < H.dim(); ++h)
    for (int x = 0; x < H.dim(); ++x)
      (*rtab)[h][x] = H.alg().mul(x, h);
  auto ntab = std::make_shared<ActionTable>(H.dim(), std::vector<SVec>(n.dim));
  for (int h = 0; h < H.dim(); ++h)
    for (int i = 0; i < n.dim; ++i) (*ntab)[h][i] = sparse(n.act[h].col(i));
  auto right = slot_action(rtab, -1);
  auto left = slot_action(ntab, 0);
  auto atom = Space::atom(n.dim, p, "N");
  GradedComplex c;
  c.p = p;
  std::vector<SpacePtr> sp;
  auto act = std::make_shared<const std::vector<Matrix>>(reg.act);
  for (int s = 0; s <= n_max + 1; ++s) {
    sp.push_back(balanced_tensor(ch.spaces[s], atom, H.dim(), right, left));
    c.dims.push_back(sp.back()->dim());
  }
  c.d.push_back(Matrix(0, c.dims[0], p));
  for (int s = 1; s <= n_max + 1; ++s) {
    Formula ds = hochschild_h_formula(H, act, s);
    Formula f = [ds](const Tuple& t, const Emit& e) {
      Tuple head(t.begin(), t.end() - 1);
      int m = t.back();
      ds(head, [&](const Scalar& c, const Tuple& y) {
        Tuple z = y;
        z.push_back(m);
        e(c, z);
      });
    };
    c.d.push_back(induce_map(*sp[s], *sp[s - 1], f, true, "d'⊗N"));
  }
  c.verify();
  return c.homology_dims(n_max);
}

std::vector<int> ext_via_resolution(const WeakHopf& H, const HModule& n, int n_max) {
  int p = H.prime();
  HModule reg = regular_left(H);
  HChains ch = homology_complex(H, reg, n_max + 1);
  auto rtab = std::make_shared<ActionTable>(H.dim(), std::vector<SVec>(H.dim()));
  for (int h = 0; h < H.dim(); ++h)
    for (int x = 0; x < H.dim(); ++x) (*rtab)[h][x] = H.alg().mul(x, h);
  auto right = slot_action(rtab, -1);
  std::vector<HomSpace> hs;
  GradedComplex c;
  c.p = p;
  c.cochain = true;
  for (int s = 0; s <= n_max + 1; ++s) {
    std::vector<Intertwine> cons;
    for (int h = 0; h < H.dim(); ++h) cons.push_back({formula_matrix(*ch.spaces[s], right, h, "right H action"), n.act[h]});
    hs.emplace_back(ch.spaces[s], n.dim, p, cons);
    c.dims.push_back(hs.back().dim());
  }
  auto act = std::make_shared<const std::vector<Matrix>>(reg.act);
  for (int s = 0; s <= n_max; ++s) {
    Formula ds = hochschild_h_formula(H, act, s + 1);
    CoFormula f = [ds, p, &n](const Tuple& t, const Eval& ev) {
      Vec out = zero_vec(n.dim, p);
      ds(t, [&](const Scalar& c, const Tuple& y) { axpy(out, c, ev(y)); });
      return out;
    };
    c.d.push_back(induce_comap(hs[s], hs[s + 1], f, true, "Hom(d', N)"));
  }
  c.d.push_back(Matrix(0, c.dims[n_max + 1], p));
  c.verify();
  return c.homology_dims(n_max);
}

}  // namespace whcx
