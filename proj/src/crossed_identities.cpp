#include "crossed.hpp"
#include "hspaces.hpp"

namespace whcx {

namespace {

struct Fails {
  bool ok = true;
  std::string w;
  void fail(const std::vector<int>& t) {
    if (ok) {
      ok = false;
      w = basis_witness(t);
    }
  }
};

Vec hvec(const WeakHopf& H, int i) { return unit_vec(H.dim(), i, H.prime()); }
Vec hmul(const WeakHopf& H, const Vec& a, const Vec& b) { return H.mul(a, b); }

Vec gamma_prod(const CrossedProduct& cp, const Tuple& hs) {
  Vec out = cp.one();
  for (int h : hs) out = cp.mul(out, cp.gamma(h));
  return out;
}

Vec gamma_inv_prod(const CrossedProduct& cp, const Tuple& hs) {
  Vec out = cp.one();
  for (auto it = hs.rbegin(); it != hs.rend(); ++it) out = cp.mul(out, cp.gamma_inv(*it));
  return out;
}

// Σ c·x_0 ⊗_A γ̃(h_1) ⊗_A … ⊗_A γ̃(h_s)·y into the tower space.
void add_gamma_tail(const Space& sp, const CrossedProduct& cp, const Vec& x0, const Tuple& hs, const Vec* tail,
                    const Scalar& c, Vec& out) {
  std::vector<Vec> g;
  for (size_t i = 0; i < hs.size(); ++i) g.push_back(cp.gamma(hs[i]));
  if (tail && !g.empty()) g.back() = cp.mul(g.back(), *tail);
  std::vector<const Vec*> f{&x0};
  for (const auto& v : g) f.push_back(&v);
  project_tensor(sp, f, c, out);
}

}  // namespace

Report CrossedProduct::verify_cleft_identities(int s_max) const {
  Report r;
  const WeakHopf& H = *m_.H;
  const Algebra& A = m_.A;
  int dh = H.dim(), da = A.dim, de = dim(), p = this->p();
  const auto& hl = H.hl_basis();
  const auto& hr = H.hr_basis();
  std::vector<Vec> lr(hl);
  lr.insert(lr.end(), hr.begin(), hr.end());
  SwList one2 = H.delta(H.one(), 2);
  auto jv = [&](const Vec& a) { return j(a); };
  auto g = [&](const Vec& h) { return gamma(h); };
  auto gi = [&](const Vec& h) { return gamma_inv(h); };
  auto mul = [&](const Vec& x, const Vec& y) { return e_.mul(x, y); };
  auto f2 = [&](const Cocycle& f, const Vec& x, const Vec& y) {
    Vec out = zero_vec(da, p);
    for (int i = 0; i < dh; ++i)
      if (!x[i].is_zero())
        for (int k = 0; k < dh; ++k)
          if (!y[k].is_zero()) axpy(out, x[i] * y[k], f[i][k]);
    return out;
  };

  {
    Fails g1, g2;
    for (int h = 0; h < dh; ++h) {
      for (int a = 0; a < da; ++a) {
        Vec rhs = zero_vec(de, p);
        for (const auto& sw : H.delta(h, 2)) axpy(rhs, sw.c, mul(jv(m_.act(sw.idx[0], a)), gamma(sw.idx[1])));
        if (mul(gamma(h), j(a)) != rhs) g1.fail({h, a});
      }
      for (int l = 0; l < dh; ++l) {
        Vec rhs = zero_vec(de, p);
        for (const auto& sh : H.delta(h, 2))
          for (const auto& sl : H.delta(l, 2))
            axpy(rhs, sh.c * sl.c,
                 mul(jv(f_[sh.idx[0]][sl.idx[0]]), g(hmul(H, hvec(H, sh.idx[1]), hvec(H, sl.idx[1])))));
        if (mul(gamma(h), gamma(l)) != rhs) g2.fail({h, l});
      }
    }
    r.add("gama iota y gama gama (1)", g1.ok, g1.w);
    r.add("gama iota y gama gama (2)", g2.ok, g2.w);
  }
  {
    Fails fu;
    for (int h = 0; h < dh; ++h)
      for (size_t l = 0; l < lr.size(); ++l)
        for (int x = 0; x < dh; ++x)
          if (f2(f_, H.mul(hvec(H, h), lr[l]), hvec(H, x)) != f2(f_, hvec(H, h), H.mul(lr[l], hvec(H, x))))
            fu.fail({h, static_cast<int>(l), x});
    r.add("fundamental'", fu.ok, fu.w);
  }
  {
    Fails a5, a3;
    for (int h = 0; h < dh; ++h)
      for (int l = 0; l < dh; ++l) {
        Vec lhs = zero_vec(de, p);
        for (const auto& so : one2)
          axpy(lhs, so.c,
               mul(g(H.mul(hvec(H, h), H.S(so.idx[0]))), g(H.mul(hvec(H, so.idx[1]), hvec(H, l)))));
        Vec gg = mul(gamma(h), gamma(l));
        if (lhs != gg) a5.fail({h, l});
        for (int a = 0; a < da; ++a)
          for (int b = 0; b < da; ++b) {
            Vec x = zero_vec(de, p);
            for (const auto& so : one2)
              axpy(x, so.c,
                   mul(mul(mul(j(a), g(H.mul(hvec(H, h), hvec(H, so.idx[0])))), j(b)),
                       g(H.mul(H.S(so.idx[1]), hvec(H, l)))));
            if (x != mul(mul(mul(j(a), gamma(h)), j(b)), gamma(l))) a3.fail({a, h, b, l});
          }
      }
    r.add("auxiliar4'''''", a5.ok, a5.w);
    r.add("auxiliar3", a3.ok, a3.w);
  }
  {
    Fails a4, i1, i2;
    for (int h = 0; h < dh; ++h)
      for (size_t l = 0; l < lr.size(); ++l) {
        if (mul(gamma(h), g(lr[l])) != g(H.mul(hvec(H, h), lr[l]))) a4.fail({h, static_cast<int>(l)});
        if (mul(g(lr[l]), gamma(h)) != g(H.mul(lr[l], hvec(H, h)))) a4.fail({h, static_cast<int>(l)});
      }
    for (size_t l = 0; l < hl.size(); ++l)
      if (g(hl[l]) != jv(m_.act(hl[l], A.unit))) i1.fail({static_cast<int>(l)});
    for (size_t l = 0; l < hr.size(); ++l)
      for (int a = 0; a < da; ++a)
        if (mul(j(a), g(hr[l])) != mul(g(hr[l]), j(a))) i2.fail({static_cast<int>(l), a});
    r.add("auxiliar4'''", a4.ok, a4.w);
    r.add("auxiliar4 (1)", i1.ok, i1.w);
    r.add("auxiliar4 (2)", i2.ok, i2.w);
  }
  {
    auto kron = [&](const Vec& e, const Vec& h) {
      Vec out = zero_vec(de * dh, p);
      for (int x = 0; x < de; ++x)
        if (!e[x].is_zero())
          for (int y = 0; y < dh; ++y)
            if (!h[y].is_zero()) out[x * dh + y] = e[x] * h[y];
      return out;
    };
    Fails p1, p2, p3, p4;
    for (int a = 0; a < da; ++a) {
      for (size_t li = 0; li < hl.size(); ++li) {
        const Vec& l = hl[li];
        Vec dl = delta(mul(j(a), g(l)));
        for (int x = 0; x < de * dh; ++x)
          if (!dl[x].is_zero()) {
            Vec hv = hvec(H, x % dh);
            if (H.pi_l().apply(hv) != hv) p3.fail({a, static_cast<int>(li)});
          }
        for (int b = 0; b < da; ++b)
          for (int h = 0; h < dh; ++h) {
            Vec r1 = zero_vec(de * dh, p), r2 = zero_vec(de * dh, p);
            for (const auto& sw : H.delta(h, 2)) {
              axpy(r1, sw.c, kron(mul(mul(mul(j(a), g(l)), j(b)), gamma(sw.idx[0])), hvec(H, sw.idx[1])));
              axpy(r2, sw.c, kron(mul(mul(mul(j(b), gamma(sw.idx[0])), j(a)), g(l)), hvec(H, sw.idx[1])));
            }
            if (delta(mul(mul(mul(j(a), g(l)), j(b)), gamma(h))) != r1) p1.fail({a, static_cast<int>(li), b, h});
            if (delta(mul(mul(mul(j(b), gamma(h)), j(a)), g(l))) != r2) p2.fail({b, h, a, static_cast<int>(li)});
          }
      }
      for (int h = 0; h < dh; ++h) {
        Vec rhs = zero_vec(de, p);
        for (const auto& sw : H.delta(h, 2)) axpy(rhs, sw.c, mul(gamma_inv(sw.idx[0]), jv(m_.act(sw.idx[1], a))));
        if (mul(j(a), gamma_inv(h)) != rhs) p4.fail({a, h});
      }
    }
    r.add("propiedad 4 (1)", p1.ok, p1.w);
    r.add("propiedad 4 (2)", p2.ok, p2.w);
    r.add("propiedad 4 (3)", p3.ok, p3.w);
    r.add("propiedad 4 (4)", p4.ok, p4.w);
  }
  {
    Fails pe;
    for (int h = 0; h < dh; ++h)
      for (size_t li = 0; li < hl.size(); ++li) {
        const Vec& l = hl[li];
        if (gi(H.mul(hvec(H, h), l)) != mul(g(H.S(l)), gamma_inv(h))) pe.fail({h, static_cast<int>(li)});
        if (gi(H.mul(l, hvec(H, h))) != mul(gamma_inv(h), g(H.S(l)))) pe.fail({h, static_cast<int>(li)});
      }
    r.add("prop esp''", pe.ok, pe.w);
  }
  // Identities in E ⊗_A Ẽ^{⊗_A s} and E ⊗ H̄^{⊗_{H^L} s}.
  Fails pe1, ax5, ax6;
  auto right_e = slot_action(e_right_a(*this), -1);
  for (int s = 1; s <= s_max; ++s) {
    SpacePtr tw = etilde_over(*this, Space::atom(de, p, "E"), right_e, s);
    SpacePtr eh = Space::tensor(Space::atom(de, p, "E"), hbar_power(H, s));
    std::vector<int> shape(s, dh);
    for_each_tuple(shape, [&](const Tuple& hs) {
      if (tw->dim() > 0) {
        for (int a = 0; a < da; ++a) {
          Vec lhs = zero_vec(tw->dim(), p), rhs = zero_vec(tw->dim(), p);
          Vec ja = j(a);
          for_each_sweedler(H, hs, 2, [&](const Scalar& c, const std::vector<Tuple>& pt) {
            Vec x = gamma_inv_prod(*this, pt[0]);
            add_gamma_tail(*tw, *this, x, pt[1], &ja, c, lhs);
            add_gamma_tail(*tw, *this, mul(ja, x), pt[1], nullptr, c, rhs);
          });
          if (lhs != rhs) {
            Tuple w = hs;
            w.push_back(a);
            pe1.fail(w);
          }
        }
        Vec lhs = zero_vec(tw->dim(), p), rhs = zero_vec(tw->dim(), p);
        for_each_sweedler(H, hs, 3, [&](const Scalar& c, const std::vector<Tuple>& pt) {
          add_gamma_tail(*tw, *this, mul(gamma_prod(*this, pt[0]), gamma_inv_prod(*this, pt[1])), pt[2], nullptr, c,
                         lhs);
        });
        add_gamma_tail(*tw, *this, one(), hs, nullptr, Scalar(1, p), rhs);
        if (lhs != rhs) ax5.fail(hs);
      }
      if (eh->dim() > 0) {
        for (size_t zi = 0; zi < hr.size(); ++zi) {
          const Vec& z = hr[zi];
          Vec lhs = zero_vec(eh->dim(), p), rhs = zero_vec(eh->dim(), p);
          Vec gz = g(z);
          for_each_sweedler(H, hs, 3, [&](const Scalar& c, const std::vector<Tuple>& pt) {
            Vec x = mul(mul(gamma_inv_prod(*this, pt[0]), gz), gamma_prod(*this, pt[1]));
            std::vector<Vec> hv;
            for (int i : pt[2]) hv.push_back(hvec(H, i));
            std::vector<const Vec*> f{&x};
            for (const auto& v : hv) f.push_back(&v);
            project_tensor(*eh, f, c, lhs);
          });
          Vec pz = H.pib_r().apply(z);
          for (const auto& so : one2) {
            Vec x = gamma(so.idx[0]);
            std::vector<Vec> hv;
            for (int i : hs) hv.push_back(hvec(H, i));
            hv.front() = H.mul(pz, hv.front());
            hv.back() = H.mul(hv.back(), hvec(H, so.idx[1]));
            std::vector<const Vec*> f{&x};
            for (const auto& v : hv) f.push_back(&v);
            project_tensor(*eh, f, so.c, rhs);
          }
          if (lhs != rhs) {
            Tuple w = hs;
            w.push_back(static_cast<int>(zi));
            ax6.fail(w);
          }
        }
      }
    });
  }
  r.add("prop esp'", pe1.ok, pe1.w);
  r.add("auxiliar 5", ax5.ok, ax5.w);
  r.add("auxiliar 6", ax6.ok, ax6.w);
  return r;
}

}  // namespace whcx
