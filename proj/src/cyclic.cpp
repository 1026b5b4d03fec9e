#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "cleft.hpp"
#include "cleft_detail.hpp"

namespace whcx {

using namespace detail;

namespace {

Vec fval(const Cleft& c, const Cocycle& f, const Vec& x, const Vec& y) {
  Vec out = zero_vec(c.A().dim, c.p());
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero()) axpy(out, x[i] * y[j], f[i][j]);
  }
  return out;
}

// S(h_t)⋯S(h_1).
Vec s_times(const WeakHopf& H, const Tuple& hs) {
  Vec out = H.one();
  for (int i = static_cast<int>(hs.size()) - 1; i >= 0; --i) out = H.mul(out, H.S(hs[i]));
  return out;
}

Vec t1(const Cleft& c, const Vec& h0, int h1) {
  const WeakHopf& H = c.H();
  const CrossedProduct& cp = c.cp();
  const Algebra& A = c.A();
  Vec out = zero_vec(A.dim, c.p());
  SwList d0 = H.delta(h0, 2);
  for (const auto& a : H.delta(h1, 3))
    for (const auto& b : d0) {
      Vec x = cp.measure().act(b.idx[0], fval(c, cp.finv(), H.S(a.idx[1]), unit_vec(H.dim(), a.idx[2], c.p())));
      Vec y = fval(c, cp.f(), unit_vec(H.dim(), b.idx[1], c.p()), H.S(a.idx[0]));
      axpy(out, a.c * b.c, A.mul(x, y));
    }
  return out;
}

}  // namespace

Vec t_map(const Cleft& c, const Vec& h0, const Tuple& rest) {
  const WeakHopf& H = c.H();
  int s = static_cast<int>(rest.size());
  if (s == 0) return c.cp().measure().act(h0, c.A().unit);
  if (s == 1) return t1(c, h0, rest[0]);
  Vec out = zero_vec(c.A().dim, c.p());
  Tuple tail = slice(rest, 1, s);
  SwList d0 = H.delta(h0, 2);
  for_each_sweedler(H, tail, 2, [&](const Scalar& k, const std::vector<Tuple>& parts) {
    Vec st = s_times(H, parts[0]);
    for (const auto& b : d0) {
      Vec x = unit_vec(H.dim(), b.idx[0], c.p());
      Vec y = H.mul(unit_vec(H.dim(), b.idx[1], c.p()), st);
      axpy(out, k * b.c, c.A().mul(t_map(c, x, parts[1]), t1(c, y, rest[0])));
    }
  });
  return out;
}

Vec t_map(const Cleft& c, const Tuple& hs) {
  return t_map(c, unit_vec(c.H().dim(), hs.at(0), c.p()), slice(hs, 1, hs.size()));
}

Report verify_t_maps(const Cleft& c, int s_max) {
  Report rep;
  const WeakHopf& H = c.H();
  const CrossedProduct& cp = c.cp();
  int p = c.p();
  bool one = true, two = true;
  std::string w1, w2;
  for (int s = 0; s <= s_max; ++s) {
    std::vector<int> shape(s + 1, H.dim());
    for_each_tuple(shape, [&](const Tuple& hs) {
      Tuple rest = slice(hs, 1, hs.size());
      Vec lhs1 = cp.mul(cp.gamma(hs[0]), c.gamma_inv_times(rest));
      Vec rhs1 = zero_vec(cp.dim(), p);
      Vec rhs2 = zero_vec(c.A().dim, p);
      for_each_sweedler(H, rest, 2, [&](const Scalar& k, const std::vector<Tuple>& parts) {
        Vec st = s_times(H, parts[0]);
        for (const auto& b : H.delta(hs[0], 2)) {
          Vec t = t_map(c, unit_vec(H.dim(), b.idx[0], p), parts[1]);
          Vec y = H.mul(unit_vec(H.dim(), b.idx[1], p), st);
          axpy(rhs1, k * b.c, cp.mul(cp.j(t), cp.gamma(y)));
          axpy(rhs2, k * b.c, c.A().mul(t, cp.measure().act(y, c.A().unit)));
        }
      });
      if (one && !(lhs1 == rhs1)) {
        one = false;
        w1 = basis_witness(hs);
      }
      if (two && !(rhs2 == t_map(c, hs))) {
        two = false;
        w2 = basis_witness(hs);
      }
    });
  }
  rep.add("γ(h_0)γ_×⁻¹(h) = j(T_s(h_0⊗h))γ(h_0 S_×(h))", one, w1);
  rep.add("T_s(h_0⊗h)(h_0 S_×(h)·1_A) = T_s(h_0⊗h)", two, w2);
  return rep;
}

Matrix connes0(const Cleft& c, int r, int s) {
  if (c.M().dim != c.cp().dim()) throw std::invalid_argument("D̄ needs M = E");
  int p = c.p();
  const Cleft* cc = &c;
  SpacePtr wr = c.w(r);
  // F^{h_{j+1}}∘…∘F^{h_s} on W_r for a tuple of basis elements.
  auto f_chain = [cc, r, p](const Tuple& hs, Vec v) {
    for (int i = static_cast<int>(hs.size()) - 1; i >= 0; --i) v = cc->F(unit_vec(cc->H().dim(), hs[i], p), r).apply(v);
    return v;
  };
  Formula f = [cc, r, s, p, wr, f_chain](const Tuple& t, const Emit& e) {
    const WeakHopf& H = cc->H();
    const CrossedProduct& cp = cc->cp();
    Tuple hs = slice(t, 0, s);
    Tuple a = slice(t, s + 1, s + 1 + r);
    for (const auto& term : cp.expand(t[s])) {
      for (const auto& h0 : H.delta(term.h, 2)) {
        Vec m = cp.mul(cp.j(term.a), cp.gamma(h0.idx[0]));
        Vec w0 = zero_vec(wr->dim(), p);
        emit_mixed({}, {m}, a, Scalar(1, p), [&](const Scalar& x, const Tuple& u) { wr->project_add(u, x, w0); });
        for (int j = 0; j <= s; ++j) {
          // h_i split in 2 for i ≤ j and in 3 for i > j.
          std::function<void(int, const Scalar&, Tuple&, Tuple&, Tuple&, Tuple&)> rec =
              [&](int i, const Scalar& k, Tuple& p1, Tuple& front, Tuple& fh, Tuple& back) {
                if (i == s) {
                  Vec mid = H.mul(unit_vec(H.dim(), h0.idx[1], p), s_times(H, p1));
                  Vec w = f_chain(fh, w0);
                  Tuple post = back;
                  size_t base = post.size();
                  for (int q = 0; q < wr->dim(); ++q) {
                    if (w[q].is_zero()) continue;
                    Tuple rep = wr->rep(q);
                    post.resize(base);
                    post.insert(post.end(), rep.begin(), rep.end());
                    emit_mixed(front, {mid}, post, k * w[q] * sgn(j * s + r + s, p), e);
                  }
                  return;
                }
                int n = i < j ? 2 : 3;
                for (const auto& d : H.delta(hs[i], n)) {
                  p1.push_back(d.idx[0]);
                  if (i < j) {
                    back.push_back(d.idx[1]);
                  } else {
                    fh.push_back(d.idx[1]);
                    front.push_back(d.idx[2]);
                  }
                  rec(i + 1, k * d.c, p1, front, fh, back);
                  p1.pop_back();
                  if (i < j) {
                    back.pop_back();
                  } else {
                    fh.pop_back();
                    front.pop_back();
                  }
                }
              };
          Tuple p1, front, fh, back;
          rec(0, term.c * h0.c, p1, front, fh, back);
        }
      }
    }
  };
  return induce_map(*c.xbar(r, s), *c.xbar(r, s + 1), f, true, "D̄⁰");
}

Matrix connes1(const Cleft& c, int r, int s) {
  if (c.M().dim != c.cp().dim()) throw std::invalid_argument("D̄ needs M = E");
  int p = c.p();
  const Cleft* cc = &c;
  Formula f = [cc, r, s, p](const Tuple& t, const Emit& e) {
    const WeakHopf& H = cc->H();
    const CrossedProduct& cp = cc->cp();
    const Algebra& A = cc->A();
    Tuple hs = slice(t, 0, s);
    Tuple a = slice(t, s + 1, s + 1 + r);
    for (const auto& term : cp.expand(t[s]))
      for (const auto& h0 : H.delta(term.h, 3))
        for (int j = 0; j <= r; ++j)
          for_each_sweedler(H, hs, 5 + j, [&](const Scalar& k, const std::vector<Tuple>& parts) {
            // parts: 0 → S_× in γ, 1 → S_× in z, 2 → T_s, 3..2+j → act on ā_{1j}, 3+j → γ_×, 4+j → prefix
            Scalar c0 = term.c * h0.c * k * sgn(j * r + r, p);
            Vec g = cp.mul(cp.gamma(H.mul(unit_vec(H.dim(), h0.idx[2], p), s_times(H, parts[0]))),
                           cc->gamma_times(parts[3 + j]));
            Vec at = A.mul(A.basis(term.a), t_map(*cc, unit_vec(H.dim(), h0.idx[0], p), parts[2]));
            Vec z = H.mul(unit_vec(H.dim(), h0.idx[1], p), s_times(H, parts[1]));
            std::vector<Vec> fs{g};
            for (int q = j; q < r; ++q) fs.push_back(A.basis(a[q]));
            fs.push_back(at);
            if (j == 0) {
              emit_mixed(parts[4 + j], fs, {}, c0 * H.eps(z), e);
              return;
            }
            for (const auto& zt : H.delta(z, j)) {
              std::vector<Vec> gs = fs;
              for (int q = 0; q < j; ++q)
                gs.push_back(cp.measure().act(zt.idx[q], cc->act_chain(parts[3 + q], A.basis(a[q]))));
              emit_mixed(parts[4 + j], gs, {}, c0 * zt.c, e);
            }
          });
  };
  return induce_map(*c.xbar(r, s), *c.xbar(r + 1, s), f, true, "D̄¹");
}

MixedComplex xbar_mixed(const Cleft& c, int top) {
  MixedComplex mx;
  TotalComplex tc = c.chains(top);
  mx.b = tc.c;
  int p = c.p();
  for (int n = 0; n < top; ++n) {
    Matrix B(tc.c.dims[n + 1], tc.c.dims[n], p);
    for (size_t i = 0; i < tc.summands[n].size(); ++i) {
      auto [r, s] = tc.summands[n][i];
      int col = tc.offset[n][i];
      for (size_t k = 0; k < tc.summands[n + 1].size(); ++k) {
        auto [r2, s2] = tc.summands[n + 1][k];
        int row = tc.offset[n + 1][k];
        if (r2 == r && s2 == s + 1) set_block(B, row, col, connes0(c, r, s));
        if (r2 == r + 1 && s2 == s) set_block(B, row, col, connes1(c, r, s));
      }
    }
    mx.B.push_back(std::move(B));
  }
  return mx;
}

CyclicComparison cyclic_compare(const Cleft& c, int n_max, int trunc) {
  CyclicComparison out;
  int top = n_max + 1 + 2 * trunc;
  MixedComplex mx = xbar_mixed(c, top);
  out.report.append(mx.verify());
  out.xbar = cyclic_from_mixed(mx, n_max, trunc);
  // the canonical complex grows like dim Ē^n; build only as far as a size budget allows
  int ebar = c.cp().dim() - c.dK();
  int ctop = n_max + 1;
  long size = c.cp().dim();
  for (int n = 0; n <= ctop; ++n) size *= std::max(ebar, 1);
  while (ctop < top && size * std::max(ebar, 1) <= 4096) {
    ++ctop;
    size *= std::max(ebar, 1);
  }
  MixedComplex canon = canonical_mixed(c.cp().E(), k_in_e(c), ctop);
  out.report.append(canon.verify());
  out.canonical = cyclic_from_mixed(canon, n_max, trunc);
  out.report.add("HC_n agrees with the canonical mixed complex", out.xbar.hc == out.canonical.hc);
  if (out.xbar.hn_stable && out.canonical.hn_stable)
    out.report.add("HN_n agrees with the canonical mixed complex", out.xbar.hn == out.canonical.hn);
  if (out.xbar.hp_stable && out.canonical.hp_stable)
    out.report.add("HP_n agrees with the canonical mixed complex", out.xbar.hp == out.canonical.hp);
  return out;
}

}  // namespace whcx
