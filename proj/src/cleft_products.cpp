#include <stdexcept>
#include <string>

#include "cleft.hpp"
#include "cleft_detail.hpp"

namespace whcx {

using namespace detail;

namespace {

std::vector<Vec> acted(const Cleft& c, const std::vector<Tuple>& parts, int first, const Tuple& a, int from, int n) {
  std::vector<Vec> out;
  for (int i = 0; i < n; ++i) out.push_back(c.act_chain(parts[first + i], c.A().basis(a[from + i])));
  return out;
}

Vec block_of(const TotalComplex& tc, int n, int i, const Vec& x) {
  int off = tc.offset[n][i];
  int len = (i + 1 < static_cast<int>(tc.summands[n].size()) ? tc.offset[n][i + 1] : tc.c.dims[n]) - off;
  return Vec(x.begin() + off, x.begin() + off + len);
}

int summand_index(const TotalComplex& tc, int n, int r, int s) {
  const auto& sm = tc.summands[n];
  for (size_t i = 0; i < sm.size(); ++i)
    if (sm[i] == std::make_pair(r, s)) return static_cast<int>(i);
  return -1;
}

void add_block(const TotalComplex& tc, int n, int i, const Vec& v, Vec& out) {
  int off = tc.offset[n][i];
  for (size_t k = 0; k < v.size(); ++k) out[off + k] += v[k];
}

}  // namespace

Vec cup(const Cleft& c, int r, int s, const Vec& b, int r2, int s2, const Vec& b2) {
  int p = c.p();
  const CrossedProduct& cp = c.cp();
  int de = cp.dim();
  if (c.M().dim != de) throw std::invalid_argument("cup needs M = E");
  Eval ev = evaluator(*c.xbar_domain(r, s), c.xbar_co(r, s).combine(b));
  Eval ev2 = evaluator(*c.xbar_domain(r2, s2), c.xbar_co(r2, s2).combine(b2));
  int rr = r + r2, ss = s + s2;
  SpacePtr dom = c.xbar_domain(rr, ss);
  Matrix val(de, dom->dim(), p);
  Scalar sign = sgn(r2 * s, p);
  for (int i = 0; i < dom->dim(); ++i) {
    Tuple y = dom->rep(i);
    Tuple head = slice(y, 0, s), tail = slice(y, s, ss), a = slice(y, ss, ss + rr);
    Vec out = zero_vec(de, p);
    for_each_sweedler(c.H(), tail, r + 3, [&](const Scalar& k, const std::vector<Tuple>& parts) {
      Vec left = eval_mixed(ev, de, p, head, acted(c, parts, 1, a, 0, r), {});
      Tuple y2 = parts[r + 2];
      y2.insert(y2.end(), a.begin() + r, a.end());
      Vec x = cp.mul(cp.mul(cp.mul(c.gamma_inv_times(parts[0]), left), c.gamma_times(parts[r + 1])), ev2(y2));
      axpy(out, sign * k, x);
    });
    val.set_col(i, out);
  }
  auto co = c.xbar_co(rr, ss).coords(val);
  if (!co) throw IllDefined("cup product leaves X̄^{rs}", {r, s, r2, s2});
  return *co;
}

Vec cap(const Cleft& c, const Cleft& ce, int r, int s, const Vec& y, int r2, int s2, const Vec& b) {
  if (r2 > r || s2 > s) throw std::invalid_argument("cap degree exceeds chain degree");
  int p = c.p();
  int de = ce.cp().dim();
  Eval ev = evaluator(*ce.xbar_domain(r2, s2), ce.xbar_co(r2, s2).combine(b));
  int dm = c.M().dim;
  const Cleft* cc = &c;
  Scalar sign = sgn(r * s2 + r2 * s2, p);
  Formula f = [cc, &ev, r, s, r2, s2, de, dm, p, sign](const Tuple& t, const Emit& e) {
    const CrossedProduct& cp = cc->cp();
    Tuple head = slice(t, 0, s2), tail = slice(t, s2, s);
    Vec m = unit_vec(dm, t[s], p);
    Tuple a = slice(t, s + 1, s + 1 + r);
    for_each_sweedler(cc->H(), tail, r2 + 3, [&](const Scalar& k, const std::vector<Tuple>& parts) {
      Vec mid = eval_mixed(ev, de, p, head, acted(*cc, parts, 1, a, 0, r2), {});
      Vec x = cp.mul(cp.mul(cc->gamma_inv_times(parts[0]), mid), cc->gamma_times(parts[r2 + 1]));
      emit_mixed(parts[r2 + 2], {cc->m_right(m, x)}, slice(a, r2, r), sign * k, e);
    });
  };
  Matrix mat = induce_map(*c.xbar(r, s), *c.xbar(r - r2, s - s2), f, true, "cap");
  return mat.apply(y);
}

Vec unit_cocycle(const Cleft& c) {
  const HomSpace& x = c.xbar_co(0, 0);
  Matrix v(c.cp().dim(), x.src()->dim(), c.p());
  v.set_col(0, c.cp().one());
  auto co = x.coords(v);
  if (!co) throw std::logic_error("1_E is not K-central");
  return *co;
}

Vec cup_total(const Cleft& c, const TotalComplex& tc, int n, const Vec& x, int n2, const Vec& y) {
  Vec out = zero_vec(tc.c.dims[n + n2], c.p());
  for (size_t i = 0; i < tc.summands[n].size(); ++i) {
    Vec xi = block_of(tc, n, static_cast<int>(i), x);
    if (is_zero(xi)) continue;
    auto [r, s] = tc.summands[n][i];
    for (size_t j = 0; j < tc.summands[n2].size(); ++j) {
      Vec yj = block_of(tc, n2, static_cast<int>(j), y);
      if (is_zero(yj)) continue;
      auto [r2, s2] = tc.summands[n2][j];
      int k = summand_index(tc, n + n2, r + r2, s + s2);
      add_block(tc, n + n2, k, cup(c, r, s, xi, r2, s2, yj), out);
    }
  }
  return out;
}

Vec cap_total(const Cleft& c, const Cleft& ce, const TotalComplex& ch, const TotalComplex& co, int n, const Vec& y,
              int n2, const Vec& b) {
  Vec out = zero_vec(ch.c.dims[n - n2], c.p());
  for (size_t i = 0; i < ch.summands[n].size(); ++i) {
    Vec yi = block_of(ch, n, static_cast<int>(i), y);
    if (is_zero(yi)) continue;
    auto [r, s] = ch.summands[n][i];
    for (size_t j = 0; j < co.summands[n2].size(); ++j) {
      Vec bj = block_of(co, n2, static_cast<int>(j), b);
      if (is_zero(bj)) continue;
      auto [r2, s2] = co.summands[n2][j];
      if (r2 > r || s2 > s) continue;
      int k = summand_index(ch, n - n2, r - r2, s - s2);
      add_block(ch, n - n2, k, cap(c, ce, r, s, yi, r2, s2, bj), out);
    }
  }
  return out;
}

namespace {

std::vector<Vec> columns(const Matrix& m) {
  std::vector<Vec> out;
  for (int j = 0; j < m.cols(); ++j) out.push_back(m.col(j));
  return out;
}

// Class coordinates; nullopt when v is not a cycle.
std::optional<Vec> class_of(const HomologyBasis& hb, const Vec& v) { return hb.coords(v); }

}  // namespace

Report verify_products(const Cleft& c, int n_max) {
  Report rep;
  int p = c.p();
  TotalComplex co = c.cochains(n_max + 1);
  TotalComplex ch = c.chains(n_max + 1);
  Vec one = unit_cocycle(c);
  Vec one_t = zero_vec(co.c.dims[0], p);
  add_block(co, 0, 0, one, one_t);
  rep.add("1_E is a cocycle", is_zero(co.c.d[0].apply(one_t)));
  std::vector<HomologyBasis> hco, hch;
  for (int n = 0; n <= n_max; ++n) {
    hco.push_back(homology_basis(co.c, n));
    hch.push_back(homology_basis(ch.c, n));
  }
  bool unit_ok = true;
  std::string wu;
  for (int n = 0; n <= n_max; ++n)
    for (int i = 0; i < co.c.dims[n] && unit_ok; ++i) {
      Vec e = unit_vec(co.c.dims[n], i, p);
      if (!(cup_total(c, co, 0, one_t, n, e) == e) || !(cup_total(c, co, n, e, 0, one_t) == e)) {
        unit_ok = false;
        wu = "degree " + std::to_string(n) + " " + basis_witness({i});
      }
    }
  rep.add("1_E·β = β = β·1_E", unit_ok, wu);
  bool cyc = true, bnd = true, assoc = true;
  std::string wc, wb, wa;
  for (int n = 0; n <= n_max; ++n)
    for (int n2 = 0; n + n2 <= n_max; ++n2) {
      auto zx = columns(hco[n].reps), zy = columns(hco[n2].reps);
      for (const auto& x : zx)
        for (const auto& y : zy) {
          Vec xy = cup_total(c, co, n, x, n2, y);
          if (cyc && !class_of(hco[n + n2], xy)) {
            cyc = false;
            wc = "degrees " + std::to_string(n) + "," + std::to_string(n2);
          }
        }
      if (n >= 1) {
        auto bx = columns(co.c.d[n - 1]);
        for (const auto& x : bx)
          for (const auto& y : zy)
            for (const Vec& v : {cup_total(c, co, n, x, n2, y), cup_total(c, co, n2, y, n, x)}) {
              auto k = class_of(hco[n + n2], v);
              if (bnd && (!k || !is_zero(*k))) {
                bnd = false;
                wb = "degrees " + std::to_string(n) + "," + std::to_string(n2);
              }
            }
      }
    }
  rep.add("cocycle·cocycle is a cocycle", cyc, wc);
  rep.add("coboundary·cocycle is a coboundary", bnd, wb);
  bool capc = true;
  std::string wk;
  for (int n = 0; n <= n_max; ++n)
    for (int n2 = 0; n2 <= n; ++n2)
      for (int n3 = 0; n2 + n3 <= n; ++n3)
        for (const auto& y : columns(hch[n].reps))
          for (const auto& b : columns(hco[n2].reps)) {
            Vec yb = cap_total(c, c, ch, co, n, y, n2, b);
            if (capc && !class_of(hch[n - n2], yb)) {
              capc = false;
              wk = "y∗β not a cycle in degrees " + std::to_string(n) + "," + std::to_string(n2);
            }
            for (const auto& b2 : columns(hco[n3].reps)) {
              Vec lhs = cap_total(c, c, ch, co, n - n2, yb, n3, b2);
              Vec rhs = cap_total(c, c, ch, co, n, y, n2 + n3, cup_total(c, co, n2, b, n3, b2));
              auto l = class_of(hch[n - n2 - n3], lhs), r = class_of(hch[n - n2 - n3], rhs);
              if (assoc && (!l || !r || !(*l == *r))) {
                assoc = false;
                wa = "degrees " + std::to_string(n) + "," + std::to_string(n2) + "," + std::to_string(n3);
              }
            }
          }
  rep.add("y∗β is a cycle", capc, wk);
  rep.add("(y∗β)∗β' = y∗(β·β')", assoc, wa);
  return rep;
}

}  // namespace whcx
