#include "homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace whcx {

Matrix zero_map(int rows, int cols, int p) { return Matrix(rows, cols, p); }

void set_block(Matrix& m, int r0, int c0, const Matrix& b) {
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
}

Matrix block(const Matrix& m, int r0, int c0, int rows, int cols) {
  Matrix b(rows, cols, m.prime());
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) b(i, j) = m(r0 + i, c0 + j);
  return b;
}

int rank_of(const std::vector<Vec>& vs, int n, int p) { return static_cast<int>(echelon(vs, n, p).rows.size()); }

void GradedComplex::verify() const {
  for (int n = 0; n <= top(); ++n) {
    int t = target(n);
    if (t < 0 || t > top()) continue;
    const Matrix& a = d[n];
    if (a.cols() != dims[n] || a.rows() != dims[t])
      throw CheckFailed("differential shape", "degree " + std::to_string(n));
    int u = target(t);
    if (u < 0 || u > top()) continue;
    if (!(d[t] * a).is_zero()) throw CheckFailed("d∘d = 0", "degree " + std::to_string(n));
  }
}

std::vector<int> GradedComplex::homology_dims(int n_max) const {
  std::vector<int> out;
  for (int n = 0; n <= n_max; ++n) {
    int src = cochain ? n - 1 : n + 1;
    if (n > top() || (src >= 0 && src > top())) throw std::out_of_range("complex not built to degree " + std::to_string(src));
    int t = target(n);
    int out_rank = (t >= 0 && t <= top()) ? rank(d[n]) : 0;
    int in_rank = src >= 0 ? rank(d[src]) : 0;
    out.push_back(dims[n] - out_rank - in_rank);
  }
  return out;
}

TotalComplex total_complex(const std::map<std::pair<int, int>, int>& dims, const std::vector<Piece>& pieces,
                           int n_top, int p, bool cochain) {
  TotalComplex tc;
  tc.c.p = p;
  tc.c.cochain = cochain;
  tc.summands.resize(n_top + 1);
  tc.offset.resize(n_top + 1);
  tc.level.resize(n_top + 1);
  std::map<std::pair<int, int>, std::pair<int, int>> where;  // (r,s) → (n, offset)
  for (int n = 0; n <= n_top; ++n) {
    int off = 0;
    for (int s = 0; s <= n; ++s) {
      auto it = dims.find({n - s, s});
      if (it == dims.end()) throw std::out_of_range("missing bigraded space");
      tc.summands[n].push_back({n - s, s});
      tc.offset[n].push_back(off);
      where[{n - s, s}] = {n, off};
      for (int k = 0; k < it->second; ++k) tc.level[n].push_back(cochain ? -s : s);
      off += it->second;
    }
    tc.c.dims.push_back(off);
  }
  for (int n = 0; n <= n_top; ++n) {
    int t = tc.c.target(n);
    int rows = (t >= 0 && t <= n_top) ? tc.c.dims[t] : 0;
    tc.c.d.push_back(Matrix(rows, tc.c.dims[n], p));
  }
  for (const auto& pc : pieces) {
    auto a = where.find({pc.r, pc.s});
    auto b = where.find({pc.r2, pc.s2});
    if (a == where.end() || b == where.end()) continue;
    int n = a->second.first;
    if (b->second.first != tc.c.target(n)) throw std::invalid_argument("piece has the wrong total degree");
    Matrix& m = tc.c.d[n];
    for (int i = 0; i < pc.m.rows(); ++i)
      for (int j = 0; j < pc.m.cols(); ++j)
        m(b->second.second + i, a->second.second + j) += pc.m(i, j);
  }
  tc.c.verify();
  return tc;
}

namespace {

struct Pager {
  const FilteredComplex& fc;
  int p;
  int src_of(int n) const { return fc.c.cochain ? n - 1 : n + 1; }
  bool built(int n) const { return n >= 0 && n <= fc.c.top(); }

  // {x ∈ F^q X_n : dx ∈ F^{q−r}}
  std::vector<Vec> z(int r, int q, int n) const {
    std::vector<int> cols;
    for (int k = 0; k < fc.c.dims[n]; ++k)
      if (fc.level[n][k] <= q) cols.push_back(k);
    int dim = fc.c.dims[n];
    std::vector<Vec> out;
    if (cols.empty()) return out;
    int t = fc.c.target(n);
    std::vector<int> rows;
    if (built(t))
      for (int k = 0; k < fc.c.dims[t]; ++k)
        if (fc.level[t][k] > q - r) rows.push_back(k);
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()), p);
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < cols.size(); ++j) m(i, j) = fc.c.d[n](rows[i], cols[j]);
    for (const auto& v : kernel_basis(m)) {
      Vec x = zero_vec(dim, p);
      for (size_t j = 0; j < cols.size(); ++j) x[cols[j]] = v[j];
      out.push_back(x);
    }
    return out;
  }

  std::vector<Vec> image(const std::vector<Vec>& xs, int n) const {
    std::vector<Vec> out;
    for (const auto& x : xs) out.push_back(fc.c.d[n].apply(x));
    return out;
  }

  // Z^{r−1}_{q−1} + d Z^{r−1}_{q+r−1}
  std::vector<Vec> den(int r, int q, int n) const {
    std::vector<Vec> out = z(r - 1, q - 1, n);
    int s = src_of(n);
    if (built(s)) {
      auto im = image(z(r - 1, q + r - 1, s), s);
      out.insert(out.end(), im.begin(), im.end());
    }
    return out;
  }
};

}  // namespace

std::vector<SpectralPage> spectral_pages(const FilteredComplex& fc, int r_max, int n_max) {
  Pager pg{fc, fc.c.p};
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& lv : fc.level)
    for (int l : lv) {
      lo = first ? l : std::min(lo, l);
      hi = first ? l : std::max(hi, l);
      first = false;
    }
  std::vector<SpectralPage> pages;
  for (int r = 0; r <= r_max; ++r) {
    SpectralPage page;
    page.r = r;
    for (int n = 0; n <= n_max; ++n) {
      if (!pg.built(pg.src_of(n)) && pg.src_of(n) >= 0) throw std::out_of_range("filtered complex too short");
      for (int q = lo; q <= hi; ++q) {
        auto zz = pg.z(r, q, n);
        auto dn = pg.den(r, q, n);
        int dim_den = rank_of(dn, fc.c.dims[n], pg.p);
        auto both = dn;
        both.insert(both.end(), zz.begin(), zz.end());
        int e = rank_of(both, fc.c.dims[n], pg.p) - dim_den;
        page.dims[{q, n}] = e;
        int t = fc.c.target(n);
        int rk = 0;
        if (pg.built(t) && e > 0) {
          auto tden = pg.den(r, q - r, t);
          int base = rank_of(tden, fc.c.dims[t], pg.p);
          auto im = pg.image(zz, n);
          im.insert(im.end(), tden.begin(), tden.end());
          rk = rank_of(im, fc.c.dims[t], pg.p) - base;
        }
        page.d_rank[{q, n}] = rk;
      }
    }
    pages.push_back(std::move(page));
  }
  return pages;
}

Report verify_spectral(const FilteredComplex& fc, const std::vector<SpectralPage>& pages, int n_max) {
  Report rep;
  bool ok = true;
  std::string w;
  for (size_t i = 0; i + 1 < pages.size() && ok; ++i) {
    const auto& a = pages[i];
    const auto& b = pages[i + 1];
    int r = a.r;
    for (const auto& [key, dim] : a.dims) {
      auto [q, n] = key;
      if (n >= n_max) continue;  // incoming ranks need degree n + 1
      int out = a.d_rank.at(key);
      int src = fc.c.cochain ? n - 1 : n + 1;
      auto in_it = a.d_rank.find({q + r, src});
      int in = in_it == a.d_rank.end() ? 0 : in_it->second;
      if (b.dims.at(key) != dim - out - in) {
        ok = false;
        w = "page " + std::to_string(r + 1) + " (p,n) = " + tuple_str({q, n});
        break;
      }
    }
  }
  rep.add("E^{r+1} = H(E^r, d_r)", ok, w);
  auto h = fc.c.homology_dims(n_max);
  bool conv = true;
  std::string wc;
  const auto& last = pages.back();
  for (int n = 0; n <= n_max; ++n) {
    int sum = 0;
    bool settled = true;
    for (const auto& [key, dim] : last.dims)
      if (key.second == n) {
        sum += dim;
        if (last.d_rank.at(key) != 0) settled = false;
      }
    if (settled && sum != h[n]) {
      conv = false;
      wc = "degree " + std::to_string(n);
      break;
    }
  }
  rep.add("E^∞ sums to H_n", conv, wc);
  return rep;
}

Report MixedComplex::verify() const {
  Report rep;
  bool bb = true, BB = true, bB = true;
  std::string w1, w2, w3;
  int top = b.top();
  for (int n = 0; n <= top; ++n) {
    if (n >= 1 && !(b.d[n - 1].rows() == 0) && !(b.d[n - 1] * b.d[n]).is_zero() && bb) {
      bb = false;
      w1 = "degree " + std::to_string(n);
    }
    if (n + 2 <= top && n + 1 < static_cast<int>(B.size()) && !(B[n + 1] * B[n]).is_zero() && BB) {
      BB = false;
      w2 = "degree " + std::to_string(n);
    }
    if (n + 1 <= top && n < static_cast<int>(B.size())) {
      Matrix s = b.d[n + 1] * B[n];
      if (n >= 1 && n - 1 < static_cast<int>(B.size())) s = s + B[n - 1] * b.d[n];
      if (!s.is_zero() && bB) {
        bB = false;
        w3 = "degree " + std::to_string(n);
      }
    }
  }
  rep.add("b∘b = 0", bb, w1);
  rep.add("B∘B = 0", BB, w2);
  rep.add("B∘b + b∘B = 0", bB, w3);
  return rep;
}

namespace {

// Degree-n space of the column total complex over columns [lo, hi], X_{n−2c} per column c.
struct ColumnTotal {
  const MixedComplex& mx;
  int lo, hi;
  std::vector<std::pair<int, int>> parts(int n) const {  // (column, offset)
    std::vector<std::pair<int, int>> out;
    int off = 0;
    for (int c = hi; c >= lo; --c) {
      int k = n - 2 * c;
      if (k < 0) continue;
      if (k > mx.b.top()) throw std::out_of_range("mixed complex too short");
      out.push_back({c, off});
      off += mx.b.dims[k];
    }
    return out;
  }
  int dim(int n) const {
    int d = 0;
    for (auto [c, off] : parts(n)) d += mx.b.dims[n - 2 * c];
    return d;
  }
  Matrix diff(int n) const {
    int p = mx.b.p;
    auto src = parts(n), dst = parts(n - 1);
    Matrix m(dim(n - 1), dim(n), p);
    auto find = [&](int c) {
      for (auto [cc, off] : dst)
        if (cc == c) return off;
      return -1;
    };
    for (auto [c, off] : src) {
      int k = n - 2 * c;
      if (k >= 1) {
        int o = find(c);
        if (o >= 0) set_block(m, o, off, mx.b.d[k]);
      }
      int o = find(c - 1);
      if (o >= 0) set_block(m, o, off, mx.B[k]);
    }
    return m;
  }
  int homology(int n) const {
    int out = rank(diff(n));
    return dim(n) - out - rank(diff(n + 1));
  }
};

}  // namespace

CyclicDims cyclic_from_mixed(const MixedComplex& mx, int n_max, int trunc) {
  CyclicDims cd;
  int top = mx.b.top();
  if (n_max + 1 > top) throw std::out_of_range("mixed complex too short");
  const int inf = 1 << 20;
  ColumnTotal bc{mx, 0, inf};
  for (int n = 0; n <= n_max; ++n) cd.hc.push_back(bc.homology(n));
  auto window = [&](int t, bool periodic) {
    ColumnTotal w{mx, -t, periodic ? inf : 0};
    std::vector<int> out;
    for (int n = 0; n <= n_max; ++n) out.push_back(w.homology(n));
    return out;
  };
  for (int periodic = 0; periodic < 2; ++periodic) {
    std::vector<int> prev = window(0, periodic);
    bool stable = false;
    int t = 0;
    while (t < trunc && n_max + 1 + 2 * (t + 1) <= top) {
      auto next = window(t + 1, periodic);
      ++t;
      if (next == prev) {
        stable = true;
        break;
      }
      prev = next;
    }
    if (periodic) {
      cd.hp = prev;
      cd.hp_stable = stable;
      cd.hp_window = t;
    } else {
      cd.hn = prev;
      cd.hn_stable = stable;
      cd.hn_window = t;
    }
  }
  return cd;
}

bool homotopy_check(const std::vector<Matrix>& f, const std::vector<Matrix>& g, const std::vector<Matrix>& h,
                    const GradedComplex& src, const GradedComplex& dst, int n_max, std::string* witness) {
  bool ch = !src.cochain;
  for (int n = 0; n <= n_max; ++n) {
    Matrix lhs = f[n] - g[n];
    // chain: d_{n+1} h_n + h_{n−1} d_n; cochain: d^{n−1} h^n + h^{n+1} d^n
    int up = ch ? n + 1 : n - 1;
    Matrix rhs(lhs.rows(), lhs.cols(), lhs.prime());
    if (up >= 0 && up <= dst.top()) rhs = rhs + dst.d[up] * h[n];
    int dn = ch ? n - 1 : n + 1;
    int t = src.target(n);
    if (dn >= 0 && dn < static_cast<int>(h.size()) && t >= 0 && t <= src.top()) rhs = rhs + h[dn] * src.d[n];
    if (!(lhs == rhs)) {
      if (witness) *witness = "degree " + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool is_chain_map(const std::vector<Matrix>& f, const GradedComplex& src, const GradedComplex& dst, int n_max,
                  std::string* witness) {
  for (int n = 0; n <= n_max; ++n) {
    int t = src.target(n);
    if (t < 0 || t > n_max) continue;
    if (!(dst.d[n] * f[n] == f[t] * src.d[n])) {
      if (witness) *witness = "degree " + std::to_string(n);
      return false;
    }
  }
  return true;
}

HomologyBasis homology_basis(const GradedComplex& c, int n) {
  HomologyBasis hb;
  int p = c.p;
  hb.dim = c.dims[n];
  int t = c.target(n);
  hb.cycles_d = (t >= 0 && t <= c.top()) ? c.d[n] : Matrix(0, hb.dim, p);
  int src = c.cochain ? n - 1 : n + 1;
  if (src < 0) {
    hb.boundaries = Matrix(hb.dim, 0, p);
  } else {
    if (src > c.top()) throw std::out_of_range("complex not built to degree " + std::to_string(src));
    hb.boundaries = c.d[src];
  }
  std::vector<Vec> z = hb.cycles_d.rows() ? kernel_basis(hb.cycles_d) : std::vector<Vec>{};
  if (!hb.cycles_d.rows())
    for (int i = 0; i < hb.dim; ++i) z.push_back(unit_vec(hb.dim, i, p));
  std::vector<Vec> span;
  for (int j = 0; j < hb.boundaries.cols(); ++j) span.push_back(hb.boundaries.col(j));
  int r = rank_of(span, hb.dim, p);
  std::vector<Vec> reps;
  for (const auto& v : z) {
    span.push_back(v);
    int r2 = rank_of(span, hb.dim, p);
    if (r2 > r) {
      reps.push_back(v);
      r = r2;
    } else {
      span.pop_back();
    }
  }
  hb.reps = Matrix::from_cols(reps, hb.dim, p);
  return hb;
}

std::optional<Vec> HomologyBasis::coords(const Vec& v) const {
  int p = reps.prime();
  if (cycles_d.rows() && !is_zero(cycles_d.apply(v))) return std::nullopt;
  int nb = boundaries.cols();
  Matrix m(dim, nb + reps.cols(), p);
  set_block(m, 0, 0, boundaries);
  set_block(m, 0, nb, reps);
  auto x = solve_linear(m, Matrix::from_cols({v}, dim, p));
  if (!x) return std::nullopt;
  Vec out(reps.cols(), Scalar(0, p));
  for (int i = 0; i < reps.cols(); ++i) out[i] = (*x)(nb + i, 0);
  return out;
}

Matrix induced_on_homology(const HomologyBasis& src, const HomologyBasis& dst, const Matrix& f) {
  int p = f.prime();
  Matrix out(dst.size(), src.size(), p);
  for (int i = 0; i < src.size(); ++i) {
    auto c = dst.coords(f.apply(src.reps.col(i)));
    if (!c) throw std::logic_error("map does not send cycles to cycles");
    out.set_col(i, *c);
  }
  return out;
}

}  // namespace whcx
