#include <string>

#include "cleft.hpp"
#include "cleft_detail.hpp"

namespace whcx {

using namespace detail;

namespace {

Vec hbasis(const Cleft& c, int h) { return unit_vec(c.H().dim(), h, c.p()); }

Vec hprod(const Cleft& c, int h, int l) { return c.H().mul(hbasis(c, h), hbasis(c, l)); }

}  // namespace

Report verify_module_structure(const Cleft& c, int r_max) {
  Report rep;
  int p = c.p();
  int dh = c.H().dim();
  GradedComplex w = c.a_chains(r_max + 1);
  for (int r = 0; r <= r_max; ++r)
    rep.add("F^1 = id", c.F(c.H().one(), r) == Matrix::identity(w.dims[r], p), "r=" + std::to_string(r));
  for (int h = 0; h < dh; ++h) {
    std::vector<Matrix> f;
    for (int r = 0; r <= r_max + 1; ++r) f.push_back(c.F(hbasis(c, h), r));
    std::string wit;
    rep.add("F^h is a chain map", is_chain_map(f, w, w, r_max + 1, &wit), basis_witness({h}) + " " + wit);
  }
  bool ok = true, printed = true;
  std::string wit;
  for (int h = 0; h < dh; ++h)
    for (int l = 0; l < dh; ++l) {
      std::vector<Matrix> fhl, ff, hh;
      for (int r = 0; r <= r_max; ++r) {
        fhl.push_back(c.F(hprod(c, h, l), r));
        ff.push_back(c.F(hbasis(c, h), r) * c.F(hbasis(c, l), r));
        hh.push_back(c.frak_h(hbasis(c, h), hbasis(c, l), r));
      }
      std::string x;
      if (ok && !homotopy_check(ff, fhl, hh, w, w, r_max, &x)) {
        ok = false;
        wit = basis_witness({h, l}) + " " + x;
      }
      if (printed && !homotopy_check(fhl, ff, hh, w, w, r_max)) printed = false;
    }
  rep.add("F^h F^l − F^{hl} = b𝔥 + 𝔥b", ok, wit);
  rep.notes.push_back(std::string("printed orientation F^{hl} − F^h F^l: ") + (printed ? "holds" : "fails"));
  for (int r = 0; r <= r_max; ++r) {
    Report m = a_homology_module(c, r).verify(c.H());
    for (auto& ch : m.checks) ch.witness = "r=" + std::to_string(r) + " " + ch.witness;
    rep.append(m);
  }
  return rep;
}

Report verify_module_structure_co(const Cleft& c, int r_max) {
  Report rep;
  int p = c.p();
  int dh = c.H().dim();
  GradedComplex w = c.a_cochains(r_max + 1);
  for (int r = 0; r <= r_max; ++r)
    rep.add("F^*_1 = id", c.F_co(c.H().one(), r) == Matrix::identity(w.dims[r], p), "r=" + std::to_string(r));
  for (int h = 0; h < dh; ++h) {
    std::vector<Matrix> f;
    for (int r = 0; r <= r_max + 1; ++r) f.push_back(c.F_co(hbasis(c, h), r));
    std::string wit;
    rep.add("F^*_h is a cochain map", is_chain_map(f, w, w, r_max + 1, &wit), basis_witness({h}) + " " + wit);
  }
  // ok[k]: k bit 0 selects F^*_h F^*_l over F^*_l F^*_h, bit 1 selects G − F^*_{hl} over F^*_{hl} − G
  bool ok[4] = {true, true, true, true};
  std::string wit[4];
  for (int h = 0; h < dh; ++h)
    for (int l = 0; l < dh; ++l) {
      std::vector<Matrix> fhl, g[2], hh;
      hh.push_back(Matrix(0, w.dims[0], p));
      for (int r = 0; r <= r_max; ++r) {
        fhl.push_back(c.F_co(hprod(c, h, l), r));
        g[0].push_back(c.F_co(hbasis(c, l), r) * c.F_co(hbasis(c, h), r));
        g[1].push_back(c.F_co(hbasis(c, h), r) * c.F_co(hbasis(c, l), r));
        hh.push_back(c.frak_h_co(hbasis(c, h), hbasis(c, l), r));
      }
      for (int k = 0; k < 4; ++k) {
        std::string x;
        bool good = k & 2 ? homotopy_check(g[k & 1], fhl, hh, w, w, r_max, &x)
                          : homotopy_check(fhl, g[k & 1], hh, w, w, r_max, &x);
        if (ok[k] && !good) {
          ok[k] = false;
          wit[k] = basis_witness({h, l}) + " " + x;
        }
      }
    }
  rep.add("F^*_l F^*_h − F^*_{hl} = b𝔥 + 𝔥b", ok[2], wit[2]);
  const char* names[4] = {"F^*_{hl} − F^*_l F^*_h", "F^*_{hl} − F^*_h F^*_l", "F^*_l F^*_h − F^*_{hl}",
                          "F^*_h F^*_l − F^*_{hl}"};
  for (int k = 0; k < 4; ++k)
    rep.notes.push_back(std::string(names[k]) + " = b𝔥 + 𝔥b: " + (ok[k] ? "holds" : "fails at " + wit[k]));
  for (int r = 0; r <= r_max; ++r) {
    Report m = a_cohomology_module(c, r).verify(c.H());
    for (auto& ch : m.checks) ch.witness = "r=" + std::to_string(r) + " " + ch.witness;
    rep.append(m);
  }
  return rep;
}

HModule a_homology_module(const Cleft& c, int r) {
  GradedComplex w = c.a_chains(r + 1);
  HomologyBasis hb = homology_basis(w, r);
  HModule m{hb.size(), c.p(), false, {}};
  for (int h = 0; h < c.H().dim(); ++h) m.act.push_back(induced_on_homology(hb, hb, c.F(hbasis(c, h), r)));
  return m;
}

HModule a_cohomology_module(const Cleft& c, int r) {
  GradedComplex w = c.a_cochains(r + 1);
  HomologyBasis hb = homology_basis(w, r);
  HModule m{hb.size(), c.p(), true, {}};
  for (int h = 0; h < c.H().dim(); ++h) m.act.push_back(induced_on_homology(hb, hb, c.F_co(hbasis(c, h), r)));
  return m;
}

namespace {

E2Comparison compare_e2(const Cleft& c, int n_max, bool co) {
  E2Comparison out;
  TotalComplex tc = co ? c.cochains(n_max + 1) : c.chains(n_max + 1);
  FilteredComplex fc{tc.c, tc.level};
  auto pages = spectral_pages(fc, 2, n_max);
  out.report.append(verify_spectral(fc, pages, n_max));
  const SpectralPage& e2 = pages[2];
  for (int r = 0; r <= n_max; ++r) {
    HModule m = co ? a_cohomology_module(c, r) : a_homology_module(c, r);
    auto h = co ? cohomology_of_H(c.H(), m, n_max - r) : homology_of_H(c.H(), m, n_max - r);
    for (int s = 0; r + s <= n_max; ++s) {
      auto it = e2.dims.find({co ? -s : s, r + s});
      out.filtration[{r, s}] = it == e2.dims.end() ? 0 : it->second;
      out.via_h[{r, s}] = h[s];
      std::string at = "(r,s)=(" + std::to_string(r) + "," + std::to_string(s) + ")";
      out.report.add(co ? "E_2 = H^s(H, H^r(A,M))" : "E^2 = H_s(H, H_r(A,M))", out.filtration[{r, s}] == h[s], at);
    }
  }
  return out;
}

}  // namespace

E2Comparison spectral_e2(const Cleft& c, int n_max) { return compare_e2(c, n_max, false); }

E2Comparison spectral_e2_co(const Cleft& c, int n_max) { return compare_e2(c, n_max, true); }

HModule coinvariant_module(const Cleft& c) {
  HModule m{c.w(0)->dim(), c.p(), false, {}};
  for (int h = 0; h < c.H().dim(); ++h) m.act.push_back(c.F(hbasis(c, h), 0));
  return m;
}

HModule invariant_module(const Cleft& c) {
  HModule m{c.xbar_co(0, 0).dim(), c.p(), true, {}};
  for (int h = 0; h < c.H().dim(); ++h) m.act.push_back(c.F_co(hbasis(c, h), 0));
  return m;
}

}  // namespace whcx
