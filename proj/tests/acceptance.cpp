// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic throughout.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "cleft.hpp"
#include "commands.hpp"
#include "instance.hpp"
#include "whhom.hpp"

using namespace whcx;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fixture(const std::string& name) { return std::string(WHCX_FIXTURES) + "/" + name + ".json"; }

Instance inst(const std::string& name) { return load_instance(fixture(name)); }

Cleft cleft(const std::string& name) { return build_cleft(inst(name)); }

// Collects the first failure of a criterion.
struct Crit {
  bool ok = true;
  std::string why;
  void need(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
  void need(const Report& r, const std::string& where) {
    const Check* c = r.first_failure();
    if (c) need(false, where + ": " + c->name + (c->witness.empty() ? "" : " at " + c->witness));
  }
};

std::string dims_str(const std::vector<int>& d) {
  std::string s;
  for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s;
}

int failures = 0;

void criterion(int k, const std::string& title, const std::function<void(Crit&)>& body) {
  Crit c;
  auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.need(false, std::string("exception: ") + e.what());
  }
  double s = seconds_since(t0);
  if (!c.ok) ++failures;
  std::printf("%s criterion %2d: %s (%.2f s)%s%s\n", c.ok ? "PASS" : "FAIL", k, title.c_str(), s,
              c.ok ? "" : " -- ", c.why.c_str());
  std::fflush(stdout);
}

// Runs a suite and requires it to pass in under a second.
void timed_suite(Crit& c, const std::string& where, const std::function<Report()>& suite) {
  auto t0 = Clock::now();
  Report r = suite();
  double s = seconds_since(t0);
  c.need(r, where);
  c.need(s < 1.0, where + " took " + std::to_string(s) + " s");
}

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  std::string cmd = std::string(WHCX_CLI) + " " + args + " 2>&1";
  Run r{-1, {}};
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, p)) r.out += buf;
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

int main() {
  criterion(1, "axiom suites on QC_2, Q×Q, pair_groupoid(2) and the trivial-representation crossed product",
            [](Crit& c) {
              for (const char* name : {"qc2", "qxq", "trivial_rep"}) {
                Instance in = inst(name);
                const WeakHopf& H = *in.H;
                std::string w = name;
                timed_suite(c, w + " bialgebra", [&] { return H.verify_bialgebra(); });
                timed_suite(c, w + " antipode", [&] { return H.verify_antipode(); });
                timed_suite(c, w + " structure", [&] { return H.verify_structure(); });
                timed_suite(c, w + " H^R module", [&] { return verify_hr_module(H); });
              }
              Instance tr = inst("trivial_rep");
              c.need(tr.H->dim() == 4 && tr.H->hl_basis().size() == 2, "pair_groupoid(2) has dim 4 and H^L dim 2");
              c.need(tr.H->genuinely_weak(), "pair_groupoid(2) is genuinely weak");
              const WeakMeasure& m = tr.measure;
              Cocycle f = tr.cocycle();
              timed_suite(c, "trivial rep module algebra", [&] { return m.verify_module_algebra(); });
              timed_suite(c, "trivial rep crossed hypotheses", [&] { return verify_crossed_hypotheses(m, f); });
              auto inv = invert_cocycle(m, f);
              c.need(inv.has_value(), "trivial cocycle invertible");
              if (!inv) return;
              timed_suite(c, "trivial rep cocycle pair", [&] { return verify_cocycle_pair(m, f, inv->inv); });
              timed_suite(c, "trivial rep stable K", [&] { return verify_stable_subalgebra(m, tr.k_basis()); });
              CrossedProduct cp(m, f, inv->inv);
              timed_suite(c, "trivial rep crossed product", [&] { return cp.verify(); });
              timed_suite(c, "trivial rep comodule", [&] { return cp.verify_comodule(); });
              timed_suite(c, "trivial rep cleft identities", [&] { return cp.verify_cleft_identities(2); });
            });

  criterion(2, "ħ∘d′ + d′∘ħ = id on the resolution up to s = 3", [](Crit& c) {
    for (const char* name : {"qc2", "f2c2", "qxq", "trivial_rep"}) {
      Instance in = inst(name);
      c.need(verify_resolution(build_resolution(*in.H, 3), 3), name);
    }
  });

  criterion(3, "Θ∘Λ = I and Λ∘Θ = I for r+s ≤ 3, chain and cochain", [](Crit& c) {
    for (const char* name : {"qc2_smash", "trivial_rep"}) c.need(verify_theta_lambda(cleft(name), 3), name);
  });

  criterion(4, "d̄∘d̄ = 0 and d̄² = 0 for K-valued f, n ≤ 4", [](Crit& c) {
    for (const char* name : {"qc2", "f2c2", "qc2_smash", "trivial_rep"}) {
      Cleft x = cleft(name);
      c.need(x.k_valued(), std::string(name) + " has K-valued f");
      c.need(verify_xbar_differentials(x, 4), name);
      for (const TotalComplex& tc : {x.chains(4), x.cochains(4)})
        for (int n = 0; n <= 4; ++n) {
          int t = tc.c.target(n);
          if (t < 0 || t > 4) continue;
          int u = tc.c.target(t);
          if (u < 0 || u > 4) continue;
          c.need((tc.c.d[t] * tc.c.d[n]).is_zero(), std::string(name) + " total d∘d in degree " + std::to_string(n));
        }
      for (int r = 0; r <= 4; ++r)
        for (int s = 2; r + s <= 4; ++s)
          c.need(x.d2(r, s).is_zero(), std::string(name) + " d̄² at (" + std::to_string(r) + "," + std::to_string(s) + ")");
    }
  });

  criterion(5, "HH_n from X̄ equals the canonical complex, n ≤ 3, under 30 s", [](Crit& c) {
    auto t0 = Clock::now();
    for (const char* name : {"qc2", "f2c2", "qc2_smash"}) {
      Cleft x = cleft(name);
      auto a = hochschild_homology_cleft(x, 3), b = canonical_homology_dims(x, 3);
      c.need(a == b, std::string(name) + ": " + dims_str(a) + " vs " + dims_str(b));
    }
    c.need(seconds_since(t0) < 30.0, "runtime over 30 s");
  });

  criterion(6, "HH^n from X̄ equals the canonical complex, n ≤ 3", [](Crit& c) {
    for (const char* name : {"qc2", "f2c2", "qc2_smash"}) {
      Cleft x = cleft(name);
      auto a = hochschild_cohomology_cleft(x, 3), b = canonical_cohomology_dims(x, 3);
      c.need(a == b, std::string(name) + ": " + dims_str(a) + " vs " + dims_str(b));
    }
  });

  criterion(7, "A = K: HH_n = H_n(H, M⊗) and HH^n = H^n(H, M^K), n ≤ 3", [](Crit& c) {
    for (const char* name : {"qc2", "f2c2", "trivial_rep", "qxq"}) {
      Cleft x = cleft(name);
      c.need(x.dK() == x.A().dim, std::string(name) + " has A = K");
      HModule co = coinvariant_module(x), in = invariant_module(x);
      c.need(co.verify(x.H()), std::string(name) + " M⊗");
      c.need(in.verify(x.H()), std::string(name) + " M^K");
      auto a = hochschild_homology_cleft(x, 3), b = homology_of_H(x.H(), co, 3);
      c.need(a == b, std::string(name) + " homology " + dims_str(a) + " vs " + dims_str(b));
      auto d = hochschild_cohomology_cleft(x, 3), e = cohomology_of_H(x.H(), in, 3);
      c.need(d == e, std::string(name) + " cohomology " + dims_str(d) + " vs " + dims_str(e));
    }
  });

  criterion(8, "F¹ = id, the homotopy for F^h F^l − F^{hl}, and the H-module axioms, r ≤ 2", [](Crit& c) {
    for (const char* name : {"qc2_smash", "trivial_rep", "inner_twisted"}) {
      Cleft x = cleft(name);
      c.need(verify_module_structure(x, 2), std::string(name) + " chains");
      c.need(verify_module_structure_co(x, 2), std::string(name) + " cochains");
    }
  });

  criterion(9, "E² = H_s(H, H^K_r(A,M)) and the cohomological mirror, r+s ≤ 3, smash", [](Crit& c) {
    Cleft x = cleft("qc2_smash");
    c.need(spectral_e2(x, 3).report, "homology");
    c.need(spectral_e2_co(x, 3).report, "cohomology");
  });

  criterion(10, "mixed complex, T_s for s ≤ 2, HC_n = canonical for n ≤ 3, HN/HP stabilized on separable fixtures",
            [](Crit& c) {
              for (const char* name : {"qc2", "f2c2", "qc2_smash", "trivial_rep", "qxq"}) {
                Cleft x = cleft(name);
                c.need(verify_t_maps(x, 2), name);
                CyclicComparison cc = cyclic_compare(x, 3, 1);
                c.need(cc.report, name);
              }
              for (const char* name : {"qc2", "trivial_rep", "qxq"}) {
                CyclicComparison cc = cyclic_compare(cleft(name), 3, 1);
                for (const auto* d : {&cc.xbar, &cc.canonical}) {
                  c.need(d->hn_stable, std::string(name) + " HN window not stabilized");
                  c.need(d->hp_stable, std::string(name) + " HP window not stabilized");
                }
                c.need(cc.xbar.hn == cc.canonical.hn && cc.xbar.hp == cc.canonical.hp, std::string(name) + " HN/HP");
              }
            });

  criterion(11, "cup keeps cocycles and coboundaries, (y∗β)∗β′ = y∗(β·β′), smash, degrees ≤ 2", [](Crit& c) {
    Report r = verify_products(cleft("qc2_smash"), 2);
    for (const char* name : {"cocycle·cocycle is a cocycle", "coboundary·cocycle is a coboundary",
                             "(y∗β)∗β' = y∗(β·β')"})
      c.need(r.find(name) != nullptr, std::string("missing check ") + name);
    c.need(r, "smash");
  });

  criterion(12, "negative controls fail the named check with a nonzero exit", [](Crit& c) {
    for (auto [name, check] : {std::pair{"corrupted", "propiedad de epsilon"}, {"noninvertible_f", "f invertible"},
                               {"unstable_k", "estable bajo rho"}}) {
      Run r = run_cli("verify " + fixture(name));
      c.need(r.code != 0, std::string(name) + " exited 0");
      c.need(r.out.find(std::string("[FAIL] ") + check) != std::string::npos, std::string(name) + " does not name " + check);
      Outcome o = run_command(inst(name), "verify", {});
      const Check* f = nullptr;
      for (const auto& ch : o.report.checks)
        if (!ch.pass && ch.name.rfind(check, 0) == 0) f = &ch;
      c.need(f != nullptr, std::string(name) + " report lacks a failing " + check);
    }
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures ? 1 : 0;
}
