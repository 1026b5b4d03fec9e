#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "linalg.hpp"
#include "report.hpp"
#include "space.hpp"

namespace whcx {

// One term c·e_{idx[0]}⊗…⊗e_{idx[n-1]} of an iterated coproduct.
struct Sw {
  Scalar c;
  Tuple idx;
};
using SwList = std::vector<Sw>;

struct Algebra {
  int dim = 0;
  int p = 0;
  std::vector<std::vector<SVec>> table;  // e_i e_j
  Vec unit;

  static Algebra from_tensor(int dim, int p, const std::vector<Scalar>& c, const Vec& unit);
  std::vector<Scalar> to_tensor() const;

  const SVec& mul(int i, int j) const { return table[i][j]; }
  Vec mul(const Vec& x, const Vec& y) const;
  Vec mul(int i, const Vec& y) const;
  Vec mul(const Vec& x, int j) const;
  Vec basis(int i) const { return unit_vec(dim, i, p); }
  Vec zero() const { return zero_vec(dim, p); }
  Report verify(const std::string& prefix = "") const;
};

struct Coalgebra {
  int dim = 0;
  int p = 0;
  std::vector<std::vector<std::pair<Scalar, std::pair<int, int>>>> comult;
  Vec counit;

  static Coalgebra from_tensor(int dim, int p, const std::vector<Scalar>& d, const Vec& counit);
  std::vector<Scalar> to_tensor() const;
};

class WeakHopf {
 public:
  WeakHopf(Algebra alg, Coalgebra co, Matrix antipode);

  int dim() const { return alg_.dim; }
  int prime() const { return alg_.p; }
  const Algebra& alg() const { return alg_; }
  const Coalgebra& coalg() const { return co_; }
  const Matrix& antipode() const { return s_; }
  const Vec& one() const { return alg_.unit; }

  // n-fold iterated coproduct, left nested; n = 1 is the identity.
  const SwList& delta(int i, int n) const;
  SwList delta(const Vec& v, int n) const;
  Vec delta_tensor(const Vec& v) const;  // Δ(v) as dim^2 vector

  Scalar eps(int i) const { return co_.counit[i]; }
  Scalar eps(const Vec& v) const;
  Vec S(int i) const { return s_.col(i); }
  Vec S(const Vec& v) const { return s_.apply(v); }
  Vec mul(const Vec& x, const Vec& y) const { return alg_.mul(x, y); }

  const Matrix& pi_l() const { return pi_l_; }
  const Matrix& pi_r() const { return pi_r_; }
  const Matrix& pib_l() const { return pib_l_; }
  const Matrix& pib_r() const { return pib_r_; }
  const std::vector<Vec>& hl_basis() const { return hl_; }
  const std::vector<Vec>& hr_basis() const { return hr_; }
  const Echelon& hl_echelon() const { return hl_e_; }
  bool in_hl(const Vec& v) const { return coordinates(hl_e_, v).has_value(); }

  bool genuinely_weak() const;
  Report verify_bialgebra() const;
  Report verify_antipode() const;
  Report verify_structure() const;
  Report verify_all() const;

 private:
  Algebra alg_;
  Coalgebra co_;
  Matrix s_;
  Matrix pi_l_, pi_r_, pib_l_, pib_r_;
  std::vector<Vec> hl_, hr_;
  Echelon hl_e_, hr_e_;
  struct Cache {
    std::mutex mu;
    std::map<std::pair<int, int>, SwList> map;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Σ c·h^{(1)}_{1s}⊗…⊗h^{(n)}_{1s}: parts[k][i] is the index of h_i^{(k+1)}.
// For n = 0 the term is Π ε(h_i) with no parts.
void for_each_sweedler(const WeakHopf& h, const Tuple& hs, int n,
                       const std::function<void(const Scalar&, const std::vector<Tuple>&)>& fn);

}  // namespace whcx
