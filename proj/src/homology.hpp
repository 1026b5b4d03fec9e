#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "report.hpp"

namespace whcx {

// Chain complexes have d[n]: X_n → X_{n−1} (d[0] has no rows); cochain
// complexes have d[n]: X^n → X^{n+1}.
struct GradedComplex {
  int p = 0;
  bool cochain = false;
  std::vector<int> dims;
  std::vector<Matrix> d;

  int top() const { return static_cast<int>(dims.size()) - 1; }
  int target(int n) const { return cochain ? n + 1 : n - 1; }
  // Throws CheckFailed("d∘d = 0") on the first failing degree.
  void verify() const;
  // Needs the differential into degree n, so chain complexes must be built to n_max + 1.
  std::vector<int> homology_dims(int n_max) const;
};

// Matrix of the zero map between spaces of the given dims.
Matrix zero_map(int rows, int cols, int p);
void set_block(Matrix& m, int r0, int c0, const Matrix& b);
Matrix block(const Matrix& m, int r0, int c0, int rows, int cols);

// One component of a multi-graded differential: (r,s) → (r2,s2).
struct Piece {
  int r, s, r2, s2;
  Matrix m;
};

// Total complex of a multicomplex with spaces dims[{r,s}], n = r + s.
// Each total degree lists its summands by ascending s.
struct TotalComplex {
  GradedComplex c;
  std::vector<std::vector<std::pair<int, int>>> summands;  // (r,s) per degree
  std::vector<std::vector<int>> offset;
  // Filtration index of each basis vector: s for chain, −s for cochain.
  std::vector<std::vector<int>> level;
};
TotalComplex total_complex(const std::map<std::pair<int, int>, int>& dims, const std::vector<Piece>& pieces,
                           int n_top, int p, bool cochain);

// Increasing filtration F^p = span of basis vectors with level ≤ p, preserved by d.
struct FilteredComplex {
  GradedComplex c;
  std::vector<std::vector<int>> level;
};

struct SpectralPage {
  int r = 0;
  std::map<std::pair<int, int>, int> dims;    // (p, n) → dim E^r
  std::map<std::pair<int, int>, int> d_rank;  // rank of d_r leaving (p, n)
};
// Pages 0..r_max in degrees 0..n_max; needs the complex through degree n_max + 1.
std::vector<SpectralPage> spectral_pages(const FilteredComplex& fc, int r_max, int n_max);
// E^{r+1} = H(E^r, d_r) on every page, and the last page sums to the homology.
Report verify_spectral(const FilteredComplex& fc, const std::vector<SpectralPage>& pages, int n_max);

// b: X_n → X_{n−1} and B[n]: X_n → X_{n+1}.
struct MixedComplex {
  GradedComplex b;
  std::vector<Matrix> B;
  Report verify() const;
};

struct CyclicDims {
  std::vector<int> hc, hn, hp;
  bool hn_stable = false, hp_stable = false;
  int hn_window = 0, hp_window = 0;
};
// HC from the BC complex; HN/HP from column windows [−t, …], grown until two
// successive windows agree or trunc or the built degrees run out.
CyclicDims cyclic_from_mixed(const MixedComplex& mx, int n_max, int trunc);

// f_n − g_n = d h_n + h_{n−1} d for n ≤ n_max; h[n] raises (chain) or lowers (cochain) degree.
bool homotopy_check(const std::vector<Matrix>& f, const std::vector<Matrix>& g, const std::vector<Matrix>& h,
                    const GradedComplex& src, const GradedComplex& dst, int n_max, std::string* witness = nullptr);
bool is_chain_map(const std::vector<Matrix>& f, const GradedComplex& src, const GradedComplex& dst, int n_max,
                  std::string* witness = nullptr);

int rank_of(const std::vector<Vec>& vs, int n, int p);

// A basis of H_n given by representative cycles, complementing the boundaries.
struct HomologyBasis {
  int dim = 0;          // ambient dimension of X_n
  Matrix boundaries;    // columns span B_n
  Matrix reps;          // columns are cycles
  int size() const { return reps.cols(); }
  // Class coordinates of a cycle; nullopt if v is not a cycle.
  std::optional<Vec> coords(const Vec& v) const;
  Matrix cycles_d;      // the outgoing differential, to test cycles
};
HomologyBasis homology_basis(const GradedComplex& c, int n);
// Matrix of the map induced on homology by f: X_n → Y_n.
Matrix induced_on_homology(const HomologyBasis& src, const HomologyBasis& dst, const Matrix& f);

}  // namespace whcx
