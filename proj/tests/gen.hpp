#pragma once

#include <random>

#include "linalg.hpp"

// Hand-rolled generators for property tests.
namespace gen {

inline whcx::Scalar random_scalar(std::mt19937& rng, int p) {
  int num = static_cast<int>(rng() % 7) - 3;
  if (p) return whcx::Scalar(num, p);
  int den = 1 + static_cast<int>(rng() % 3);
  return whcx::Scalar(mpq_class(num, den), 0);
}

inline whcx::Matrix random_matrix(std::mt19937& rng, int r, int c, int p) {
  whcx::Matrix m(r, c, p);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (rng() % 3) m(i, j) = random_scalar(rng, p);
  return m;
}

}  // namespace gen
