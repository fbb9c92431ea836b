#pragma once

// Random instance generators shared by the unit and acceptance tests.

#include <cstdint>
#include <vector>

#include "zekit/matcore.hpp"
#include "zekit/rng.hpp"

namespace zekit::testing {

inline CMatrix random_matrix(CounterRng& rng, std::size_t rows, std::size_t cols) {
  CMatrix m(rows, cols);
  for (auto& z : m.entries()) z = rng.complex_normal();
  return m;
}

inline CMatrix random_hermitian(CounterRng& rng, std::size_t n) {
  const CMatrix g = random_matrix(rng, n, n);
  CMatrix h = g + g.adjoint();
  h *= 0.5;
  return h;
}

// Haar-ish unitary: Gram-Schmidt on a Gaussian matrix.
inline CMatrix random_unitary(CounterRng& rng, std::size_t n) {
  return orthonormal_columns(random_matrix(rng, n, n), 0.0);
}

inline CVector column(const CMatrix& m, std::size_t j) {
  CVector v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

inline CMatrix columns_to_matrix(const std::vector<CVector>& cols) {
  if (cols.empty()) return {};
  CMatrix m(cols.front().dim(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
  return m;
}

}  // namespace zekit::testing
