#pragma once

// Compressed list of n x n matrices, used as the working representation of
// operator-system bases. Tensor products of the systems in this library stay
// sparse (each N_theta basis element has at most four nonzeros), so a k-fold
// product keeps at most 4^k nonzeros per element instead of 16^k.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "zekit/matcore.hpp"

namespace zekit {

struct SparseEntry {
  std::uint32_t row;
  std::uint32_t col;
  cplx value;
};

class SparseBasis {
 public:
  SparseBasis() = default;
  explicit SparseBasis(std::size_t ambient_dim) : dim_(ambient_dim) {}

  static SparseBasis from_dense(std::span<const CMatrix> mats);
  /// Element (i * b.size() + j) is kron(a[i], b[j]).
  static SparseBasis kron(const SparseBasis& a, const SparseBasis& b);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t size() const { return offsets_.size() - 1; }
  bool empty() const { return size() == 0; }
  std::size_t nonzeros() const { return entries_.size(); }

  std::span<const SparseEntry> element(std::size_t k) const {
    return {entries_.data() + offsets_[k], offsets_[k + 1] - offsets_[k]};
  }

  void push_back(const CMatrix& m);
  void push_back(std::span<const SparseEntry> entries);

  CMatrix dense(std::size_t k) const;
  std::vector<CMatrix> dense_all() const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<SparseEntry> entries_;
};

/// <x|A|y> for a sparse element A.
inline cplx sparse_sandwich(std::span<const SparseEntry> a, std::span<const cplx> x, std::span<const cplx> y) {
  cplx s{0.0, 0.0};
  for (const auto& e : a) s += std::conj(x[e.row]) * e.value * y[e.col];
  return s;
}

/// out += coef * A y
inline void sparse_axpy(std::span<const SparseEntry> a, cplx coef, std::span<const cplx> y, std::span<cplx> out) {
  for (const auto& e : a) out[e.row] += coef * e.value * y[e.col];
}

/// tr(A* M) for sparse A and dense M.
cplx sparse_hs_inner(std::span<const SparseEntry> a, const CMatrix& m);

}  // namespace zekit
