#include "zekit/sparse_basis.hpp"

#include "zekit/errors.hpp"

namespace zekit {

SparseBasis SparseBasis::from_dense(std::span<const CMatrix> mats) {
  SparseBasis out(mats.empty() ? 0 : mats[0].rows());
  for (const auto& m : mats) out.push_back(m);
  return out;
}

void SparseBasis::push_back(const CMatrix& m) {
  if (!m.square()) throw DimensionMismatch("SparseBasis: matrix is not square");
  if (empty() && entries_.empty() && dim_ == 0) dim_ = m.rows();
  if (m.rows() != dim_) throw DimensionMismatch("SparseBasis: ambient dimension mismatch");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != cplx{}) entries_.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), m(i, j)});
  offsets_.push_back(entries_.size());
}

void SparseBasis::push_back(std::span<const SparseEntry> entries) {
  entries_.insert(entries_.end(), entries.begin(), entries.end());
  offsets_.push_back(entries_.size());
}

SparseBasis SparseBasis::kron(const SparseBasis& a, const SparseBasis& b) {
  const std::size_t nb = b.ambient_dim();
  SparseBasis out(a.ambient_dim() * nb);
  out.entries_.reserve(a.nonzeros() * b.nonzeros());
  out.offsets_.reserve(a.size() * b.size() + 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      for (const auto& ea : a.element(i))
        for (const auto& eb : b.element(j))
          out.entries_.push_back({static_cast<std::uint32_t>(ea.row * nb + eb.row),
                                  static_cast<std::uint32_t>(ea.col * nb + eb.col), ea.value * eb.value});
      out.offsets_.push_back(out.entries_.size());
    }
  return out;
}

CMatrix SparseBasis::dense(std::size_t k) const {
  CMatrix m(dim_, dim_);
  for (const auto& e : element(k)) m(e.row, e.col) += e.value;
  return m;
}

std::vector<CMatrix> SparseBasis::dense_all() const {
  std::vector<CMatrix> out;
  out.reserve(size());
  for (std::size_t k = 0; k < size(); ++k) out.push_back(dense(k));
  return out;
}

cplx sparse_hs_inner(std::span<const SparseEntry> a, const CMatrix& m) {
  cplx s{0.0, 0.0};
  for (const auto& e : a) s += std::conj(e.value) * m(e.row, e.col);
  return s;
}

}  // namespace zekit
