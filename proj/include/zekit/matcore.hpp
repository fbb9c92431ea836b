#pragma once

// Dense complex linear algebra used throughout zekit.
//
// Matrices are stored row-major. Vectorization (for span and rank
// computations) always stacks rows: vec(M)[i * cols + j] = M(i, j).

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace zekit {

using cplx = std::complex<double>;

inline constexpr double kDefaultTol = 1e-10;

class CVector {
 public:
  CVector() = default;
  explicit CVector(std::size_t dim) : data_(dim, cplx{0.0, 0.0}) {}
  CVector(std::initializer_list<cplx> init) : data_(init) {}
  explicit CVector(std::vector<cplx> data) : data_(std::move(data)) {}

  static CVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return data_.size(); }
  cplx& operator[](std::size_t i) { return data_[i]; }
  const cplx& operator[](std::size_t i) const { return data_[i]; }
  std::span<const cplx> entries() const { return data_; }
  std::span<cplx> entries() { return data_; }
  const std::vector<cplx>& raw() const { return data_; }

  double norm() const;
  double norm_squared() const;
  CVector normalized() const;
  CVector conj() const;

  CVector& operator+=(const CVector& other);
  CVector& operator-=(const CVector& other);
  CVector& operator*=(cplx s);

  friend bool operator==(const CVector&, const CVector&) = default;

 private:
  std::vector<cplx> data_;
};

CVector operator+(CVector a, const CVector& b);
CVector operator-(CVector a, const CVector& b);
CVector operator*(cplx s, CVector v);

/// <a|b> = sum_i conj(a_i) b_i
cplx inner(const CVector& a, const CVector& b);

class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {}
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data);
  /// Row-by-row literal, mostly for tests.
  CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix zeros(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }
  /// |i><j| in M_n (0-based indices).
  static CMatrix unit(std::size_t n, std::size_t i, std::size_t j);
  static CMatrix diag(std::span<const cplx> d);
  /// |a><b|
  static CMatrix outer(const CVector& a, const CVector& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const cplx> entries() const { return data_; }
  std::span<cplx> entries() { return data_; }

  CMatrix adjoint() const;
  CMatrix transpose() const;
  cplx trace() const;
  double frobenius_norm() const;
  /// Largest |M_ij - N_ij|; matrices must have equal shape.
  double max_abs_diff(const CMatrix& other) const;
  /// Largest entrywise deviation of M - M*.
  double hermiticity_defect() const;
  CMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const CMatrix& b);

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(cplx s);

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(cplx s, CMatrix m);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CVector operator*(const CMatrix& a, const CVector& v);

/// Hilbert-Schmidt inner product tr(A* B).
cplx hs_inner(const CMatrix& a, const CMatrix& b);
/// <x|A|y>
cplx sandwich(const CVector& x, const CMatrix& a, const CVector& y);

/// Kronecker product: block (i, j) of the result is a_ij * B.
CMatrix kron(const CMatrix& a, const CMatrix& b);
CVector kron(const CVector& a, const CVector& b);
CMatrix kron_all(std::span<const CMatrix> factors);
CVector kron_all(std::span<const CVector> factors);

/// Stack row-major vectorizations of `mats` as rows of a (count x rows*cols) matrix.
CMatrix stack_vectorized(std::span<const CMatrix> mats);
CMatrix stack_vectors(std::span<const CVector> vecs);

std::vector<double> singular_values(const CMatrix& m);

/// Number of singular values > tol * (largest singular value); 0 for the zero matrix.
std::size_t svd_rank(const CMatrix& m, double tol = kDefaultTol);

/// Orthonormal basis of the right nullspace, as columns of the returned matrix.
CMatrix nullspace(const CMatrix& m, double tol = 1e-10);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // column k belongs to values[k]
};

/// Throws NotHermitian when |M - M*| exceeds 1e-12 anywhere.
HermitianEigen herm_eig(const CMatrix& m);
double herm_eig_min(const CMatrix& m);
/// max |eigenvalue| of a Hermitian matrix.
double herm_op_norm(const CMatrix& m);

/// Largest principal angle (radians) between the column spans of `a` and `b`.
/// Both inputs must have orthonormal columns.
double max_principal_angle(const CMatrix& a, const CMatrix& b);

/// Modified Gram-Schmidt (two passes) on the columns of `m`; columns whose
/// residual norm falls below tol are dropped.
CMatrix orthonormal_columns(const CMatrix& m, double tol = 1e-10);

/// Minimum-norm least-squares solution of A x = b.
CVector least_squares(const CMatrix& a, const CVector& b);

}  // namespace zekit
