#include "zekit/matcore.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "zekit/errors.hpp"

namespace zekit {

namespace {

using EMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

EMatrix to_eigen(const CMatrix& m) {
  EMatrix e(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  return e;
}

template <typename Derived>
CMatrix from_eigen(const Eigen::MatrixBase<Derived>& e) {
  CMatrix m(static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()));
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = e(i, j);
  return m;
}

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch(std::string(what) + ": shape mismatch");
}

}  // namespace

// ---------------------------------------------------------------------------
// CVector

CVector CVector::basis(std::size_t dim, std::size_t index) {
  CVector v(dim);
  v[index] = 1.0;
  return v;
}

double CVector::norm_squared() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return s;
}

double CVector::norm() const { return std::sqrt(norm_squared()); }

CVector CVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw InvalidInput("cannot normalize the zero vector");
  CVector out(*this);
  out *= 1.0 / n;
  return out;
}

CVector CVector::conj() const {
  CVector out(*this);
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

CVector& CVector::operator+=(const CVector& other) {
  if (other.dim() != dim()) throw DimensionMismatch("CVector +=: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CVector& CVector::operator-=(const CVector& other) {
  if (other.dim() != dim()) throw DimensionMismatch("CVector -=: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CVector& CVector::operator*=(cplx s) {
  for (auto& z : data_) z *= s;
  return *this;
}

CVector operator+(CVector a, const CVector& b) { return a += b; }
CVector operator-(CVector a, const CVector& b) { return a -= b; }
CVector operator*(cplx s, CVector v) { return v *= s; }

cplx inner(const CVector& a, const CVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("inner: dimension mismatch");
  cplx s{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

// ---------------------------------------------------------------------------
// CMatrix

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw DimensionMismatch("CMatrix: entry count != rows * cols");
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("CMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  CMatrix m(n, n);
  m(i, j) = 1.0;
  return m;
}

CMatrix CMatrix::diag(std::span<const cplx> d) {
  CMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CMatrix CMatrix::outer(const CVector& a, const CVector& b) {
  CMatrix m(a.dim(), b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) m(i, j) = a[i] * std::conj(b[j]);
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

CMatrix CMatrix::transpose() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

cplx CMatrix::trace() const {
  cplx t{0.0, 0.0};
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double CMatrix::max_abs_diff(const CMatrix& other) const {
  require_same_shape(*this, other, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < data_.size(); ++k) m = std::max(m, std::abs(data_[k] - other.data_[k]));
  return m;
}

double CMatrix::hermiticity_defect() const {
  if (!square()) throw DimensionMismatch("hermiticity_defect: matrix is not square");
  double m = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return m;
}

CMatrix CMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block: out of range");
  CMatrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

void CMatrix::set_block(std::size_t r0, std::size_t c0, const CMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw DimensionMismatch("set_block: out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  require_same_shape(*this, other, "CMatrix +=");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  require_same_shape(*this, other, "CMatrix -=");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (auto& z : data_) z *= s;
  return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator*(cplx s, CMatrix m) { return m *= s; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimension mismatch");
  CMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

CVector operator*(const CMatrix& a, const CVector& v) {
  if (a.cols() != v.dim()) throw DimensionMismatch("matrix-vector product: dimension mismatch");
  CVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx s{0.0, 0.0};
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

cplx hs_inner(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "hs_inner");
  cplx s{0.0, 0.0};
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) s += std::conj(ea[k]) * eb[k];
  return s;
}

cplx sandwich(const CVector& x, const CMatrix& a, const CVector& y) { return inner(x, a * y); }

// ---------------------------------------------------------------------------
// Kronecker products

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

CVector kron(const CVector& a, const CVector& b) {
  CVector out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < b.dim(); ++k) out[i * b.dim() + k] = a[i] * b[k];
  return out;
}

CMatrix kron_all(std::span<const CMatrix> factors) {
  if (factors.empty()) return CMatrix::identity(1);
  CMatrix out = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, factors[i]);
  return out;
}

CVector kron_all(std::span<const CVector> factors) {
  if (factors.empty()) return CVector{cplx{1.0, 0.0}};
  CVector out = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, factors[i]);
  return out;
}

CMatrix stack_vectorized(std::span<const CMatrix> mats) {
  if (mats.empty()) return CMatrix();
  const std::size_t len = mats[0].rows() * mats[0].cols();
  CMatrix out(mats.size(), len);
  for (std::size_t r = 0; r < mats.size(); ++r) {
    if (mats[r].rows() * mats[r].cols() != len) throw DimensionMismatch("stack_vectorized: shape mismatch");
    const auto e = mats[r].entries();
    for (std::size_t k = 0; k < len; ++k) out(r, k) = e[k];
  }
  return out;
}

CMatrix stack_vectors(std::span<const CVector> vecs) {
  if (vecs.empty()) return CMatrix();
  CMatrix out(vecs.size(), vecs[0].dim());
  for (std::size_t r = 0; r < vecs.size(); ++r) {
    if (vecs[r].dim() != vecs[0].dim()) throw DimensionMismatch("stack_vectors: dimension mismatch");
    for (std::size_t k = 0; k < vecs[r].dim(); ++k) out(r, k) = vecs[r][k];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Decompositions

std::vector<double> singular_values(const CMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  Eigen::BDCSVD<EMatrix> svd(to_eigen(m));
  const auto& s = svd.singularValues();
  return std::vector<double>(s.data(), s.data() + s.size());
}

std::size_t svd_rank(const CMatrix& m, double tol) {
  if (tol < 0.0) throw InvalidInput("svd_rank: negative tolerance");
  const auto s = singular_values(m);
  if (s.empty() || s.front() == 0.0) return 0;
  const double cut = tol * s.front();
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [&](double v) { return v > cut; }));
}

CMatrix nullspace(const CMatrix& m, double tol) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) return CMatrix::identity(n);
  Eigen::JacobiSVD<EMatrix> svd(to_eigen(m), Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double scale = s.size() > 0 ? std::max(s(0), 1.0) : 1.0;
  std::size_t r = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s(k) > tol * scale) ++r;
  const auto& v = svd.matrixV();
  CMatrix out(n, n - r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = r; j < n; ++j)
      out(i, j - r) = v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return out;
}

HermitianEigen herm_eig(const CMatrix& m) {
  if (!m.square()) throw DimensionMismatch("herm_eig: matrix is not square");
  const double defect = m.hermiticity_defect();
  if (defect > 1e-12)
    throw NotHermitian("herm_eig: |M - M*| = " + std::to_string(defect) + " exceeds 1e-12");
  EMatrix e = to_eigen(m);
  e = (0.5 * (e + e.adjoint())).eval();
  Eigen::SelfAdjointEigenSolver<EMatrix> solver(e);
  HermitianEigen out;
  const auto& ev = solver.eigenvalues();
  out.values.assign(ev.data(), ev.data() + ev.size());
  out.vectors = from_eigen(solver.eigenvectors());
  return out;
}

double herm_eig_min(const CMatrix& m) {
  if (m.rows() == 0) throw InvalidInput("herm_eig_min: empty matrix");
  return herm_eig(m).values.front();
}

double herm_op_norm(const CMatrix& m) {
  const auto eig = herm_eig(m);
  return std::max(std::abs(eig.values.front()), std::abs(eig.values.back()));
}

double max_principal_angle(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("max_principal_angle: ambient mismatch");
  if (a.cols() != b.cols()) return std::numbers::pi / 2;
  if (a.cols() == 0) return 0.0;
  // Singular values of A* B are cosines of the principal angles.
  const auto s = singular_values(a.adjoint() * b);
  const double smallest = std::clamp(s.back(), 0.0, 1.0);
  // Residual-based sine is accurate for tiny angles where acos is not.
  CMatrix proj = b - a * (a.adjoint() * b);
  const auto r = singular_values(proj);
  const double sine = r.empty() ? 0.0 : std::min(r.front(), 1.0);
  return smallest > 0.7 ? std::asin(sine) : std::acos(smallest);
}

CMatrix orthonormal_columns(const CMatrix& m, double tol) {
  std::vector<CVector> kept;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    CVector v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
    const double original = v.norm();
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : kept) v -= inner(q, v) * q;
    const double n = v.norm();
    if (n <= tol * std::max(1.0, original)) continue;
    v *= 1.0 / n;
    kept.push_back(std::move(v));
  }
  CMatrix out(m.rows(), kept.size());
  for (std::size_t j = 0; j < kept.size(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = kept[j][i];
  return out;
}

CVector least_squares(const CMatrix& a, const CVector& b) {
  if (a.rows() != b.dim()) throw DimensionMismatch("least_squares: right-hand side has wrong length");
  Eigen::VectorXcd rhs(static_cast<Eigen::Index>(b.dim()));
  for (std::size_t i = 0; i < b.dim(); ++i) rhs(static_cast<Eigen::Index>(i)) = b[i];
  const Eigen::VectorXcd x = to_eigen(a).completeOrthogonalDecomposition().solve(rhs);
  CVector out(a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i) out[i] = x(static_cast<Eigen::Index>(i));
  return out;
}

}  // namespace zekit
