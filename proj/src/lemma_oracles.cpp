#include "zekit/lemma_oracles.hpp"

#include <algorithm>
#include <vector>

#include "zekit/errors.hpp"

namespace zekit {

namespace {

double max_norm(std::span<const CVector> vs) {
  double m = 0.0;
  for (const auto& v : vs) m = std::max(m, v.norm());
  return m;
}

CMatrix projector(const CVector& v) { return CMatrix::outer(v, v); }

CVector slice(const CVector& v, std::size_t from, std::size_t len) {
  CVector out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = v[from + i];
  return out;
}

CMatrix gram(std::span<const CVector> u, std::span<const CVector> v) {
  CMatrix g(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) g(i, j) = inner(u[i], v[j]);
  return g;
}

void require_dim(std::span<const CVector> vs, std::size_t dim, const char* what) {
  for (const auto& v : vs)
    if (v.dim() != dim) throw DimensionMismatch(std::string(what) + ": expected vectors in C^" + std::to_string(dim));
}

}  // namespace

bool all_parallel(std::span<const CVector> vectors, double tol) {
  if (vectors.empty()) return true;
  return svd_rank(stack_vectors(vectors), tol) <= 1;
}

Al1Verdict al1_branch(const CVector& a, const CVector& b, const CVector& c, const CVector& x, const CVector& y,
                      const CVector& z, double tol) {
  if (a.dim() != b.dim() || a.dim() != c.dim() || x.dim() != y.dim() || x.dim() != z.dim())
    throw DimensionMismatch("al1: inconsistent dimensions");
  const CMatrix sum = CMatrix::outer(a, x) + CMatrix::outer(b, y) + CMatrix::outer(c, z);
  const CVector left[] = {a, b, c};
  const CVector right[] = {x, y, z};
  const double scale = std::max(1.0, max_norm(left) * max_norm(right));
  if (sum.frobenius_norm() > tol * scale) throw HypothesisNotMet("al1: |a><x| + |b><y| + |c><z| is not zero");
  if (all_parallel(left, tol)) return Al1Verdict::left_parallel;
  if (all_parallel(right, tol)) return Al1Verdict::right_parallel;
  return Al1Verdict::counterexample;
}

int al2_case(std::span<const CVector, 4> x, std::span<const CVector, 4> y, double tol) {
  require_dim(x, 2, "al2");
  require_dim(y, 2, "al2");
  std::array<CMatrix, 4> xx, yy, t;
  for (std::size_t i = 0; i < 4; ++i) {
    xx[i] = projector(x[i]);
    yy[i] = projector(y[i]);
    t[i] = kron(xx[i], yy[i]);
  }
  double scale = 1.0;
  for (const auto& m : t) scale = std::max(scale, m.frobenius_norm());
  if ((t[0] + t[1] - t[2] - t[3]).frobenius_norm() > tol * scale)
    throw HypothesisNotMet("al2: X1(x)Y1 + X2(x)Y2 differs from X3(x)Y3 + X4(x)Y4");

  const auto close = [&](const CMatrix& p, const CMatrix& q) { return (p - q).frobenius_norm() <= tol * scale; };
  if (all_parallel(x, tol)) {
    CMatrix lhs = x[0].norm_squared() * yy[0] + x[1].norm_squared() * yy[1];
    CMatrix rhs = x[2].norm_squared() * yy[2] + x[3].norm_squared() * yy[3];
    if (close(lhs, rhs)) return 1;
  }
  if (all_parallel(y, tol)) {
    CMatrix lhs = y[0].norm_squared() * xx[0] + y[1].norm_squared() * xx[1];
    CMatrix rhs = y[2].norm_squared() * xx[2] + y[3].norm_squared() * xx[3];
    if (close(lhs, rhs)) return 2;
  }
  if (close(t[0], t[3]) && close(t[1], t[2])) return 3;
  if (close(t[0], t[2]) && close(t[1], t[3])) return 4;
  return 0;
}

Al3Verdict al3_factor(const Angle& theta, const CVector& a, const CVector& c, const CVector& d, const CVector& x,
                      const CVector& y, double tol) {
  if (a.dim() != 4 || c.dim() != 4 || d.dim() != 4 || x.dim() != 2 || y.dim() != 2)
    throw DimensionMismatch("al3: a, c, d must lie in C^4 and x, y in C^2");
  if (x.norm() <= tol || y.norm() <= tol) throw HypothesisNotMet("al3: x and y must be nonzero");
  CMatrix u(2, 2);
  u(0, 0) = 1.0;
  u(1, 1) = theta.gamma();
  const CVector xy = kron(x, y);
  const double scale = std::max(1.0, std::max(a.norm() * xy.norm(), c.norm() * d.norm()));
  // Linear in A, so the four matrix units suffice.
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const CMatrix op = kron(u, CMatrix::unit(2, i, j));
      if (std::abs(sandwich(a, op, xy) - sandwich(c, op, d)) > tol * scale)
        throw HypothesisNotMet("al3: <a|U(x)A|x(x)y> differs from <c|U(x)A|d>");
    }
  const CVector dparts[] = {slice(d, 0, 2), slice(d, 2, 2), y};
  if (all_parallel(dparts, tol)) return Al3Verdict::d_product;
  const CVector cparts[] = {slice(c, 0, 2), slice(c, 2, 2)};
  if (all_parallel(cparts, tol)) return Al3Verdict::c_product;
  return Al3Verdict::counterexample;
}

ParallelRankVerdict parallel_rank_check(std::span<const CVector, 4> x, std::span<const CVector, 4> y, double tol) {
  require_dim(x, 4, "parallel_rank_check");
  require_dim(y, 4, "parallel_rank_check");
  CMatrix cross(4, 4), yy(4, 4), xx(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    cross += CMatrix::outer(y[i], x[i]);
    yy += CMatrix::outer(y[i], y[i]);
    xx += CMatrix::outer(x[i], x[i]);
  }
  const double scale = std::max(1.0, xx.frobenius_norm() + yy.frobenius_norm());
  if (cross.frobenius_norm() > tol * scale) throw HypothesisNotMet("parallel_rank_check: sum |y_i><x_i| is not zero");
  if ((yy - xx).frobenius_norm() > tol * scale)
    throw HypothesisNotMet("parallel_rank_check: sum |y_i><y_i| differs from sum |x_i><x_i|");

  ParallelRankVerdict v;
  const CMatrix gx = gram(x, x), gy = gram(y, y), gz = gram(x, y);
  v.xy_residual = (gx * gy).frobenius_norm();
  v.x2_residual = (gx * gx - gz * gz.adjoint()).frobenius_norm();
  v.y2_residual = (gy * gy - gz.adjoint() * gz).frobenius_norm();
  v.rank_x = svd_rank(gx, tol);
  v.rank_y = svd_rank(gy, tol);
  std::vector<CVector> all(x.begin(), x.end());
  all.insert(all.end(), y.begin(), y.end());
  v.span_dim = svd_rank(stack_vectors(all), tol);
  const double vec_scale = std::max(1.0, max_norm(all));
  for (std::size_t i = 0; i < 4; ++i)
    if (x[i].norm() <= tol * vec_scale && y[i].norm() <= tol * vec_scale) v.collinear_case = true;

  const double gram_scale = scale * scale;
  const bool identities = v.xy_residual <= tol * gram_scale && v.x2_residual <= tol * gram_scale &&
                          v.y2_residual <= tol * gram_scale;
  const std::size_t bound = v.collinear_case ? 1 : 2;
  v.holds = identities && v.rank_x == v.rank_y && v.rank_x <= bound && v.span_dim <= bound;
  return v;
}

}  // namespace zekit
