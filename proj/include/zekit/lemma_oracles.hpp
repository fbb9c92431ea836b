#pragma once

// Numerical predicates for the auxiliary rank/parallelism lemmas used in the
// infeasibility argument for pairs. Each oracle first checks the lemma's
// hypothesis (HypothesisNotMet otherwise) and then reports which branch of
// the conclusion the instance realizes; a `counterexample` verdict means the
// conclusion failed on a valid instance.

#include <array>
#include <cstddef>
#include <span>

#include "zekit/angle.hpp"
#include "zekit/matcore.hpp"

namespace zekit {

inline constexpr double kOracleTol = 1e-9;

/// True when all nonzero vectors in the list are pairwise parallel
/// (the stacked matrix has rank <= 1 at relative tolerance tol).
bool all_parallel(std::span<const CVector> vectors, double tol = kOracleTol);

enum class Al1Verdict { left_parallel, right_parallel, counterexample };

/// Hypothesis: |a><x| + |b><y| + |c><z| = 0.
/// Conclusion: a || b || c, or x || y || z.
Al1Verdict al1_branch(const CVector& a, const CVector& b, const CVector& c, const CVector& x, const CVector& y,
                      const CVector& z, double tol = kOracleTol);

/// Hypothesis: X1 (x) Y1 + X2 (x) Y2 = X3 (x) Y3 + X4 (x) Y4 with X_i = |x_i><x_i|,
/// Y_i = |y_i><y_i| on C^2. Returns the first case (1..4) that holds:
///   1) all x_i parallel and sum |x_i|^2 Y_i balances;
///   2) all y_i parallel and sum |y_i|^2 X_i balances;
///   3) X1(x)Y1 = X4(x)Y4 and X2(x)Y2 = X3(x)Y3;
///   4) X1(x)Y1 = X3(x)Y3 and X2(x)Y2 = X4(x)Y4;
/// or 0 when none does.
int al2_case(std::span<const CVector, 4> x, std::span<const CVector, 4> y, double tol = kOracleTol);

enum class Al3Verdict { d_product, c_product, counterexample };

/// Hypothesis: <a| U (x) A |x (x) y> = <c| U (x) A |d> for every A in M_2, with
/// U = diag(1, exp(i theta)) and nonzero x, y in C^2; a, c, d in C^4.
/// Conclusion: d = z (x) y for some z, or c = p (x) q.
Al3Verdict al3_factor(const Angle& theta, const CVector& a, const CVector& c, const CVector& d, const CVector& x,
                      const CVector& y, double tol = kOracleTol);

struct ParallelRankVerdict {
  double xy_residual = 0.0;  // |XY|
  double x2_residual = 0.0;  // |X^2 - Z Z*|
  double y2_residual = 0.0;  // |Y^2 - Z* Z|
  std::size_t rank_x = 0;
  std::size_t rank_y = 0;
  std::size_t span_dim = 0;  // dimension of span{x_i, y_i}
  /// Some index has x_i = y_i = 0, so the stronger rank-1 bound applies.
  bool collinear_case = false;
  bool holds = false;
};

/// Hypothesis: sum_i |y_i><x_i| = 0 and sum_i |y_i><y_i| = sum_i |x_i><x_i|
/// for four vectors in C^4. Conclusion: with the Gram matrices
/// X = [<x_i|x_j>], Y = [<y_i|y_j>], Z = [<x_i|y_j>]: XY = 0, X^2 = ZZ*,
/// Y^2 = Z*Z, rank X = rank Y <= 2 and all vectors lie in a 2-D subspace
/// (collinear when some pair x_i = y_i = 0).
ParallelRankVerdict parallel_rank_check(std::span<const CVector, 4> x, std::span<const CVector, 4> y,
                                        double tol = kOracleTol);

}  // namespace zekit
