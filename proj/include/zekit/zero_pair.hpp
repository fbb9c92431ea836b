#pragma once

// Structured solver for the bilinear system
//
//   <z_right| U_k (x) V_l |z_left> = 0,   k, l = 1, 2,
//
// with U_1 = diag(1, g1), V_1 = diag(1, g2), U_2 = V_2 = [[0,1],[1,0]] on
// C^2 (x) C^2 (V_l replaced by V_l^* when conj2). The system reads
// W z_left = 0 and S^{-1} W S = diag(p_1..p_4), so the left solutions are
// spanned by the columns q_k of S with p_k = 0.

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "zekit/angle.hpp"
#include "zekit/matcore.hpp"

namespace zekit {

/// diag(1, exp(i theta)).
CMatrix phase_unitary(const Angle& theta);
/// [[0,1],[1,0]].
CMatrix swap_unitary();

/// The four values <z_right| U_k (x) V_l^(*) |z_left>, ordered
/// (1,1), (1,2), (2,1), (2,2); evaluated with explicit Kronecker products.
std::array<cplx, 4> zero_pair_conditions(const Angle& theta1, const Angle& theta2, const CVector& z_left,
                                         const CVector& z_right, bool conj2);

/// One of the five solution shapes. Left and right vectors are linear in the
/// named parameters; which names are used depends on the form:
///   1) left [m1,s](x)[a,b]                right [m1*,-s](x)[c,d]
///   2) left [a,b](x)[m2,s]                right [c,d](x)[m2*,-s]
///   3) left a[m1,1](x)[m2,s] + b[m1,-1](x)[m2,-s]
///      right c[m1*,1](x)[m2*,-s] + d[m1*,-1](x)[m2*,s]
///   4) left h[m1,s](x)[m2,t]              right [m1*,-s](x)[a,b] + [c,d](x)[m2*,-t]
///   5) left [m1,-s](x)[a,b] + [c,d](x)[m2,-t]   right h[m1*,s](x)[m2*,t]
/// where m1 = mu1 and m2 = mu2 (conj(mu2) when conj2).
struct ZeroPairSolution {
  int form_id = 0;
  int s = 1;
  int t = 1;
  cplx mu1{1.0, 0.0};
  cplx mu2{1.0, 0.0};
  bool conj2 = false;
  std::map<std::string, cplx> params;
  /// Distance between the supplied right vector and its fit by the form.
  double right_fit_residual = 0.0;

  CVector left() const;
  CVector right() const;
};

struct ZeroPairResult {
  std::array<cplx, 4> p{};
  CMatrix W;
  CMatrix S;
  /// Indices k (0-based) with p_k = 0.
  std::vector<std::size_t> vanishing;
  /// Orthonormal basis of the left solution space: columns q_k / 2, p_k = 0.
  CMatrix nullspace;
  std::vector<ZeroPairSolution> solutions;
};

/// W built from <z_right| = [a, b, c, d] (conjugated entries of z_right).
CMatrix zero_pair_W(const Angle& theta1, const Angle& theta2, const CVector& z_right, bool conj2);
/// Columns q_k = [mu1, +-1] (x) [m2, +-1] with sign patterns (+,+), (+,-), (-,+), (-,-).
CMatrix zero_pair_S(const Angle& theta1, const Angle& theta2, bool conj2);
/// p_k = a + s2 m2 b + s1 mu1 c + s1 s2 mu1 m2 d with (s1, s2) the signs of q_k.
std::array<cplx, 4> zero_pair_p(const Angle& theta1, const Angle& theta2, const CVector& z_right, bool conj2);

/// p_k counts as zero when |p_k| <= tol * |z_right|. A zero z_right yields the
/// whole space and no classified solution. Throws DimensionMismatch unless
/// z_right lies in C^4.
ZeroPairResult solve_zero_pair(const Angle& theta1, const Angle& theta2, const CVector& z_right, bool conj2,
                               double tol = 1e-10);

}  // namespace zekit
