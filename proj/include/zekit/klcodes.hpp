#pragma once

// Knill-Laflamme verification of zero-error codes and the explicit code
// families for tensor products of N_theta.

#include <cstddef>
#include <span>
#include <vector>

#include "zekit/angle.hpp"
#include "zekit/matcore.hpp"
#include "zekit/opsys.hpp"
#include "zekit/parallel.hpp"

namespace zekit {

/// Orthonormal vectors {phi_k} spanning a candidate code.
class CodeCandidate {
 public:
  CodeCandidate() = default;
  /// Throws InvalidInput unless every vector has unit norm and the vectors are
  /// pairwise orthogonal (both within 1e-12).
  explicit CodeCandidate(std::vector<CVector> vectors);
  /// Gram-Schmidt on `vectors` first; throws InvalidInput if they are
  /// linearly dependent.
  static CodeCandidate orthonormalized(std::vector<CVector> vectors);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t size() const { return vectors_.size(); }
  const std::vector<CVector>& vectors() const { return vectors_; }
  const CVector& operator[](std::size_t k) const { return vectors_[k]; }

  /// Orthogonal projector onto the span.
  CMatrix projector() const;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<CVector> vectors_;
};

inline constexpr double kDefaultPassTol = 1e-9;

struct KLReport {
  double max_offdiag = 0.0;
  double max_diag_spread = 0.0;
  double tol = kDefaultPassTol;
  bool pass = false;
};

/// Checks <phi_l|A|phi_k> = 0 (k != l) and equal diagonals for every A in the
/// Hermitian orthonormal basis of L. Throws DimensionMismatch.
KLReport verify_code(const OperatorSystem& system, const CodeCandidate& code, double tol = kDefaultPassTol,
                     Exec exec = Exec::parallel);

/// Same check against an explicit list of Hermitian operators (e.g. POVM
/// effects); conditions are linear, so any spanning list works.
KLReport verify_code_against(const SparseBasis& operators, const CodeCandidate& code, double tol = kDefaultPassTol,
                             Exec exec = Exec::parallel);

/// The code of N_pi: [1, i, 0, 0]/sqrt2 and [0, 0, 1, i]/sqrt2.
CodeCandidate theorem_A_code();

/// phi = (|1..1> + i|2..2>)/sqrt2, psi = (|3..3> + i|4..4>)/sqrt2 in (C^4)^{(x)n}.
CodeCandidate theorem_B_code(std::size_t n);

/// Flat index of |j j ... j> (0-based j) in (C^4)^{(x)n}.
std::size_t repeated_index(std::size_t j, std::size_t n);

/// (1/2) g_1...g_n (1 + gamma_1...gamma_n): the closed form of
/// <psi|M_1 (x) ... (x) M_n|phi> for the theorem_B_code pair.
cplx pairing_value(std::span<const Angle> thetas, std::span<const cplx> g_coeffs);

/// Distance from 0 to the convex hull of {1, g2, g1, g1 g2} (g2 conjugated
/// when conj2), i.e. min over unit y of |<y|U_1 (x) V_1^(*)|y>| for the
/// diagonal phase operators diag(1, g1) and diag(1, g2).
double hull_distance(const Angle& theta1, const Angle& theta2, bool conj2);

/// Distance from the origin to the convex hull of a planar point set.
double origin_hull_distance(std::span<const cplx> points);

}  // namespace zekit
