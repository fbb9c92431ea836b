#pragma once

// Operator systems (noncommutative graphs): subspaces of M_n given by a
// spanning list. A subspace arises as the graph of some channel exactly when
// it is *-closed and contains the identity.

#include <cstddef>
#include <span>
#include <vector>

#include "zekit/angle.hpp"
#include "zekit/matcore.hpp"
#include "zekit/sparse_basis.hpp"

namespace zekit {

struct ValidationVerdict {
  bool contains_identity = false;
  double identity_residual = 0.0;
  bool star_closed = false;
  /// Largest membership residual of an adjoint basis element.
  double adjoint_residual = 0.0;
  std::size_t dim = 0;
  /// True when the verdict was inherited from validated tensor factors
  /// instead of being recomputed on the product.
  bool structural = false;

  bool valid() const { return contains_identity && star_closed; }
};

class OperatorSystem {
 public:
  OperatorSystem() = default;

  /// Builds the system spanned by `basis` (all n x n) and computes its
  /// validation verdict. Throws DimensionMismatch on ragged input and
  /// InvalidInput on an empty list.
  static OperatorSystem from_basis(std::span<const CMatrix> basis);

  std::size_t ambient_dim() const { return ambient_dim_; }
  /// Dimension of the span.
  std::size_t dim() const { return span_onb_.size(); }
  const ValidationVerdict& verdict() const { return verdict_; }
  bool validated() const { return verdict_.valid(); }
  /// Number of primitive tensor factors (1 unless built by tensor_systems).
  std::size_t factor_count() const { return factor_count_; }

  /// The spanning list the system was built from.
  const SparseBasis& spanning_list() const { return spanning_; }
  std::vector<CMatrix> basis() const { return spanning_.dense_all(); }

  /// Hermitian, Hilbert-Schmidt orthonormal basis of span(L + L*). The first
  /// element is I / sqrt(n) whenever I lies in the span. For *-closed systems
  /// this spans L itself; Knill-Laflamme conditions on L and on L + L* agree,
  /// so the list is valid for code checks in either case.
  const SparseBasis& ortho_basis() const { return hermitian_; }
  std::vector<CMatrix> ortho_basis_dense() const { return hermitian_.dense_all(); }

  /// Complex orthonormal basis of span(L).
  const SparseBasis& span_onb() const { return span_onb_; }

  friend OperatorSystem tensor_systems(const OperatorSystem& a, const OperatorSystem& b);

 private:
  std::size_t ambient_dim_ = 0;
  std::size_t factor_count_ = 1;
  SparseBasis spanning_;
  SparseBasis span_onb_;
  SparseBasis hermitian_;
  ValidationVerdict verdict_;
};

/// The 8-dimensional system N_theta in M_4:
///
///   [ a   b    e         f ]
///   [ c   d    f   conj(y) e ]
///   [ g   h    a         b ]
///   [ h   y g  c         d ]      y = exp(i theta)
///
/// Basis order is (a, b, c, d, e, f, g, h): member k sets coordinate k to 1.
OperatorSystem make_N_theta(const Angle& theta);

/// Canonical basis member of N_theta for one coordinate letter in "abcdefgh".
CMatrix n_theta_member(const Angle& theta, char coordinate);

/// Matrix of N_theta with the given coordinates (a, b, c, d, e, f, g, h).
CMatrix n_theta_matrix(const Angle& theta, std::span<const cplx, 8> coords);

ValidationVerdict validate_system(const OperatorSystem& system);

/// Both operands must be valid (InvalidInput otherwise). Basis element
/// (i * b.size() + j) is kron(a_i, b_j).
OperatorSystem tensor_systems(const OperatorSystem& a, const OperatorSystem& b);
OperatorSystem tensor_systems(std::span<const OperatorSystem> systems);

/// Hilbert-Schmidt distance from `a` to span(L). Throws DimensionMismatch.
double membership(const OperatorSystem& system, const CMatrix& a);

/// Largest membership residual of any spanning element of `a` in `b`, and
/// vice versa; 0 (to rounding) iff the spans coincide.
double span_distance(const OperatorSystem& a, const OperatorSystem& b);

}  // namespace zekit
