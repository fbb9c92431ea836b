#pragma once

// POVMs whose effects span an operator system, and the indistinguishable
// subspace test: a subspace is indistinguishable for an observable exactly
// when it is a code for the span of the effects.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "zekit/klcodes.hpp"
#include "zekit/matcore.hpp"
#include "zekit/opsys.hpp"
#include "zekit/parallel.hpp"

namespace zekit {

struct ObservableCheck {
  double min_eigenvalue = 0.0;
  double sum_residual = 0.0;  // max |sum M_k - I|
  std::size_t span_rank = 0;
  bool ok(double tol = 1e-10) const { return min_eigenvalue >= -tol && sum_residual <= tol; }
};

struct Observable {
  std::size_t ambient_dim = 0;
  std::vector<CMatrix> effects;

  ObservableCheck check() const;
  /// Effects as a sparse operator list, for code checks.
  SparseBasis effect_list() const;
};

/// m PSD effects summing to I and spanning L (m = dim L). With the Hermitian
/// orthonormal basis A_1 = I/sqrt(n), A_2..A_m of L, each A_k (k >= 2) is
/// rescaled to operator norm `scale`, M_k = (I + A_k) / (2(m-1)) and
/// M_1 = I - sum_{k>=2} M_k. The scale is halved on failure.
/// Throws InvalidInput for unvalidated systems and ConstructionFailed after
/// 20 halvings.
Observable positive_basis(const OperatorSystem& system, double scale = 0.5);

/// All Kronecker products of one effect from each factor, first factor slowest.
Observable tensor_observables(std::span<const Observable> factors);

struct IndistinguishabilityVerdict {
  KLReport kl;
  /// Largest total-variation distance between the outcome distribution of a
  /// sampled code state and that of the first code vector.
  double tv_spread = 0.0;
  std::size_t samples = 0;
  bool pass = false;
};

/// Passes iff every effect satisfies the Knill-Laflamme conditions on the
/// code within tol. The spread statistic samples `samples` Haar-random states
/// of the code space from CounterRng(seed, 0). Throws DimensionMismatch.
IndistinguishabilityVerdict indistinguishable_check(const Observable& obs, const CodeCandidate& code,
                                                    double tol = kDefaultPassTol, std::size_t samples = 1000,
                                                    std::uint64_t seed = 7, Exec exec = Exec::parallel);

}  // namespace zekit
