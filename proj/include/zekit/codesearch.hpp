#pragma once

// Numerical feasibility search for zero-error codes: minimize
//
//   F(phi_1..phi_d) = sum_{k<l} sum_A |<phi_l|A|phi_k>|^2
//                   + sum_{k<l} sum_A (<phi_k|A|phi_k> - <phi_l|A|phi_l>)^2
//
// over orthonormal d-frames, A ranging over a Hermitian orthonormal basis of
// the operator system. F vanishes exactly on codes. Infeasibility is never
// declared; reports carry the floor and the per-restart statistics.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "zekit/klcodes.hpp"
#include "zekit/opsys.hpp"
#include "zekit/parallel.hpp"

namespace zekit {

/// Objective and Euclidean gradient for frames stored column-wise: entry
/// (i, k) of the frame lives at x[k * n + i]. The gradient is returned as
/// dF/dRe + i dF/dIm, i.e. twice the Wirtinger derivative dF/d(conj x).
class CodeObjective {
 public:
  CodeObjective(const OperatorSystem& system, std::size_t code_dim);

  std::size_t ambient_dim() const { return n_; }
  std::size_t code_dim() const { return d_; }

  double value(std::span<const cplx> x) const;
  double value_and_gradient(std::span<const cplx> x, std::span<cplx> grad) const;

 private:
  const SparseBasis* basis_;
  std::size_t n_;
  std::size_t d_;
};

/// F for a pair of unit vectors. Throws DimensionMismatch, or NotUnit when a
/// norm deviates from 1 by more than 1e-9.
double objective(const OperatorSystem& system, const CVector& phi, const CVector& psi);
double code_objective(const OperatorSystem& system, std::span<const CVector> vectors);

struct SearchOptions {
  std::size_t code_dim = 2;
  std::size_t restarts = 64;
  std::uint64_t seed = 42;
  double tol = 1e-18;
  std::size_t max_iters = 5000;
  /// Stop when F decreased by less than stall_rel (relative) over this many iterates.
  std::size_t stall_window = 50;
  double stall_rel = 1e-14;
  /// Run restarts in fixed chunks and stop after the first chunk whose best
  /// objective is below tol. Chunk boundaries do not depend on the thread
  /// count, so the outcome stays deterministic.
  bool stop_at_tol = false;
  std::size_t chunk = 16;
  Exec exec = Exec::parallel;
};

struct RestartOutcome {
  double objective = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

struct FeasibilityReport {
  double objective_min = 0.0;
  CodeCandidate certificate;
  /// Restarts actually run (fewer than requested only with stop_at_tol).
  std::size_t restarts = 0;
  std::size_t restarts_requested = 0;
  std::size_t iterations_total = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  bool converged_at_tol = false;
  std::size_t best_restart = 0;
  std::vector<RestartOutcome> per_restart;
};

/// Multi-start Riemannian gradient descent on the complex Stiefel manifold.
/// Restart r draws its start from CounterRng(seed, r); the merge keeps the
/// smallest objective, ties going to the lowest restart index, so the result
/// is identical for Exec::serial and Exec::parallel.
FeasibilityReport search_code(const OperatorSystem& system, const SearchOptions& options);

FeasibilityReport search_pair(const OperatorSystem& system, std::size_t restarts, std::uint64_t seed,
                              double tol = 1e-18, Exec exec = Exec::parallel);

/// Single local descent from an explicit start frame (columns are
/// re-orthonormalized first). Exposed for tests and benchmarks.
RestartOutcome descend(const CodeObjective& f, std::vector<cplx>& frame, const SearchOptions& options);

}  // namespace zekit
