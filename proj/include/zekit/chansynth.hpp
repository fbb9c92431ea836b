#pragma once

// Channels in Kraus form, their noncommutative graphs, and synthesis of a
// channel whose graph is a prescribed operator system.

#include <cstddef>
#include <span>
#include <vector>

#include "zekit/matcore.hpp"
#include "zekit/opsys.hpp"

namespace zekit {

struct Channel {
  std::vector<CMatrix> kraus;  // each d_B x d_A
  std::size_t d_A = 0;
  std::size_t d_B = 0;

  static Channel identity(std::size_t n);

  /// max |sum_k V_k* V_k - I| entrywise.
  double tp_residual() const;
  /// Number of linearly independent Kraus operators.
  std::size_t choi_rank() const;
  /// Throws InvalidInput when shapes disagree or trace preservation fails
  /// beyond 1e-9.
  void check() const;
};

/// Operator system spanned by all V_k* V_l.
OperatorSystem graph_of(const Channel& channel);

inline constexpr double kDefaultEta = 1.0 / 8.0;
inline constexpr double kDefaultEps = 1.0 / 16.0;

/// Builds a channel with graph equal to span(L) and d_E = ceil(sqrt(dim L))
/// Kraus operators.
///
/// A d_E x d_E block matrix G = [B_ij] is assembled from the Hermitian
/// orthonormal basis A_1 = I/sqrt(n), A_2, ... of L: the diagonal blocks are
/// I/d_E + eta * H_i with H_i = A_2, A_3, ... and the last one closing the sum
/// to zero; the remaining basis members fill the upper off-diagonal blocks in
/// lexicographic order, two per block as eps * (A_k + i A_{k+1}), with
/// B_ji = B_ij*. Factoring G = W* W (eigendecomposition, d_B = rank G) and
/// slicing W into column blocks gives V_i* V_j = B_ij.
///
/// eta and eps are halved (up to 20 times) whenever positivity, trace
/// preservation or the span contract fails; SynthesisFailed afterwards.
Channel synthesize(const OperatorSystem& system, double eta = kDefaultEta, double eps = kDefaultEps);

/// Kraus list of the product channel, lexicographic in the factors.
Channel tensor_channels(std::span<const Channel> channels);

}  // namespace zekit
