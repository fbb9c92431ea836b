#include "zekit/chansynth.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "zekit/errors.hpp"

namespace zekit {

namespace {

constexpr double kPsdTol = 1e-10;
constexpr double kTpTol = 1e-9;
constexpr double kGraphTol = 1e-8;
constexpr int kMaxHalvings = 20;

struct BlockMatrix {
  std::size_t blocks = 0;
  std::size_t n = 0;
  CMatrix g;
};

BlockMatrix assemble_blocks(const std::vector<CMatrix>& ortho, std::size_t n, std::size_t d_e, double eta, double eps) {
  const std::size_t m = ortho.size();
  std::size_t next = 1;  // ortho[0] is I / sqrt(n)
  auto take = [&]() -> CMatrix {
    if (next < m) return ortho[next++];
    return CMatrix(n, n);
  };

  std::vector<CMatrix> h(d_e, CMatrix(n, n));
  for (std::size_t i = 0; i + 1 < d_e; ++i) {
    h[i] = take();
    h[d_e - 1] -= h[i];
  }

  BlockMatrix out{d_e, n, CMatrix(d_e * n, d_e * n)};
  const CMatrix eye = CMatrix::identity(n);
  for (std::size_t i = 0; i < d_e; ++i)
    out.g.set_block(i * n, i * n, (1.0 / static_cast<double>(d_e)) * eye + cplx{eta} * h[i]);
  for (std::size_t i = 0; i < d_e; ++i)
    for (std::size_t j = i + 1; j < d_e; ++j) {
      const CMatrix x = take();
      const CMatrix y = take();
      const CMatrix b = cplx{eps} * (x + cplx{0.0, 1.0} * y);
      out.g.set_block(i * n, j * n, b);
      out.g.set_block(j * n, i * n, b.adjoint());
    }
  return out;
}

}  // namespace

Channel Channel::identity(std::size_t n) { return Channel{{CMatrix::identity(n)}, n, n}; }

double Channel::tp_residual() const {
  CMatrix sum(d_A, d_A);
  for (const auto& v : kraus) sum += v.adjoint() * v;
  return sum.max_abs_diff(CMatrix::identity(d_A));
}

std::size_t Channel::choi_rank() const { return svd_rank(stack_vectorized(kraus), kDefaultTol); }

void Channel::check() const {
  if (kraus.empty()) throw InvalidInput("Channel: no Kraus operators");
  for (const auto& v : kraus)
    if (v.rows() != d_B || v.cols() != d_A) throw InvalidInput("Channel: Kraus operator shape differs from d_B x d_A");
  const double tp = tp_residual();
  if (tp > kTpTol) throw InvalidInput("Channel: trace preservation residual " + std::to_string(tp) + " exceeds 1e-9");
}

OperatorSystem graph_of(const Channel& channel) {
  std::vector<CMatrix> products;
  products.reserve(channel.kraus.size() * channel.kraus.size());
  for (const auto& vk : channel.kraus) {
    const CMatrix vk_adj = vk.adjoint();
    for (const auto& vl : channel.kraus) products.push_back(vk_adj * vl);
  }
  return OperatorSystem::from_basis(products);
}

Channel synthesize(const OperatorSystem& system, double eta, double eps) {
  if (!system.validated()) throw InvalidInput("synthesize: operator system is not *-closed or lacks the identity");
  if (!(eta > 0.0 && eta <= 0.25) || !(eps > 0.0 && eps <= 0.25))
    throw InvalidInput("synthesize: eta and eps must lie in (0, 1/4]");

  const std::size_t n = system.ambient_dim();
  const std::size_t m = system.dim();
  std::size_t d_e = 1;
  while (d_e * d_e < m) ++d_e;
  const auto ortho = system.ortho_basis_dense();

  std::string violation;
  for (int attempt = 0; attempt <= kMaxHalvings; ++attempt, eta *= 0.5, eps *= 0.5) {
    const BlockMatrix bm = assemble_blocks(ortho, n, d_e, eta, eps);
    const HermitianEigen eig = herm_eig(bm.g);
    if (eig.values.front() < -kPsdTol) {
      violation = "block matrix not positive semidefinite (min eigenvalue " + std::to_string(eig.values.front()) + ")";
      continue;
    }
    const double top = eig.values.back();
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < eig.values.size(); ++k)
      if (eig.values[k] > 1e-12 * top) kept.push_back(k);

    // W = D^{1/2} U*, restricted to the retained eigenpairs; negative noise
    // above -kPsdTol has been dropped with the zero eigenvalues.
    const std::size_t rank = kept.size();
    CMatrix w(rank, d_e * n);
    for (std::size_t r = 0; r < rank; ++r) {
      const std::size_t k = kept[r];
      const double s = std::sqrt(eig.values[k]);
      for (std::size_t c = 0; c < d_e * n; ++c) w(r, c) = s * std::conj(eig.vectors(c, k));
    }

    Channel ch;
    ch.d_A = n;
    ch.d_B = rank;
    for (std::size_t i = 0; i < d_e; ++i) ch.kraus.push_back(w.block(0, i * n, rank, n));

    const double tp = ch.tp_residual();
    if (tp > kTpTol) {
      violation = "trace preservation residual " + std::to_string(tp);
      continue;
    }
    const double dist = span_distance(graph_of(ch), system);
    if (dist > kGraphTol) {
      violation = "graph differs from target span (residual " + std::to_string(dist) + ")";
      continue;
    }
    return ch;
  }
  throw SynthesisFailed("synthesize: " + violation + " after " + std::to_string(kMaxHalvings) + " halvings");
}

Channel tensor_channels(std::span<const Channel> channels) {
  if (channels.empty()) throw InvalidInput("tensor_channels: empty list");
  Channel out = channels[0];
  for (std::size_t c = 1; c < channels.size(); ++c) {
    const Channel& next = channels[c];
    Channel prod;
    prod.d_A = out.d_A * next.d_A;
    prod.d_B = out.d_B * next.d_B;
    prod.kraus.reserve(out.kraus.size() * next.kraus.size());
    for (const auto& a : out.kraus)
      for (const auto& b : next.kraus) prod.kraus.push_back(kron(a, b));
    out = std::move(prod);
  }
  return out;
}

}  // namespace zekit
