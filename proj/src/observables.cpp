#include "zekit/observables.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zekit/errors.hpp"
#include "zekit/rng.hpp"

namespace zekit {

ObservableCheck Observable::check() const {
  ObservableCheck c;
  if (effects.empty()) return c;
  c.min_eigenvalue = herm_eig_min(effects.front());
  CMatrix sum(ambient_dim, ambient_dim);
  for (const auto& m : effects) {
    c.min_eigenvalue = std::min(c.min_eigenvalue, herm_eig_min(m));
    sum += m;
  }
  c.sum_residual = sum.max_abs_diff(CMatrix::identity(ambient_dim));
  c.span_rank = svd_rank(stack_vectorized(effects), 1e-10);
  return c;
}

SparseBasis Observable::effect_list() const {
  SparseBasis out(ambient_dim);
  for (const auto& m : effects) out.push_back(m);
  return out;
}

Observable positive_basis(const OperatorSystem& system, double scale) {
  if (!system.validated()) throw InvalidInput("positive_basis: operator system failed validation");
  if (!(scale > 0.0 && scale <= 1.0)) throw InvalidInput("positive_basis: scale must lie in (0, 1]");
  const std::size_t n = system.ambient_dim();
  const auto herm = system.ortho_basis_dense();
  const std::size_t m = herm.size();
  const CMatrix id = CMatrix::identity(n);
  if (m == 1) return Observable{n, {id}};

  std::vector<double> norms(m, 1.0);
  for (std::size_t k = 1; k < m; ++k) norms[k] = herm_op_norm(herm[k]);

  std::string failure;
  double r = scale;
  for (int attempt = 0; attempt <= 20; ++attempt, r *= 0.5) {
    Observable obs{n, {}};
    obs.effects.reserve(m);
    const double c = 2.0 * static_cast<double>(m - 1);
    CMatrix rest(n, n);
    for (std::size_t k = 1; k < m; ++k) {
      CMatrix mk = id + (r / norms[k]) * herm[k];
      mk *= 1.0 / c;
      rest += mk;
      obs.effects.push_back(std::move(mk));
    }
    obs.effects.insert(obs.effects.begin(), id - rest);
    const auto chk = obs.check();
    if (chk.min_eigenvalue < -1e-10)
      failure = "an effect has eigenvalue " + std::to_string(chk.min_eigenvalue);
    else if (chk.sum_residual > 1e-10)
      failure = "effects sum to I only within " + std::to_string(chk.sum_residual);
    else if (chk.span_rank != m)
      failure = "effects span rank " + std::to_string(chk.span_rank) + " instead of " + std::to_string(m);
    else
      return obs;
  }
  throw ConstructionFailed("positive_basis: " + failure);
}

Observable tensor_observables(std::span<const Observable> factors) {
  if (factors.empty()) throw InvalidInput("tensor_observables: empty list");
  Observable out = factors.front();
  for (std::size_t f = 1; f < factors.size(); ++f) {
    Observable next{out.ambient_dim * factors[f].ambient_dim, {}};
    next.effects.reserve(out.effects.size() * factors[f].effects.size());
    for (const auto& a : out.effects)
      for (const auto& b : factors[f].effects) next.effects.push_back(kron(a, b));
    out = std::move(next);
  }
  return out;
}

IndistinguishabilityVerdict indistinguishable_check(const Observable& obs, const CodeCandidate& code, double tol,
                                                    std::size_t samples, std::uint64_t seed, Exec exec) {
  if (obs.ambient_dim != code.ambient_dim())
    throw DimensionMismatch("indistinguishable_check: observable on C^" + std::to_string(obs.ambient_dim) +
                            ", code in C^" + std::to_string(code.ambient_dim()));
  IndistinguishabilityVerdict v;
  const SparseBasis list = obs.effect_list();
  v.kl = verify_code_against(list, code, tol, exec);
  v.pass = v.kl.pass;
  v.samples = samples;

  // Compress every effect to the code space: C_k(l, m) = <phi_l|M_k|phi_m>.
  const std::size_t d = code.size();
  const std::size_t count = list.size();
  std::vector<cplx> comp(count * d * d);
  const auto& vecs = code.vectors();
  for (std::size_t k = 0; k < count; ++k)
    for (std::size_t l = 0; l < d; ++l)
      for (std::size_t m = 0; m < d; ++m)
        comp[(k * d + l) * d + m] = sparse_sandwich(list.element(k), vecs[l].entries(), vecs[m].entries());

  auto tv_of = [&](std::size_t s) {
    CounterRng rng(seed, s);
    const CVector c = rng.random_unit_vector(d);
    double tv = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
      cplx p{0.0, 0.0};
      for (std::size_t l = 0; l < d; ++l)
        for (std::size_t m = 0; m < d; ++m) p += std::conj(c[l]) * comp[(k * d + l) * d + m] * c[m];
      tv += std::abs(p.real() - comp[k * d * d].real());
    }
    return 0.5 * tv;
  };

  const auto total = static_cast<long>(samples);
  double spread = 0.0;
  if (exec == Exec::parallel) {
#pragma omp parallel for reduction(max : spread) schedule(static)
    for (long s = 0; s < total; ++s) spread = std::max(spread, tv_of(static_cast<std::size_t>(s)));
  } else {
    for (long s = 0; s < total; ++s) spread = std::max(spread, tv_of(static_cast<std::size_t>(s)));
  }
  v.tv_spread = spread;
  return v;
}

}  // namespace zekit
