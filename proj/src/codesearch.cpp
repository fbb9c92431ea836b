#include "zekit/codesearch.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zekit/errors.hpp"
#include "zekit/rng.hpp"

namespace zekit {

namespace {

constexpr double kArmijo = 1e-4;
constexpr int kMaxBacktracks = 60;
constexpr double kMinStep = 1e-12;
constexpr double kMaxStep = 1e12;

double real_dot(std::span<const cplx> a, std::span<const cplx> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
  return s;
}

// Modified Gram-Schmidt on the d columns of an n x d frame (two passes).
// Returns false if a column collapses.
bool orthonormalize(std::span<cplx> x, std::size_t n, std::size_t d) {
  for (std::size_t k = 0; k < d; ++k) {
    auto col = x.subspan(k * n, n);
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t j = 0; j < k; ++j) {
        auto q = x.subspan(j * n, n);
        cplx c{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) c += std::conj(q[i]) * col[i];
        for (std::size_t i = 0; i < n; ++i) col[i] -= c * q[i];
      }
    double nn = 0.0;
    for (std::size_t i = 0; i < n; ++i) nn += std::norm(col[i]);
    nn = std::sqrt(nn);
    if (!(nn > 1e-300)) return false;
    for (std::size_t i = 0; i < n; ++i) col[i] /= nn;
  }
  return true;
}

// Tangent projection on the Stiefel manifold: xi = G - X sym(X* G).
void riemannian_gradient(std::span<const cplx> x, std::span<const cplx> g, std::size_t n, std::size_t d,
                         std::span<cplx> xi) {
  std::vector<cplx> xg(d * d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) {
      cplx s{0.0, 0.0};
      for (std::size_t i = 0; i < n; ++i) s += std::conj(x[k * n + i]) * g[l * n + i];
      xg[k * d + l] = s;
    }
  std::copy(g.begin(), g.end(), xi.begin());
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t k = 0; k < d; ++k) {
      const cplx sym = 0.5 * (xg[k * d + l] + std::conj(xg[l * d + k]));
      if (sym == cplx{}) continue;
      for (std::size_t i = 0; i < n; ++i) xi[l * n + i] -= x[k * n + i] * sym;
    }
}

}  // namespace

CodeObjective::CodeObjective(const OperatorSystem& system, std::size_t code_dim)
    : basis_(&system.ortho_basis()), n_(system.ambient_dim()), d_(code_dim) {
  if (code_dim < 2) throw InvalidInput("CodeObjective: code dimension must be >= 2");
  if (code_dim > n_) throw InvalidInput("CodeObjective: code dimension exceeds ambient dimension");
}

double CodeObjective::value(std::span<const cplx> x) const {
  if (x.size() != n_ * d_) throw DimensionMismatch("CodeObjective: frame size mismatch");
  std::vector<cplx> m(d_ * d_);
  std::vector<double> diag(d_);
  double f = 0.0;
  for (std::size_t a = 0; a < basis_->size(); ++a) {
    const auto el = basis_->element(a);
    for (std::size_t k = 0; k < d_; ++k) {
      const auto xk = x.subspan(k * n_, n_);
      diag[k] = sparse_sandwich(el, xk, xk).real();
      for (std::size_t l = k + 1; l < d_; ++l) {
        const cplx c = sparse_sandwich(el, x.subspan(l * n_, n_), xk);
        f += std::norm(c);
      }
    }
    for (std::size_t k = 0; k < d_; ++k)
      for (std::size_t l = k + 1; l < d_; ++l) {
        const double delta = diag[k] - diag[l];
        f += delta * delta;
      }
  }
  return f;
}

double CodeObjective::value_and_gradient(std::span<const cplx> x, std::span<cplx> grad) const {
  if (x.size() != n_ * d_ || grad.size() != n_ * d_) throw DimensionMismatch("CodeObjective: frame size mismatch");
  std::fill(grad.begin(), grad.end(), cplx{0.0, 0.0});
  std::vector<cplx> coef(d_ * d_);  // coef[j * d + i]: weight of A x_i in dF/d(conj x_j)
  std::vector<double> diag(d_);
  double f = 0.0;
  for (std::size_t a = 0; a < basis_->size(); ++a) {
    const auto el = basis_->element(a);
    std::fill(coef.begin(), coef.end(), cplx{0.0, 0.0});
    for (std::size_t k = 0; k < d_; ++k) {
      const auto xk = x.subspan(k * n_, n_);
      diag[k] = sparse_sandwich(el, xk, xk).real();
      for (std::size_t l = k + 1; l < d_; ++l) {
        const cplx c = sparse_sandwich(el, x.subspan(l * n_, n_), xk);  // <x_l|A|x_k>
        f += std::norm(c);
        coef[k * d_ + l] += c;
        coef[l * d_ + k] += std::conj(c);
      }
    }
    for (std::size_t k = 0; k < d_; ++k)
      for (std::size_t l = k + 1; l < d_; ++l) {
        const double delta = diag[k] - diag[l];
        f += delta * delta;
        coef[k * d_ + k] += 2.0 * delta;
        coef[l * d_ + l] -= 2.0 * delta;
      }
    for (std::size_t j = 0; j < d_; ++j) {
      auto gj = grad.subspan(j * n_, n_);
      for (std::size_t i = 0; i < d_; ++i) {
        const cplx w = coef[j * d_ + i];
        if (w == cplx{}) continue;
        sparse_axpy(el, w, x.subspan(i * n_, n_), gj);
      }
    }
  }
  for (auto& g : grad) g *= 2.0;
  return f;
}

double code_objective(const OperatorSystem& system, std::span<const CVector> vectors) {
  if (vectors.size() < 2) throw InvalidInput("objective: need at least two vectors");
  const std::size_t n = system.ambient_dim();
  std::vector<cplx> x;
  x.reserve(n * vectors.size());
  for (const auto& v : vectors) {
    if (v.dim() != n)
      throw DimensionMismatch("objective: vector in C^" + std::to_string(v.dim()) + ", system on C^" + std::to_string(n));
    if (std::abs(v.norm() - 1.0) > 1e-9) throw NotUnit("objective: vector norm deviates from 1 by more than 1e-9");
    x.insert(x.end(), v.entries().begin(), v.entries().end());
  }
  return CodeObjective(system, vectors.size()).value(x);
}

double objective(const OperatorSystem& system, const CVector& phi, const CVector& psi) {
  const CVector pair[] = {phi, psi};
  return code_objective(system, pair);
}

RestartOutcome descend(const CodeObjective& f, std::vector<cplx>& x, const SearchOptions& opt) {
  const std::size_t n = f.ambient_dim();
  const std::size_t d = f.code_dim();
  const std::size_t len = n * d;
  if (x.size() != len) throw DimensionMismatch("descend: frame size mismatch");
  if (!orthonormalize(x, n, d)) throw InvalidInput("descend: degenerate start frame");

  std::vector<cplx> g(len), xi(len), x_prev(len), xi_prev(len), trial(len), g_trial(len);
  std::vector<double> history;
  history.reserve(opt.max_iters + 1);

  RestartOutcome out;
  double fx = f.value_and_gradient(x, g);
  history.push_back(fx);
  double step = 1.0;
  std::size_t it = 0;
  for (; it < opt.max_iters; ++it) {
    if (fx < opt.tol) {
      out.converged = true;
      break;
    }
    riemannian_gradient(x, g, n, d, xi);
    const double gnorm2 = real_dot(xi, xi);
    if (!(gnorm2 > 0.0)) break;

    if (it > 0) {
      // Barzilai-Borwein trial step from the last displacement.
      double ss = 0.0, sy = 0.0;
      for (std::size_t i = 0; i < len; ++i) {
        const cplx s = x[i] - x_prev[i];
        const cplx y = xi[i] - xi_prev[i];
        ss += std::norm(s);
        sy += s.real() * y.real() + s.imag() * y.imag();
      }
      step = sy > 0.0 ? ss / sy : 2.0 * step;
    } else {
      step = 1.0 / std::sqrt(gnorm2);
    }
    step = std::clamp(step, kMinStep, kMaxStep);

    bool accepted = false;
    double f_trial = 0.0;
    for (int bt = 0; bt < kMaxBacktracks; ++bt) {
      for (std::size_t i = 0; i < len; ++i) trial[i] = x[i] - step * xi[i];
      if (orthonormalize(trial, n, d)) {
        f_trial = f.value(trial);
        if (f_trial <= fx - kArmijo * step * gnorm2) {
          accepted = true;
          break;
        }
      }
      step *= 0.5;
    }
    if (!accepted) break;

    x_prev.swap(x);
    xi_prev.swap(xi);
    x.swap(trial);
    fx = f.value_and_gradient(x, g);
    history.push_back(fx);

    if (history.size() > opt.stall_window) {
      const double before = history[history.size() - 1 - opt.stall_window];
      if (before - fx < opt.stall_rel * before) {
        ++it;
        break;
      }
    }
  }
  if (fx < opt.tol) out.converged = true;
  out.objective = fx;
  out.iterations = it;
  return out;
}

FeasibilityReport search_code(const OperatorSystem& system, const SearchOptions& opt) {
  if (!system.validated()) throw InvalidInput("search: operator system failed validation");
  if (opt.restarts == 0) throw InvalidInput("search: restarts must be >= 1");
  if (!(opt.tol > 0.0)) throw InvalidInput("search: tol must be positive");

  const CodeObjective f(system, opt.code_dim);
  const std::size_t n = system.ambient_dim();
  const std::size_t d = opt.code_dim;
  std::vector<std::vector<cplx>> frames(opt.restarts);
  std::vector<RestartOutcome> outcomes(opt.restarts);

  auto run_one = [&](std::size_t r) {
    CounterRng rng(opt.seed, r);
    std::vector<cplx> x(n * d);
    for (auto& z : x) z = rng.complex_normal();
    outcomes[r] = descend(f, x, opt);
    frames[r] = std::move(x);
  };

  const std::size_t chunk = opt.stop_at_tol ? std::max<std::size_t>(opt.chunk, 1) : opt.restarts;
  std::size_t done = 0;
  while (done < opt.restarts) {
    const auto lo = static_cast<long>(done);
    const auto hi = static_cast<long>(std::min(opt.restarts, done + chunk));
    if (opt.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
      for (long r = lo; r < hi; ++r) run_one(static_cast<std::size_t>(r));
    } else {
      for (long r = lo; r < hi; ++r) run_one(static_cast<std::size_t>(r));
    }
    done = static_cast<std::size_t>(hi);
    if (opt.stop_at_tol &&
        std::any_of(outcomes.begin(), outcomes.begin() + hi, [&](const RestartOutcome& o) { return o.objective < opt.tol; }))
      break;
  }
  outcomes.resize(done);

  FeasibilityReport rep;
  rep.restarts = done;
  rep.restarts_requested = opt.restarts;
  rep.seed = opt.seed;
  rep.tol = opt.tol;
  rep.per_restart = outcomes;
  std::size_t best = 0;
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    rep.iterations_total += outcomes[r].iterations;
    if (outcomes[r].objective < outcomes[best].objective) best = r;
  }
  rep.best_restart = best;
  rep.objective_min = outcomes[best].objective;
  rep.converged_at_tol = outcomes[best].converged;
  std::vector<CVector> cert;
  for (std::size_t k = 0; k < d; ++k)
    cert.emplace_back(std::vector<cplx>(frames[best].begin() + static_cast<long>(k * n),
                                        frames[best].begin() + static_cast<long>((k + 1) * n)));
  rep.certificate = CodeCandidate(std::move(cert));
  return rep;
}

FeasibilityReport search_pair(const OperatorSystem& system, std::size_t restarts, std::uint64_t seed, double tol,
                              Exec exec) {
  SearchOptions opt;
  opt.restarts = restarts;
  opt.seed = seed;
  opt.tol = tol;
  opt.exec = exec;
  return search_code(system, opt);
}

}  // namespace zekit
