#include "zekit/klcodes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zekit/errors.hpp"

namespace zekit {

CodeCandidate::CodeCandidate(std::vector<CVector> vectors) : vectors_(std::move(vectors)) {
  if (vectors_.empty()) throw InvalidInput("CodeCandidate: no vectors");
  ambient_dim_ = vectors_[0].dim();
  for (std::size_t k = 0; k < vectors_.size(); ++k) {
    if (vectors_[k].dim() != ambient_dim_) throw InvalidInput("CodeCandidate: vectors differ in dimension");
    if (std::abs(vectors_[k].norm() - 1.0) > 1e-12)
      throw InvalidInput("CodeCandidate: vector " + std::to_string(k) + " is not a unit vector");
    for (std::size_t l = 0; l < k; ++l)
      if (std::abs(inner(vectors_[l], vectors_[k])) > 1e-12)
        throw InvalidInput("CodeCandidate: vectors " + std::to_string(l) + " and " + std::to_string(k) +
                           " are not orthogonal");
  }
}

CodeCandidate CodeCandidate::orthonormalized(std::vector<CVector> vectors) {
  std::vector<CVector> out;
  for (auto& v : vectors) {
    const double original = v.norm();
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : out) v -= inner(q, v) * q;
    const double n = v.norm();
    if (n <= 1e-10 * std::max(1.0, original)) throw InvalidInput("CodeCandidate: linearly dependent vectors");
    v *= 1.0 / n;
    out.push_back(std::move(v));
  }
  return CodeCandidate(std::move(out));
}

CMatrix CodeCandidate::projector() const {
  CMatrix p(ambient_dim_, ambient_dim_);
  for (const auto& v : vectors_) p += CMatrix::outer(v, v);
  return p;
}

namespace {

struct Maxima {
  double offdiag = 0.0;
  double spread = 0.0;
};

Maxima element_maxima(std::span<const SparseEntry> a, const std::vector<CVector>& vecs) {
  Maxima m;
  const std::size_t d = vecs.size();
  const double base = sparse_sandwich(a, vecs[0].entries(), vecs[0].entries()).real();
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) {
      if (k == l) {
        if (k > 0) {
          const double diag = sparse_sandwich(a, vecs[k].entries(), vecs[k].entries()).real();
          m.spread = std::max(m.spread, std::abs(diag - base));
        }
      } else {
        m.offdiag = std::max(m.offdiag, std::abs(sparse_sandwich(a, vecs[l].entries(), vecs[k].entries())));
      }
    }
  return m;
}

}  // namespace

KLReport verify_code_against(const SparseBasis& operators, const CodeCandidate& code, double tol, Exec exec) {
  if (operators.ambient_dim() != code.ambient_dim())
    throw DimensionMismatch("verify_code: code lives in C^" + std::to_string(code.ambient_dim()) +
                            ", operators act on C^" + std::to_string(operators.ambient_dim()));
  const auto& vecs = code.vectors();
  const auto count = static_cast<long>(operators.size());
  double offdiag = 0.0;
  double spread = 0.0;
  if (exec == Exec::parallel) {
#pragma omp parallel for reduction(max : offdiag, spread) schedule(static)
    for (long k = 0; k < count; ++k) {
      const Maxima m = element_maxima(operators.element(static_cast<std::size_t>(k)), vecs);
      offdiag = std::max(offdiag, m.offdiag);
      spread = std::max(spread, m.spread);
    }
  } else {
    for (long k = 0; k < count; ++k) {
      const Maxima m = element_maxima(operators.element(static_cast<std::size_t>(k)), vecs);
      offdiag = std::max(offdiag, m.offdiag);
      spread = std::max(spread, m.spread);
    }
  }
  KLReport r;
  r.max_offdiag = offdiag;
  r.max_diag_spread = spread;
  r.tol = tol;
  r.pass = offdiag < tol && spread < tol;
  return r;
}

KLReport verify_code(const OperatorSystem& system, const CodeCandidate& code, double tol, Exec exec) {
  return verify_code_against(system.ortho_basis(), code, tol, exec);
}

std::size_t repeated_index(std::size_t j, std::size_t n) {
  std::size_t idx = 0;
  for (std::size_t t = 0; t < n; ++t) idx = idx * 4 + j;
  return idx;
}

CodeCandidate theorem_A_code() {
  const double r = 1.0 / std::sqrt(2.0);
  return CodeCandidate({CVector{r, cplx{0.0, r}, 0.0, 0.0}, CVector{0.0, 0.0, r, cplx{0.0, r}}});
}

CodeCandidate theorem_B_code(std::size_t n) {
  if (n == 0) throw InvalidInput("theorem_B_code: n must be >= 1");
  if (n > 10) throw DimensionGuard("theorem_B_code: 4^n exceeds the supported size");
  std::size_t dim = 1;
  for (std::size_t t = 0; t < n; ++t) dim *= 4;
  const double r = 1.0 / std::sqrt(2.0);
  CVector phi(dim), psi(dim);
  phi[repeated_index(0, n)] = r;
  phi[repeated_index(1, n)] = cplx{0.0, r};
  psi[repeated_index(2, n)] = r;
  psi[repeated_index(3, n)] = cplx{0.0, r};
  return CodeCandidate({std::move(phi), std::move(psi)});
}

cplx pairing_value(std::span<const Angle> thetas, std::span<const cplx> g_coeffs) {
  if (thetas.size() != g_coeffs.size()) throw InvalidInput("pairing_value: list lengths differ");
  cplx gprod{1.0, 0.0};
  for (const auto& g : g_coeffs) gprod *= g;
  // gamma_1 ... gamma_n = exp(i (theta_1 + ... + theta_n)), evaluated on the
  // exact angle sum.
  return 0.5 * gprod * (1.0 + sum(thetas).gamma());
}

}  // namespace zekit
