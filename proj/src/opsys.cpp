#include "zekit/opsys.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "zekit/errors.hpp"

namespace zekit {

namespace {

constexpr double kGramSchmidtTol = 1e-10;

// Two-pass modified Gram-Schmidt; `real_inner` restricts to the real inner
// product Re tr(A* B), which keeps Hermitian candidates Hermitian.
std::vector<CMatrix> gram_schmidt(std::vector<CMatrix> candidates, bool real_inner) {
  std::vector<CMatrix> kept;
  for (auto& c : candidates) {
    const double original = c.frobenius_norm();
    if (original == 0.0) continue;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : kept) {
        cplx coef = hs_inner(q, c);
        if (real_inner) coef = coef.real();
        if (coef != cplx{}) c -= coef * q;
      }
    const double n = c.frobenius_norm();
    if (n <= kGramSchmidtTol * std::max(1.0, original)) continue;
    c *= 1.0 / n;
    kept.push_back(std::move(c));
  }
  return kept;
}

// Residual of m after projecting onto the orthonormal list `onb`.
double projection_residual(const SparseBasis& onb, CMatrix m) {
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t k = 0; k < onb.size(); ++k) {
      const auto q = onb.element(k);
      const cplx coef = sparse_hs_inner(q, m);
      if (coef == cplx{}) continue;
      for (const auto& e : q) m(e.row, e.col) -= coef * e.value;
    }
  return m.frobenius_norm();
}

}  // namespace

OperatorSystem OperatorSystem::from_basis(std::span<const CMatrix> basis) {
  if (basis.empty()) throw InvalidInput("OperatorSystem: empty spanning list");
  const std::size_t n = basis[0].rows();
  for (const auto& b : basis)
    if (b.rows() != n || b.cols() != n)
      throw DimensionMismatch("OperatorSystem: every basis matrix must be " + std::to_string(n) + "x" +
                              std::to_string(n));

  OperatorSystem sys;
  sys.ambient_dim_ = n;
  sys.spanning_ = SparseBasis::from_dense(basis);

  std::vector<CMatrix> complex_candidates(basis.begin(), basis.end());
  auto onb = gram_schmidt(std::move(complex_candidates), /*real_inner=*/false);
  sys.span_onb_ = SparseBasis::from_dense(onb);

  ValidationVerdict v;
  v.dim = onb.size();
  const CMatrix eye = CMatrix::identity(n);
  v.identity_residual = projection_residual(sys.span_onb_, eye);
  v.contains_identity = v.identity_residual < kDefaultTol;
  v.adjoint_residual = 0.0;
  for (const auto& b : basis) {
    const double scale = std::max(1.0, b.frobenius_norm());
    v.adjoint_residual = std::max(v.adjoint_residual, projection_residual(sys.span_onb_, b.adjoint()) / scale);
  }
  v.star_closed = v.adjoint_residual < kDefaultTol;
  sys.verdict_ = v;

  std::vector<CMatrix> hermitian_candidates;
  hermitian_candidates.reserve(2 * basis.size() + 1);
  if (v.contains_identity) hermitian_candidates.push_back((1.0 / std::sqrt(static_cast<double>(n))) * eye);
  for (const auto& b : basis) {
    const CMatrix adj = b.adjoint();
    hermitian_candidates.push_back(0.5 * (b + adj));
    hermitian_candidates.push_back(cplx{0.0, -0.5} * (b - adj));
  }
  sys.hermitian_ = SparseBasis::from_dense(gram_schmidt(std::move(hermitian_candidates), /*real_inner=*/true));
  return sys;
}

CMatrix n_theta_matrix(const Angle& theta, std::span<const cplx, 8> k) {
  const cplx y = theta.gamma();
  const cplx a = k[0], b = k[1], c = k[2], d = k[3], e = k[4], f = k[5], g = k[6], h = k[7];
  return CMatrix{{a, b, e, f}, {c, d, f, std::conj(y) * e}, {g, h, a, b}, {h, y * g, c, d}};
}

CMatrix n_theta_member(const Angle& theta, char coordinate) {
  const std::string letters = "abcdefgh";
  const auto pos = letters.find(coordinate);
  if (pos == std::string::npos) throw InvalidInput(std::string("n_theta_member: unknown coordinate ") + coordinate);
  std::array<cplx, 8> coords{};
  coords[pos] = 1.0;
  return n_theta_matrix(theta, coords);
}

OperatorSystem make_N_theta(const Angle& theta) {
  std::vector<CMatrix> basis;
  for (char c : std::string("abcdefgh")) basis.push_back(n_theta_member(theta, c));
  return OperatorSystem::from_basis(basis);
}

ValidationVerdict validate_system(const OperatorSystem& system) { return system.verdict(); }

OperatorSystem tensor_systems(const OperatorSystem& a, const OperatorSystem& b) {
  if (!a.validated() || !b.validated())
    throw InvalidInput("tensor_systems: both operands must satisfy *-closure and contain the identity");
  OperatorSystem out;
  out.ambient_dim_ = a.ambient_dim_ * b.ambient_dim_;
  out.factor_count_ = a.factor_count_ + b.factor_count_;
  out.spanning_ = SparseBasis::kron(a.spanning_, b.spanning_);
  out.span_onb_ = SparseBasis::kron(a.span_onb_, b.span_onb_);
  out.hermitian_ = SparseBasis::kron(a.hermitian_, b.hermitian_);
  ValidationVerdict v;
  v.contains_identity = true;
  v.star_closed = true;
  v.identity_residual = std::max(a.verdict_.identity_residual, b.verdict_.identity_residual);
  v.adjoint_residual = std::max(a.verdict_.adjoint_residual, b.verdict_.adjoint_residual);
  v.dim = out.span_onb_.size();
  v.structural = true;
  out.verdict_ = v;
  return out;
}

OperatorSystem tensor_systems(std::span<const OperatorSystem> systems) {
  if (systems.empty()) throw InvalidInput("tensor_systems: empty list");
  OperatorSystem out = systems[0];
  if (!out.validated()) throw InvalidInput("tensor_systems: operand failed validation");
  for (std::size_t i = 1; i < systems.size(); ++i) out = tensor_systems(out, systems[i]);
  return out;
}

double membership(const OperatorSystem& system, const CMatrix& a) {
  if (a.rows() != system.ambient_dim() || a.cols() != system.ambient_dim())
    throw DimensionMismatch("membership: matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            ", system lives in M_" + std::to_string(system.ambient_dim()));
  return projection_residual(system.span_onb(), a);
}

double span_distance(const OperatorSystem& a, const OperatorSystem& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("span_distance: ambient dimension mismatch");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.span_onb().size(); ++k) worst = std::max(worst, membership(b, a.span_onb().dense(k)));
  for (std::size_t k = 0; k < b.span_onb().size(); ++k) worst = std::max(worst, membership(a, b.span_onb().dense(k)));
  return worst;
}

}  // namespace zekit
