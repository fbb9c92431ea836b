#include "zekit/zero_pair.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

#include "zekit/errors.hpp"

namespace zekit {

namespace {

constexpr int kSign1[4] = {1, 1, -1, -1};
constexpr int kSign2[4] = {1, -1, 1, -1};

CVector two(cplx x, cplx y) { return CVector{x, y}; }

const CVector& e0() {
  static const CVector v{cplx{1.0, 0.0}, cplx{0.0, 0.0}};
  return v;
}
const CVector& e1() {
  static const CVector v{cplx{0.0, 0.0}, cplx{1.0, 0.0}};
  return v;
}

cplx second_mu(const Angle& theta2, bool conj2) {
  const cplx mu = theta2.half_gamma();
  return conj2 ? std::conj(mu) : mu;
}

struct FormBasis {
  std::vector<std::pair<std::string, CVector>> left;
  std::vector<std::pair<std::string, CVector>> right;
};

FormBasis form_basis(int form, int s, int t, cplx m1, cplx m2) {
  const double sd = s, td = t;
  const cplx c1 = std::conj(m1), c2 = std::conj(m2);
  FormBasis fb;
  switch (form) {
    case 1:
      fb.left = {{"a", kron(two(m1, sd), e0())}, {"b", kron(two(m1, sd), e1())}};
      fb.right = {{"c", kron(two(c1, -sd), e0())}, {"d", kron(two(c1, -sd), e1())}};
      break;
    case 2:
      fb.left = {{"a", kron(e0(), two(m2, sd))}, {"b", kron(e1(), two(m2, sd))}};
      fb.right = {{"c", kron(e0(), two(c2, -sd))}, {"d", kron(e1(), two(c2, -sd))}};
      break;
    case 3:
      fb.left = {{"a", kron(two(m1, 1.0), two(m2, sd))}, {"b", kron(two(m1, -1.0), two(m2, -sd))}};
      fb.right = {{"c", kron(two(c1, 1.0), two(c2, -sd))}, {"d", kron(two(c1, -1.0), two(c2, sd))}};
      break;
    case 4:
      fb.left = {{"h", kron(two(m1, sd), two(m2, td))}};
      fb.right = {{"a", kron(two(c1, -sd), e0())},
                  {"b", kron(two(c1, -sd), e1())},
                  {"c", kron(e0(), two(c2, -td))},
                  {"d", kron(e1(), two(c2, -td))}};
      break;
    case 5:
      fb.left = {{"a", kron(two(m1, -sd), e0())},
                 {"b", kron(two(m1, -sd), e1())},
                 {"c", kron(e0(), two(m2, -td))},
                 {"d", kron(e1(), two(m2, -td))}};
      fb.right = {{"h", kron(two(c1, sd), two(c2, td))}};
      break;
    default:
      throw InvalidInput("zero pair: unknown form " + std::to_string(form));
  }
  return fb;
}

CVector combine(const std::vector<std::pair<std::string, CVector>>& terms, const std::map<std::string, cplx>& params) {
  CVector out(4);
  for (const auto& [name, v] : terms) {
    const auto it = params.find(name);
    if (it == params.end()) throw InvalidInput("zero pair: missing parameter " + name);
    out += it->second * v;
  }
  return out;
}

// Least-squares fit of `target` by the named terms; writes parameters, returns residual.
double fit(const std::vector<std::pair<std::string, CVector>>& terms, const CVector& target,
           std::map<std::string, cplx>& params) {
  CMatrix a(4, terms.size());
  for (std::size_t j = 0; j < terms.size(); ++j)
    for (std::size_t i = 0; i < 4; ++i) a(i, j) = terms[j].second[i];
  const CVector x = least_squares(a, target);
  for (std::size_t j = 0; j < terms.size(); ++j) params[terms[j].first] = x[j];
  return (a * x - target).norm();
}

// (form, s, t) from the set of vanishing p's; form 0 when nothing to classify.
std::tuple<int, int, int> classify(const std::vector<std::size_t>& zero) {
  const auto has = [&](std::size_t k) { return std::find(zero.begin(), zero.end(), k) != zero.end(); };
  switch (zero.size()) {
    case 1:
      return {4, kSign1[zero[0]], kSign2[zero[0]]};
    case 2:
      if (has(0) && has(1)) return {1, 1, 1};
      if (has(2) && has(3)) return {1, -1, 1};
      if (has(0) && has(2)) return {2, 1, 1};
      if (has(1) && has(3)) return {2, -1, 1};
      if (has(0) && has(3)) return {3, 1, 1};
      return {3, -1, 1};  // p_2 = p_3 = 0
    case 3: {
      std::size_t excluded = 0;
      while (has(excluded)) ++excluded;
      return {5, kSign1[excluded], kSign2[excluded]};
    }
    default:
      return {0, 1, 1};
  }
}

}  // namespace

CMatrix phase_unitary(const Angle& theta) {
  CMatrix u(2, 2);
  u(0, 0) = 1.0;
  u(1, 1) = theta.gamma();
  return u;
}

CMatrix swap_unitary() { return CMatrix{{0.0, 1.0}, {1.0, 0.0}}; }

std::array<cplx, 4> zero_pair_conditions(const Angle& theta1, const Angle& theta2, const CVector& z_left,
                                         const CVector& z_right, bool conj2) {
  if (z_left.dim() != 4 || z_right.dim() != 4) throw DimensionMismatch("zero pair: vectors must lie in C^4");
  const CMatrix us[2] = {phase_unitary(theta1), swap_unitary()};
  CMatrix v1 = phase_unitary(theta2);
  if (conj2) v1 = v1.adjoint();
  const CMatrix vs[2] = {v1, swap_unitary()};
  std::array<cplx, 4> out{};
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) out[2 * k + l] = sandwich(z_right, kron(us[k], vs[l]), z_left);
  return out;
}

CMatrix zero_pair_W(const Angle& theta1, const Angle& theta2, const CVector& z_right, bool conj2) {
  if (z_right.dim() != 4) throw DimensionMismatch("zero pair: right vector must lie in C^4");
  const cplx a = std::conj(z_right[0]), b = std::conj(z_right[1]), c = std::conj(z_right[2]),
             d = std::conj(z_right[3]);
  const cplx g1 = theta1.gamma();
  const cplx g2 = conj2 ? std::conj(theta2.gamma()) : theta2.gamma();
  return CMatrix{{a, g2 * b, g1 * c, g1 * g2 * d},
                 {b, a, g1 * d, g1 * c},
                 {c, g2 * d, a, g2 * b},
                 {d, c, b, a}};
}

CMatrix zero_pair_S(const Angle& theta1, const Angle& theta2, bool conj2) {
  const cplx m1 = theta1.half_gamma();
  const cplx m2 = second_mu(theta2, conj2);
  CMatrix s(4, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    const CVector q = kron(two(m1, kSign1[k]), two(m2, kSign2[k]));
    for (std::size_t i = 0; i < 4; ++i) s(i, k) = q[i];
  }
  return s;
}

std::array<cplx, 4> zero_pair_p(const Angle& theta1, const Angle& theta2, const CVector& z_right, bool conj2) {
  if (z_right.dim() != 4) throw DimensionMismatch("zero pair: right vector must lie in C^4");
  const cplx a = std::conj(z_right[0]), b = std::conj(z_right[1]), c = std::conj(z_right[2]),
             d = std::conj(z_right[3]);
  const cplx m1 = theta1.half_gamma();
  const cplx m2 = second_mu(theta2, conj2);
  std::array<cplx, 4> p{};
  for (std::size_t k = 0; k < 4; ++k) {
    const double s1 = kSign1[k], s2 = kSign2[k];
    p[k] = a + s2 * m2 * b + s1 * m1 * c + s1 * s2 * m1 * m2 * d;
  }
  return p;
}

CVector ZeroPairSolution::left() const {
  return combine(form_basis(form_id, s, t, mu1, conj2 ? std::conj(mu2) : mu2).left, params);
}

CVector ZeroPairSolution::right() const {
  return combine(form_basis(form_id, s, t, mu1, conj2 ? std::conj(mu2) : mu2).right, params);
}

ZeroPairResult solve_zero_pair(const Angle& theta1, const Angle& theta2, const CVector& z_right, bool conj2,
                               double tol) {
  ZeroPairResult r;
  r.W = zero_pair_W(theta1, theta2, z_right, conj2);
  r.S = zero_pair_S(theta1, theta2, conj2);
  r.p = zero_pair_p(theta1, theta2, z_right, conj2);
  const double scale = z_right.norm();
  for (std::size_t k = 0; k < 4; ++k)
    if (std::abs(r.p[k]) <= tol * scale) r.vanishing.push_back(k);

  r.nullspace = CMatrix(4, r.vanishing.size());
  for (std::size_t j = 0; j < r.vanishing.size(); ++j)
    for (std::size_t i = 0; i < 4; ++i) r.nullspace(i, j) = 0.5 * r.S(i, r.vanishing[j]);

  const auto [form, s, t] = classify(r.vanishing);
  if (form == 0) return r;

  ZeroPairSolution sol;
  sol.form_id = form;
  sol.s = s;
  sol.t = t;
  sol.mu1 = theta1.half_gamma();
  sol.mu2 = theta2.half_gamma();
  sol.conj2 = conj2;
  const auto fb = form_basis(form, s, t, sol.mu1, second_mu(theta2, conj2));
  // Representative left vector: the sum of the spanning columns q_k.
  CVector rep(4);
  for (const auto k : r.vanishing)
    for (std::size_t i = 0; i < 4; ++i) rep[i] += r.S(i, k);
  fit(fb.left, rep, sol.params);
  sol.right_fit_residual = fit(fb.right, z_right, sol.params);
  r.solutions.push_back(std::move(sol));
  return r;
}

}  // namespace zekit
