#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "zekit/errors.hpp"
#include "zekit/zero_pair.hpp"

using namespace zekit;
using namespace zekit::testing;

namespace {

struct GridPoint {
  Angle t1, t2;
  bool conj2;
};

std::vector<GridPoint> grid() {
  std::vector<GridPoint> out;
  for (const Angle a : {Angle(1, 3), Angle(-1, 6), Angle(5, 6)})
    for (const Angle b : {Angle(1, 2), Angle(-1, 4), Angle(2, 3)})
      for (bool c : {false, true}) out.push_back({a, b, c});
  return out;
}

// Matrix P with p = P conj(z): p is linear in the conjugated entries of z.
CMatrix p_matrix(const GridPoint& g) {
  CMatrix p(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto col = zero_pair_p(g.t1, g.t2, CVector::basis(4, i), g.conj2);
    for (std::size_t k = 0; k < 4; ++k) p(k, i) = col[k];
  }
  return p;
}

// Random z_right whose p_k vanish exactly for k in `zeros`.
CVector constructed_right(CounterRng& rng, const CMatrix& p, const std::vector<std::size_t>& zeros) {
  if (zeros.empty()) return rng.random_vector(4);
  CMatrix rows(zeros.size(), 4);
  for (std::size_t r = 0; r < zeros.size(); ++r)
    for (std::size_t i = 0; i < 4; ++i) rows(r, i) = p(zeros[r], i);
  const CMatrix ns = nullspace(rows);
  CVector w(4);
  for (std::size_t j = 0; j < ns.cols(); ++j) w += rng.complex_normal() * column(ns, j);
  return w.conj();
}

int expected_form(const std::vector<std::size_t>& zeros) {
  if (zeros.size() == 1) return 4;
  if (zeros.size() == 3) return 5;
  // Pairs sharing the first sign, the second sign, or neither.
  if (zeros[0] / 2 == zeros[1] / 2) return 1;
  if (zeros[0] % 2 == zeros[1] % 2) return 2;
  return 3;
}

const std::vector<std::vector<std::size_t>> kSubsets = {
    {}, {0}, {1}, {2}, {3}, {0, 1}, {2, 3}, {0, 2}, {1, 3}, {0, 3}, {1, 2}, {0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};

}  // namespace

TEST(ZeroPair, ZeroRightVectorGivesWholeSpace) {
  const auto r = solve_zero_pair(Angle(1, 3), Angle(1, 6), CVector(4), false);
  for (const auto& p : r.p) EXPECT_EQ(std::abs(p), 0.0);
  EXPECT_EQ(r.vanishing.size(), 4u);
  EXPECT_EQ(svd_rank(r.nullspace), 4u);
  EXPECT_TRUE(r.solutions.empty());
}

TEST(ZeroPair, FirstBasisVectorGivesAllOnes) {
  const auto r = solve_zero_pair(Angle(1, 3), Angle(1, 6), CVector::basis(4, 0), false);
  for (const auto& p : r.p) EXPECT_NEAR(std::abs(p - cplx{1.0, 0.0}), 0.0, 1e-15);
  EXPECT_TRUE(r.vanishing.empty());
  EXPECT_EQ(r.nullspace.cols(), 0u);
  EXPECT_EQ(svd_rank(r.W), 4u);
}

TEST(ZeroPair, DimensionGuard) {
  EXPECT_THROW(solve_zero_pair(Angle(1, 3), Angle(1, 6), CVector(3), false), DimensionMismatch);
}

TEST(ZeroPair, PhaseUnitaries) {
  const auto u = phase_unitary(Angle(1, 2));
  EXPECT_EQ(u(1, 1), cplx(0.0, 1.0));
  EXPECT_EQ(u(0, 1), cplx(0.0, 0.0));
  EXPECT_EQ(swap_unitary() * swap_unitary(), CMatrix::identity(2));
}

TEST(ZeroPair, WEncodesTheConditions) {
  CounterRng rng(30, 0);
  for (const auto& g : grid()) {
    const CVector zl = rng.random_vector(4), zr = rng.random_vector(4);
    const auto cond = zero_pair_conditions(g.t1, g.t2, zl, zr, g.conj2);
    const CVector wz = zero_pair_W(g.t1, g.t2, zr, g.conj2) * zl;
    for (std::size_t k = 0; k < 4; ++k) EXPECT_LT(std::abs(cond[k] - wz[k]), 1e-12);
  }
}

TEST(ZeroPair, SDiagonalizesW) {
  CounterRng rng(31, 0);
  for (const auto& g : grid()) {
    const CMatrix s = zero_pair_S(g.t1, g.t2, g.conj2);
    EXPECT_LT((s.adjoint() * s).max_abs_diff(cplx{4.0, 0.0} * CMatrix::identity(4)), 1e-12);
    for (int trial = 0; trial < 10; ++trial) {
      const CVector zr = rng.random_vector(4);
      const auto p = zero_pair_p(g.t1, g.t2, zr, g.conj2);
      const CMatrix d = cplx{0.25, 0.0} * s.adjoint() * zero_pair_W(g.t1, g.t2, zr, g.conj2) * s;
      EXPECT_LT(d.max_abs_diff(CMatrix::diag(p)), 1e-12);
    }
  }
}

TEST(ZeroPair, NullspaceMatchesSvdAndFormsSolve) {
  CounterRng rng(32, 0);
  for (const auto& g : grid()) {
    const CMatrix p = p_matrix(g);
    for (int trial = 0; trial < 105; ++trial) {
      const auto& zeros = kSubsets[static_cast<std::size_t>(trial) % kSubsets.size()];
      const CVector zr = constructed_right(rng, p, zeros);
      const auto r = solve_zero_pair(g.t1, g.t2, zr, g.conj2);
      ASSERT_EQ(r.vanishing, zeros);
      const CMatrix brute = nullspace(r.W, 1e-9);
      ASSERT_EQ(brute.cols(), r.nullspace.cols());
      if (!zeros.empty()) EXPECT_LT(max_principal_angle(r.nullspace, brute), 1e-8);

      if (zeros.empty()) {
        EXPECT_TRUE(r.solutions.empty());
        continue;
      }
      ASSERT_EQ(r.solutions.size(), 1u);
      const auto& sol = r.solutions[0];
      EXPECT_EQ(sol.form_id, expected_form(zeros));
      EXPECT_LT(sol.right_fit_residual, 1e-9 * zr.norm());
      EXPECT_LT((sol.right() - zr).norm(), 1e-9 * zr.norm());
      const CVector left = sol.left();
      EXPECT_GT(left.norm(), 0.1);
      for (const auto& c : zero_pair_conditions(g.t1, g.t2, left, sol.right(), g.conj2))
        EXPECT_LT(std::abs(c), 1e-9 * zr.norm() * left.norm());
    }
  }
}

TEST(ZeroPair, FormSignsFollowTheVanishingColumns) {
  const GridPoint g{Angle(1, 3), Angle(1, 2), false};
  const CMatrix p = p_matrix(g);
  CounterRng rng(33, 0);
  const auto one = solve_zero_pair(g.t1, g.t2, constructed_right(rng, p, {2}), false);
  ASSERT_EQ(one.solutions.size(), 1u);
  EXPECT_EQ(one.solutions[0].s, -1);
  EXPECT_EQ(one.solutions[0].t, 1);
  const auto pair = solve_zero_pair(g.t1, g.t2, constructed_right(rng, p, {2, 3}), false);
  EXPECT_EQ(pair.solutions[0].form_id, 1);
  EXPECT_EQ(pair.solutions[0].s, -1);
  const auto three = solve_zero_pair(g.t1, g.t2, constructed_right(rng, p, {0, 2, 3}), false);
  EXPECT_EQ(three.solutions[0].form_id, 5);
  EXPECT_EQ(three.solutions[0].s, 1);
  EXPECT_EQ(three.solutions[0].t, -1);
}

TEST(ZeroPair, UnknownParameterRejected) {
  ZeroPairSolution sol;
  sol.form_id = 1;
  EXPECT_THROW(sol.left(), InvalidInput);
  sol.form_id = 9;
  EXPECT_THROW(sol.left(), InvalidInput);
}
