#include <gtest/gtest.h>

#include <array>

#include "support.hpp"
#include "zekit/errors.hpp"
#include "zekit/opsys.hpp"

using namespace zekit;
using namespace zekit::testing;

namespace {
std::vector<Angle> grid() {
  return {Angle(1, 6), Angle(-1, 6), Angle(1, 4), Angle(-1, 4), Angle(1, 3), Angle(-1, 3),
          Angle(1, 2), Angle(-1, 2), Angle::pi(), Angle::zero(), Angle(5, 6)};
}
}  // namespace

TEST(NTheta, ValidEightDimensional) {
  for (const auto& t : grid()) {
    const auto s = make_N_theta(t);
    EXPECT_EQ(s.dim(), 8u) << t.to_string();
    EXPECT_EQ(s.ambient_dim(), 4u);
    EXPECT_TRUE(s.validated()) << t.to_string();
    EXPECT_LT(s.verdict().identity_residual, 1e-10);
    EXPECT_LT(s.verdict().adjoint_residual, 1e-10);
    EXPECT_LT(membership(s, CMatrix::identity(4)), 1e-12);
  }
}

TEST(NTheta, EntryPattern) {
  const Angle t(1, 3);
  const cplx y = t.gamma();
  const std::array<cplx, 8> coords{1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0};
  const CMatrix m = n_theta_matrix(t, coords);
  const CMatrix expected{{1.0, 2.0, 5.0, 6.0},
                         {3.0, 4.0, 6.0, std::conj(y) * 5.0},
                         {7.0, 8.0, 1.0, 2.0},
                         {8.0, y * 7.0, 3.0, 4.0}};
  EXPECT_LT(m.max_abs_diff(expected), 1e-15);
  EXPECT_LT(n_theta_member(t, 'g').max_abs_diff(n_theta_matrix(t, {{0, 0, 0, 0, 0, 0, 1, 0}})), 1e-15);
  EXPECT_THROW(n_theta_member(t, 'z'), InvalidInput);
}

TEST(NTheta, StarClosureMapsGToE) {
  // (g-member)* lies in the span: it is the e-member pattern up to conjugated phase.
  const Angle t(1, 3);
  const auto s = make_N_theta(t);
  EXPECT_LT(membership(s, n_theta_member(t, 'g').adjoint()), 1e-12);
  EXPECT_LT(membership(s, n_theta_member(t, 'h').adjoint()), 1e-12);
}

TEST(NTheta, LoneMatrixUnitIsOutside) {
  const auto s = make_N_theta(Angle(1, 2));
  EXPECT_GT(membership(s, CMatrix::unit(4, 0, 2)), 0.1);
  EXPECT_LT(membership(s, CMatrix(4, 4)), 1e-15);
}

TEST(OperatorSystem, SmallExamples) {
  const std::vector<CMatrix> id{CMatrix::identity(2)};
  const auto s = OperatorSystem::from_basis(id);
  EXPECT_TRUE(s.validated());
  EXPECT_EQ(s.dim(), 1u);

  const std::vector<CMatrix> unit{CMatrix::unit(2, 0, 1)};
  const auto bad = OperatorSystem::from_basis(unit);
  EXPECT_FALSE(bad.verdict().contains_identity);
  EXPECT_FALSE(bad.verdict().star_closed);
  EXPECT_FALSE(bad.validated());
}

TEST(OperatorSystem, ErrorsOnBadInput) {
  EXPECT_THROW(OperatorSystem::from_basis(std::vector<CMatrix>{}), InvalidInput);
  const std::vector<CMatrix> ragged{CMatrix::identity(2), CMatrix::identity(3)};
  EXPECT_THROW(OperatorSystem::from_basis(ragged), DimensionMismatch);
  EXPECT_THROW(membership(make_N_theta(Angle::pi()), CMatrix::identity(3)), DimensionMismatch);
}

TEST(OperatorSystem, OrthoBasisIsHermitianOrthonormal) {
  const auto s = make_N_theta(Angle(1, 6));
  const auto h = s.ortho_basis_dense();
  ASSERT_EQ(h.size(), 8u);
  EXPECT_LT(h[0].max_abs_diff(cplx{0.5, 0.0} * CMatrix::identity(4)), 1e-14);
  for (std::size_t i = 0; i < h.size(); ++i) {
    EXPECT_LT(h[i].hermiticity_defect(), 1e-14);
    for (std::size_t j = 0; j < h.size(); ++j)
      EXPECT_NEAR(std::abs(hs_inner(h[i], h[j])), i == j ? 1.0 : 0.0, 1e-12);
  }
}

TEST(TensorSystems, Dimensions) {
  const std::vector<CMatrix> i2{CMatrix::identity(2)}, i3{CMatrix::identity(3)};
  const auto t = tensor_systems(OperatorSystem::from_basis(i2), OperatorSystem::from_basis(i3));
  EXPECT_EQ(t.dim(), 1u);
  EXPECT_EQ(t.ambient_dim(), 6u);
  EXPECT_LT(membership(t, CMatrix::identity(6)), 1e-14);

  const auto p = tensor_systems(make_N_theta(Angle(1, 3)), make_N_theta(Angle(-1, 4)));
  EXPECT_EQ(p.dim(), 64u);
  EXPECT_EQ(p.ambient_dim(), 16u);
  EXPECT_EQ(p.factor_count(), 2u);
  EXPECT_TRUE(p.validated());
  EXPECT_TRUE(p.verdict().structural);
}

TEST(TensorSystems, StructuralVerdictAgreesWithDenseCheck) {
  const auto p = tensor_systems(make_N_theta(Angle(1, 3)), make_N_theta(Angle(1, 2)));
  const auto dense = OperatorSystem::from_basis(p.basis());
  EXPECT_EQ(dense.dim(), 64u);
  EXPECT_TRUE(dense.validated());
  EXPECT_FALSE(dense.verdict().structural);
  EXPECT_LT(span_distance(p, dense), 1e-10);
}

TEST(TensorSystems, ContainsProductMembers) {
  const Angle a(1, 3), b(1, 6);
  const auto p = tensor_systems(make_N_theta(a), make_N_theta(b));
  EXPECT_LT(membership(p, kron(n_theta_member(a, 'e'), n_theta_member(b, 'h'))), 1e-12);
  EXPECT_GT(membership(p, kron(CMatrix::unit(4, 0, 2), CMatrix::identity(4))), 0.1);
}

TEST(TensorSystems, RejectsInvalidFactor) {
  const std::vector<CMatrix> unit{CMatrix::unit(2, 0, 1)};
  EXPECT_THROW(tensor_systems(OperatorSystem::from_basis(unit), make_N_theta(Angle::pi())), InvalidInput);
}

TEST(SpanDistance, DistinguishesAngles) {
  EXPECT_LT(span_distance(make_N_theta(Angle(1, 3)), make_N_theta(Angle(1, 3))), 1e-12);
  EXPECT_GT(span_distance(make_N_theta(Angle(1, 3)), make_N_theta(Angle(1, 2))), 1e-3);
}
