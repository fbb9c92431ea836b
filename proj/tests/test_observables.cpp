#include <gtest/gtest.h>

#include "support.hpp"
#include "zekit/codesearch.hpp"
#include "zekit/errors.hpp"
#include "zekit/observables.hpp"
#include "zekit/opsys.hpp"

using namespace zekit;
using namespace zekit::testing;

namespace {
const std::vector<Angle> kGrid{Angle(1, 6), Angle(-1, 6), Angle(1, 3), Angle(-1, 3), Angle(1, 2),
                               Angle(-1, 2), Angle::pi(),  Angle::zero(), Angle(5, 6)};
}

TEST(PositiveBasis, IdentitySystem) {
  const std::vector<CMatrix> id{CMatrix::identity(3)};
  const auto obs = positive_basis(OperatorSystem::from_basis(id));
  ASSERT_EQ(obs.effects.size(), 1u);
  EXPECT_EQ(obs.effects[0], CMatrix::identity(3));
}

TEST(PositiveBasis, InvariantsOnGrid) {
  for (const auto& t : kGrid) {
    const auto sys = make_N_theta(t);
    const auto obs = positive_basis(sys);
    ASSERT_EQ(obs.effects.size(), 8u) << t.to_string();
    const auto c = obs.check();
    EXPECT_GE(c.min_eigenvalue, 0.0) << t.to_string();
    EXPECT_LT(c.sum_residual, 1e-12);
    EXPECT_EQ(c.span_rank, 8u);
    EXPECT_TRUE(c.ok());
    // The effects span exactly N_theta.
    EXPECT_LT(span_distance(OperatorSystem::from_basis(obs.effects), sys), 1e-10);
  }
}

TEST(PositiveBasis, ClosureEffectComesFirst) {
  const auto obs = positive_basis(make_N_theta(Angle(1, 2)));
  CMatrix rest(4, 4);
  for (std::size_t k = 1; k < obs.effects.size(); ++k) rest += obs.effects[k];
  EXPECT_LT((obs.effects[0] + rest).max_abs_diff(CMatrix::identity(4)), 1e-14);
}

TEST(PositiveBasis, Errors) {
  const std::vector<CMatrix> unit{CMatrix::unit(2, 0, 1)};
  EXPECT_THROW(positive_basis(OperatorSystem::from_basis(unit)), InvalidInput);
  EXPECT_THROW(positive_basis(make_N_theta(Angle::pi()), 0.0), InvalidInput);
  EXPECT_THROW(positive_basis(make_N_theta(Angle::pi()), 1.5), InvalidInput);
}

TEST(TensorObservables, Identity) {
  const Observable i1{2, {CMatrix::identity(2)}};
  const std::vector<Observable> f{i1, i1};
  const auto t = tensor_observables(f);
  ASSERT_EQ(t.effects.size(), 1u);
  EXPECT_EQ(t.effects[0], CMatrix::identity(4));
  EXPECT_THROW(tensor_observables(std::vector<Observable>{}), InvalidInput);
}

TEST(TensorObservables, ThreeFactors) {
  const std::vector<Observable> f{positive_basis(make_N_theta(Angle(1, 3))), positive_basis(make_N_theta(Angle(1, 6))),
                                  positive_basis(make_N_theta(Angle(1, 2)))};
  const auto t = tensor_observables(f);
  EXPECT_EQ(t.ambient_dim, 64u);
  ASSERT_EQ(t.effects.size(), 512u);
  CMatrix sum(64, 64);
  for (const auto& m : t.effects) sum += m;
  EXPECT_LT(sum.max_abs_diff(CMatrix::identity(64)), 1e-12);
  EXPECT_LT(t.effects[9].max_abs_diff(kron(kron(f[0].effects[0], f[1].effects[1]), f[2].effects[1])), 1e-15);
}

TEST(Indistinguishable, TripartiteCodeSpace) {
  const std::vector<Observable> f{positive_basis(make_N_theta(Angle(1, 3))), positive_basis(make_N_theta(Angle(1, 3))),
                                  positive_basis(make_N_theta(Angle(1, 3)))};
  const auto v = indistinguishable_check(tensor_observables(f), theorem_B_code(3));
  EXPECT_TRUE(v.pass);
  EXPECT_LT(v.kl.max_offdiag, 1e-12);
  EXPECT_LT(v.tv_spread, 1e-8);
  EXPECT_EQ(v.samples, 1000u);
}

TEST(Indistinguishable, SingleChannelSearchCertificateFails) {
  const auto sys = make_N_theta(Angle(1, 3));
  const auto rep = search_pair(sys, 16, 42);
  const auto v = indistinguishable_check(positive_basis(sys), rep.certificate);
  EXPECT_FALSE(v.pass);
  EXPECT_GT(v.tv_spread, v.kl.tol);
}

TEST(Indistinguishable, OneDimensionalSubspacePasses) {
  CounterRng rng(60, 0);
  const CodeCandidate one({rng.random_unit_vector(4)});
  const auto v = indistinguishable_check(positive_basis(make_N_theta(Angle(1, 6))), one);
  EXPECT_TRUE(v.pass);
  EXPECT_LT(v.tv_spread, 1e-14);
}

TEST(Indistinguishable, AgreesWithCodeVerification) {
  CounterRng rng(61, 0);
  int passes = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Angle t = kGrid[static_cast<std::size_t>(trial) % kGrid.size()];
    const auto obs = positive_basis(make_N_theta(t));
    CodeCandidate code;
    switch (trial % 3) {
      case 0:
        code = theorem_A_code();
        break;
      case 1: {
        // Phase-rotated certificate: still a code exactly when theta = pi.
        const auto a = theorem_A_code();
        code = CodeCandidate({std::polar(1.0, rng.uniform()) * a[0], std::polar(1.0, rng.uniform()) * a[1]});
        break;
      }
      default:
        code = CodeCandidate::orthonormalized({rng.random_vector(4), rng.random_vector(4)});
    }
    const auto v = indistinguishable_check(obs, code, kDefaultPassTol, 50, 7);
    const auto k = verify_code(OperatorSystem::from_basis(obs.effects), code);
    EXPECT_EQ(v.pass, k.pass) << t.to_string() << " trial " << trial;
    if (v.pass) {
      ++passes;
      EXPECT_LT(v.tv_spread, 10 * kDefaultPassTol);
    }
  }
  EXPECT_GT(passes, 0);
}

TEST(Indistinguishable, SerialMatchesParallel) {
  const auto obs = positive_basis(make_N_theta(Angle(1, 3)));
  CounterRng rng(62, 0);
  const auto code = CodeCandidate::orthonormalized({rng.random_vector(4), rng.random_vector(4)});
  const auto a = indistinguishable_check(obs, code, 1e-9, 200, 3, Exec::serial);
  const auto b = indistinguishable_check(obs, code, 1e-9, 200, 3, Exec::parallel);
  EXPECT_EQ(a.tv_spread, b.tv_spread);
  EXPECT_EQ(a.kl.max_offdiag, b.kl.max_offdiag);
}

TEST(Indistinguishable, DimensionMismatch) {
  EXPECT_THROW(indistinguishable_check(positive_basis(make_N_theta(Angle::pi())), theorem_B_code(2)), DimensionMismatch);
}
