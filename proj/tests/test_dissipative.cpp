// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "relsemi/dissipative.hpp"
#include "relsemi/errors.hpp"
#include "relsemi/heat/dirichlet.hpp"
#include "relsemi/random.hpp"
#include "relsemi/spectral.hpp"
#include "support.hpp"

using namespace relsemi;
using namespace relsemi::testing;

TEST(Dissipative, NegativeIdentity) {
  const DissipativityCertificate c = is_dissipative_l2(LinearRelation::from_matrix(-Matrix::Identity(2, 2)));
  EXPECT_TRUE(c.passed);
  // Herm(U^H V) on the orthonormal basis (e_i, -e_i)/√2.
  EXPECT_NEAR(c.witness, -0.5, 1e-15);
}

TEST(Dissipative, PositiveIdentity) {
  const DissipativityCertificate c = is_dissipative_l2(LinearRelation::from_matrix(Matrix::Identity(2, 2)));
  EXPECT_FALSE(c.passed);
  EXPECT_NEAR(c.witness, 0.5, 1e-15);
}

TEST(Dissipative, CanonicalRelation) {
  const DissipativityCertificate c = is_dissipative_l2(canonical());
  EXPECT_TRUE(c.passed);
  EXPECT_LE(c.witness, 0.0);
}

TEST(Dissipative, SampledScalar) {
  const auto ok = is_dissipative_sampled(scalar(-1.0), Norm::sup, 100, {0.1, 1.0, 10.0});
  EXPECT_TRUE(ok.passed);
  EXPECT_GE(ok.witness, 0.0);
  const auto bad = is_dissipative_sampled(scalar(1.0), Norm::sup, 100, {1.0});
  EXPECT_FALSE(bad.passed);
}

TEST(Dissipative, SampledHeatInSupNorm) {
  const heat::Grid g = heat::Grid::box(0, 0, 1, 12);
  const LinearRelation a = heat::build_dirichlet_relation(heat::disk(g, 0, 0, 0.7));
  const auto c = is_dissipative_sampled(a, Norm::sup, 500, {0.1, 1.0, 10.0});
  EXPECT_TRUE(c.passed);
  EXPECT_EQ(c.samples, 500u);
}

TEST(Dissipative, SampledIsDeterministic) {
  Rng rng(3);
  const LinearRelation a = random_m_dissipative(4, Field::complex, rng);
  const auto c1 = is_dissipative_sampled(a, Norm::sup, 50, {1.0}, 7);
  const auto c2 = is_dissipative_sampled(a, Norm::sup, 50, {1.0}, 7);
  EXPECT_EQ(c1.witness, c2.witness);
  EXPECT_EQ(c1.duality_witness, c2.duality_witness);
}

TEST(Dissipative, MDissipative) {
  EXPECT_TRUE(is_m_dissipative(LinearRelation::from_matrix(-Matrix::Identity(3, 3))).m_dissipative);
  const auto nil = is_m_dissipative(LinearRelation::from_matrix(mat({{0, 1}, {0, 0}})));
  EXPECT_FALSE(nil.m_dissipative);
  // Herm(N) = [[0, .5], [.5, 0]] has top eigenvalue 0.5; on the orthonormal
  // graph basis (I + N^H N = diag(1, 2)) the witness is 0.5/√2.
  EXPECT_NEAR(nil.l2.witness, 0.35355339059327373, 1e-14);
  const auto can = is_m_dissipative(canonical());
  EXPECT_TRUE(can.m_dissipative);
  EXPECT_EQ(can.range_dim, 2);
}

TEST(Dissipative, LumerPhillips) {
  EXPECT_LE((lumer_phillips_invert(LinearRelation::from_matrix(-Matrix::Identity(2, 2))).inverse +
             Matrix::Identity(2, 2))
                .norm(),
            1e-15);
  const LumerPhillipsResult r = lumer_phillips_invert(canonical());
  EXPECT_LE((r.inverse - mat({{-1, 0}, {0, 0}})).norm(), 1e-15);
  EXPECT_TRUE(r.kernel_trivial);
  EXPECT_THROW(lumer_phillips_invert(LinearRelation::from_matrix(Matrix::Zero(2, 2))), NotSurjective);
  EXPECT_THROW(lumer_phillips_invert(LinearRelation::from_matrix(Matrix::Identity(2, 2))), NotDissipative);
}

TEST(Dissipative, MaximalExtensionOfZeroSubspace) {
  const LinearRelation b = maximal_dissipative_extension(LinearRelation::zero(1));
  EXPECT_LE(gap(b.graph(), scalar(-1.0).graph()), 1e-12);
  EXPECT_TRUE(is_m_dissipative(b).m_dissipative);
}

TEST(Dissipative, MaximalExtensionKeepsMDissipative) {
  const LinearRelation a = canonical();
  EXPECT_LE(gap(maximal_dissipative_extension(a).graph(), a.graph()), 1e-14);
}

TEST(Dissipative, MaximalExtensionOfPartialZero) {
  const LinearRelation a = LinearRelation::from_pairs(mat({{1}, {0}}), mat({{0}, {0}}));
  const LinearRelation b = maximal_dissipative_extension(a);
  const LinearRelation expected = LinearRelation::from_pairs(mat({{1, 0}, {0, 1}}), mat({{0, 0}, {0, -1}}));
  EXPECT_LE(gap(b.graph(), expected.graph()), 1e-14);
  EXPECT_TRUE(is_m_dissipative(b).m_dissipative);
}

TEST(Dissipative, ExtensionOnBatteryIsIdempotent) {
  Rng rng(44);
  for (int k = 0; k < 20; ++k) {
    const LinearRelation a = random_dissipative(1 + k % 5, k % 2 ? Field::complex : Field::real, rng);
    const LinearRelation b = maximal_dissipative_extension(a);
    EXPECT_TRUE(is_m_dissipative(b).m_dissipative);
    EXPECT_LE(gap(maximal_dissipative_extension(b).graph(), b.graph()), 1e-10);
  }
}

TEST(Dissipative, ContractiveResolventOnBattery) {
  Rng rng(45);
  for (int k = 0; k < 20; ++k) {
    const LinearRelation a = random_m_dissipative(1 + k % 6, k % 2 ? Field::complex : Field::real, rng);
    const auto ev = is_m_dissipative(a);
    EXPECT_TRUE(ev.m_dissipative);
    EXPECT_LE(ev.resolvent_bound, 1.0 + 1e-9);
  }
}
