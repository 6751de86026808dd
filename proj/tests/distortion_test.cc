// Copyright 2026 The chromasub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "chromasub/distortion.h"
#include "chromasub/solver.h"
#include "test_support.h"

namespace chromasub {
namespace {

NeighborChroma uniform_neighbors(double u, double v) {
  const ChromaPair p{u, v};
  return {p, p, p, p, p, p, p, p};
}

TEST(ResidualTest, WeightsFollowBilinearGeometry) {
  NeighborChroma n = uniform_neighbors(0, 0);
  n.tl = {16, 0};
  n.t = {0, 16};
  const ResidualTerms r = residual_terms(n);
  EXPECT_DOUBLE_EQ(r.ubar[0], 1.0);
  EXPECT_DOUBLE_EQ(r.vbar[0], 3.0);
  EXPECT_DOUBLE_EQ(r.ubar[1], 0.0);
  EXPECT_DOUBLE_EQ(r.vbar[1], 3.0);
  EXPECT_DOUBLE_EQ(r.ubar[2], 0.0);
  EXPECT_DOUBLE_EQ(r.vbar[3], 0.0);
}

TEST(ResidualTest, ConstantNeighboursGiveSevenSixteenths) {
  const ResidualTerms r = residual_terms(uniform_neighbors(128, 64));
  for (int i = 0; i < 4; ++i) {
    EXPECT_DOUBLE_EQ(r.ubar[i], 7.0 / 16.0 * 128);
    EXPECT_DOUBLE_EQ(r.vbar[i], 7.0 / 16.0 * 64);
  }
}

TEST(ResidualTest, EstimatesMatchInterpolationOnSiteGrid) {
  testing::Rng rng(1);
  for (const CfaPattern& pattern : all_patterns()) {
    for (int trial = 0; trial < 100; ++trial) {
      const BlockContext ctx = testing::wild_context(rng, pattern);
      const DistortionModel model = build_model(ctx);
      const double us = rng.uniform(0, 255), vs = rng.uniform(0, 255);
      const auto est = testing::estimates_by_interpolation(ctx, us, vs);
      for (int i = 0; i < 4; ++i) {
        const ChromaPair e = model.estimate(i, us, vs);
        EXPECT_NEAR(e.u, est[i][0], 1e-9);
        EXPECT_NEAR(e.v, est[i][1], 1e-9);
      }
    }
  }
}

TEST(DistortionTest, TermCountsPerKind) {
  EXPECT_EQ(pattern_for(CfaKind::kRgb).terms_per_block(), 12u);
  EXPECT_EQ(pattern_for(CfaKind::kBayer, "c").terms_per_block(), 4u);
  EXPECT_EQ(pattern_for(CfaKind::kDtdi, "b").terms_per_block(), 8u);
}

TEST(DistortionTest, ZeroWhenNeighboursAndTargetAgree) {
  for (const CfaPattern& pattern : all_patterns()) {
    BlockContext ctx;
    ctx.pattern = pattern;
    ctx.neighbors = uniform_neighbors(100, 150);
    ctx.u.fill(100);
    ctx.v.fill(150);
    const DistortionModel model = build_model(ctx);
    EXPECT_NEAR(model.evaluate(100, 150), 0.0, 1e-18) << pattern.name();
    EXPECT_GT(model.evaluate(101, 150), 0.0);
    const ChromaPair cf = closed_form(model);
    EXPECT_NEAR(cf.u, 100, 1e-9);
    EXPECT_NEAR(cf.v, 150, 1e-9);
  }
}

TEST(DistortionTest, BayerAMatchesChannelByChannelExpansion) {
  testing::Rng rng(2);
  const CfaPattern pattern = pattern_for(CfaKind::kBayer, "a");
  for (int trial = 0; trial < 500; ++trial) {
    const BlockContext ctx = testing::wild_context(rng, pattern);
    const DistortionModel model = build_model(ctx);
    const int u = rng.integer(0, 255), v = rng.integer(0, 255);
    const double want = testing::bayer_a_distortion(ctx, u, v);
    EXPECT_NEAR(model.evaluate(u, v), want, 1e-9 * (1 + want));
  }
}

TEST(DistortionTest, MatchesOracleForEveryPattern) {
  testing::Rng rng(3);
  for (const CfaPattern& pattern : all_patterns()) {
    for (int trial = 0; trial < 300; ++trial) {
      const BlockContext ctx = testing::wild_context(rng, pattern);
      const DistortionModel model = build_model(ctx);
      const double u = rng.uniform(-50, 300), v = rng.uniform(-50, 300);
      const double want = testing::oracle_distortion(ctx, u, v);
      EXPECT_NEAR(model.evaluate(u, v), want, 1e-9 * (1 + want)) << pattern.name();
    }
  }
}

TEST(DistortionTest, GradientMatchesFiniteDifferences) {
  testing::Rng rng(4);
  for (const CfaPattern& pattern : all_patterns()) {
    for (int trial = 0; trial < 200; ++trial) {
      const BlockContext ctx = testing::wild_context(rng, pattern);
      const DistortionModel model = build_model(ctx);
      const double u = rng.uniform(0, 255), v = rng.uniform(0, 255);
      const auto [gu, gv] = model.gradient(u, v);
      const auto [fu, fv] = testing::finite_difference_gradient(ctx, u, v);
      EXPECT_NEAR(gu, fu, 1e-5 * (1 + std::abs(gu)));
      EXPECT_NEAR(gv, fv, 1e-5 * (1 + std::abs(gv)));
    }
  }
}

TEST(HessianTest, DeterminantConstantsPerKind) {
  for (const CfaPattern& pattern : all_patterns()) {
    double want = 0.0;
    switch (pattern.kind) {
      case CfaKind::kRgb: want = 86.2040; break;
      case CfaKind::kBayer: want = 6.6216; break;
      case CfaKind::kDtdi: want = 26.4863; break;
    }
    EXPECT_NEAR(hessian_det(pattern), want, 1e-3) << pattern.name();
    EXPECT_GT(hessian_uu(pattern), 0.0);
  }
}

TEST(HessianTest, DeterminantMatchesSecondDifferences) {
  testing::Rng rng(5);
  for (const CfaPattern& pattern : all_patterns()) {
    const BlockContext ctx = testing::wild_context(rng, pattern);
    // The model is exactly quadratic, so unit second differences are exact.
    auto d = [&](double u, double v) { return testing::oracle_distortion(ctx, u, v); };
    const double u = 120, v = 90;
    const double huu = d(u + 1, v) - 2 * d(u, v) + d(u - 1, v);
    const double hvv = d(u, v + 1) - 2 * d(u, v) + d(u, v - 1);
    const double huv =
        (d(u + 1, v + 1) - d(u + 1, v - 1) - d(u - 1, v + 1) + d(u - 1, v - 1)) / 4;
    EXPECT_NEAR(huu, hessian_uu(pattern), 1e-6);
    EXPECT_NEAR(huu * hvv - huv * huv, hessian_det(pattern), 1e-5) << pattern.name();
  }
}

TEST(ClosedFormTest, AgreesWithLeastSquaresSolve) {
  testing::Rng rng(6);
  for (const CfaPattern& pattern : all_patterns()) {
    for (int trial = 0; trial < 300; ++trial) {
      const BlockContext ctx = testing::wild_context(rng, pattern);
      const ChromaPair cf = closed_form(build_model(ctx));
      const ChromaPair ls = testing::least_squares_minimizer(ctx);
      EXPECT_NEAR(cf.u, ls.u, 1e-8 * (1 + std::abs(ls.u))) << pattern.name();
      EXPECT_NEAR(cf.v, ls.v, 1e-8 * (1 + std::abs(ls.v))) << pattern.name();
    }
  }
}

TEST(ClosedFormTest, GradientVanishesAtMinimizer) {
  testing::Rng rng(7);
  for (const CfaPattern& pattern : all_patterns()) {
    const BlockContext ctx = testing::wild_context(rng, pattern);
    const DistortionModel model = build_model(ctx);
    const ChromaPair cf = closed_form(model);
    const auto [gu, gv] = model.gradient(cf.u, cf.v);
    const auto [g0u, g0v] = model.gradient(0, 0);
    EXPECT_LE(std::hypot(gu, gv) / (1 + std::hypot(g0u, g0v)), 1e-6);
  }
}

TEST(ClosedFormTest, ShiftingEverythingShiftsTheMinimizer) {
  testing::Rng rng(8);
  for (const CfaPattern& pattern : all_patterns()) {
    const BlockContext ctx = testing::wild_context(rng, pattern);
    BlockContext shifted = ctx;
    const double du = rng.uniform(-20, 20), dv = rng.uniform(-20, 20);
    for (int i = 0; i < 4; ++i) {
      shifted.u[i] += du;
      shifted.v[i] += dv;
    }
    for (ChromaPair* p : {&shifted.neighbors.tl, &shifted.neighbors.t, &shifted.neighbors.tr,
                          &shifted.neighbors.l, &shifted.neighbors.r, &shifted.neighbors.bl,
                          &shifted.neighbors.b, &shifted.neighbors.br}) {
      p->u += du;
      p->v += dv;
    }
    const ChromaPair a = closed_form(build_model(ctx));
    const ChromaPair b = closed_form(build_model(shifted));
    EXPECT_NEAR(b.u - a.u, du, 1e-8);
    EXPECT_NEAR(b.v - a.v, dv, 1e-8);
  }
}

TEST(ClosedFormTest, RealMinimumBoundsTheLatticeMinimum) {
  testing::Rng rng(9);
  for (const CfaPattern& pattern : all_patterns()) {
    for (int trial = 0; trial < 20; ++trial) {
      const BlockContext ctx = testing::random_context(rng, pattern);
      const DistortionModel model = build_model(ctx);
      const ChromaPair cf = closed_form(model);
      EXPECT_LE(model.evaluate(cf.u, cf.v), brute_force(model).distortion + 1e-9);
    }
  }
}

TEST(ConvexityTest, JensenInequalityOnRandomSegments) {
  testing::Rng rng(10);
  for (const CfaPattern& pattern : all_patterns()) {
    for (int trial = 0; trial < 500; ++trial) {
      const DistortionModel model = build_model(testing::wild_context(rng, pattern));
      const double u1 = rng.uniform(0, 255), v1 = rng.uniform(0, 255);
      const double u2 = rng.uniform(0, 255), v2 = rng.uniform(0, 255);
      const double t = rng.uniform(0, 1);
      const double lhs = model.evaluate(t * u1 + (1 - t) * u2, t * v1 + (1 - t) * v2);
      const double rhs = t * model.evaluate(u1, v1) + (1 - t) * model.evaluate(u2, v2);
      EXPECT_LE(lhs, rhs + 1e-9 * (1 + std::abs(rhs)));
    }
  }
}

TEST(ModelTest, SingularPatternIsRejected) {
  // Green-only pixels leave a one-dimensional chroma direction unobserved.
  CfaPattern green = pattern_for(CfaKind::kBayer, "a");
  green.color_sets = {ColorSet{Channel::kG}, ColorSet{Channel::kG},
                      ColorSet{Channel::kG}, ColorSet{Channel::kG}};
  BlockContext ctx;
  ctx.pattern = green;
  EXPECT_THROW(build_model(ctx), ModelError);
}

}  // namespace
}  // namespace chromasub
