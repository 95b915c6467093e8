// Copyright 2026 The Alibi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "alibi/bead_geometry.hpp"
#include "alibi/query_engine.hpp"
#include "support.hpp"

namespace alibi {
namespace {

const Bead kSymmetric = Bead::from_tuple(0, 0, 0, 2, 0, 0, 1);

TEST(ConeTest, BottomCone) {
  const Cone c{{0, 0, 0}, 1, Side::kBottom};
  EXPECT_TRUE(on_bottom_cone(c, {1, 1, 0}));
  EXPECT_FALSE(on_bottom_cone(c, {1, 0.5, 0}));
  EXPECT_FALSE(on_bottom_cone(c, {-1, 1, 0}));
  EXPECT_THROW(on_top_cone(c, {1, 1, 0}), std::invalid_argument);
}

TEST(ConeTest, TopCone) {
  const Cone c{{2, 0, 0}, 1, Side::kTop};
  EXPECT_TRUE(on_top_cone(c, {1, 0, 1}));
  EXPECT_FALSE(on_top_cone(c, {3, 0, 1}));
  EXPECT_THROW(on_bottom_cone(c, {1, 0, 1}), std::invalid_argument);
}

TEST(MantelTest, Examples) {
  EXPECT_TRUE(on_mantel(kSymmetric, {0.5, 0.5, 0}));
  EXPECT_TRUE(on_mantel(kSymmetric, {1, 1, 0}));
  EXPECT_FALSE(on_mantel(kSymmetric, {1, 0, 0}));
  EXPECT_TRUE(on_mantel(kSymmetric, {1.5, 0, 0.5}));
}

TEST(RimTest, Examples) {
  EXPECT_TRUE(on_rim(kSymmetric, {1, 1, 0}));
  EXPECT_TRUE(on_rim(kSymmetric, {1, 0, 1}));
  EXPECT_FALSE(on_rim(kSymmetric, {0.5, 0.5, 0}));
}

TEST(RimTest, PlaneSign) {
  const RimPlane plane = RimPlane::of(kSymmetric);
  EXPECT_NEAR(plane.evaluate({1, 1, 0}), 0, 1e-12);
  EXPECT_LT(plane.evaluate({0.5, 0, 0}), 0);
  EXPECT_GT(plane.evaluate({1.5, 0, 0}), 0);
}

TEST(HalfBeadTest, Examples) {
  EXPECT_TRUE(in_half_bead(kSymmetric, {0.5, 0, 0}, Side::kBottom));
  EXPECT_FALSE(in_half_bead(kSymmetric, {0.5, 0, 0}, Side::kTop));
  EXPECT_TRUE(in_half_bead(kSymmetric, {1, 1, 0}, Side::kBottom));
  EXPECT_TRUE(in_half_bead(kSymmetric, {1, 1, 0}, Side::kTop));
}

TEST(HalfBeadTest, HalvesCoverTheBead) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 5000; ++k) {
    const Bead b = random_nonempty_bead(rng);
    const TimeSpacePoint p{testing::uniform(rng, b.origin().t, b.destination().t),
                           testing::uniform(rng, -8, 8), testing::uniform(rng, -8, 8)};
    const bool lower = in_half_bead(b, p, Side::kBottom);
    const bool upper = in_half_bead(b, p, Side::kTop);
    EXPECT_EQ(lower || upper, bead_contains_point(b, p));
  }
}

// Rim points sampled from the circle where the two cones meet.
TEST(RimTest, RimPointsLieOnTheMantel) {
  std::mt19937_64 rng(32);
  int checked = 0;
  for (int k = 0; k < 500; ++k) {
    const Bead b = random_nonempty_bead(rng);
    if (b.duration() < 0.1 || b.vmax() < 0.1) continue;
    const double dx = b.destination().x - b.origin().x;
    const double dy = b.destination().y - b.origin().y;
    const double d = std::hypot(dx, dy);
    const double reach = b.vmax() * b.duration();
    if (d < 1e-6 || reach - d < 1e-3) continue;
    // Plane through the rim, restricted to the line through both apexes,
    // gives the two extreme rim points; the sphere-like parametrization
    // along the rim uses the angle about that line.
    const Tolerance tol = tolerance_for({&b});
    for (int s = 0; s < 16; ++s) {
      const double theta = 2 * std::numbers::pi * s / 16;
      // Solve for the rim point in direction theta from the origin apex by
      // bisection on the radius along the bottom cone.
      const double ux = std::cos(theta), uy = std::sin(theta);
      const RimPlane plane = RimPlane::of(b);
      auto at = [&](double r) {
        return TimeSpacePoint{b.origin().t + r / b.vmax(), b.origin().x + r * ux,
                              b.origin().y + r * uy};
      };
      double lo = 0, hi = reach;
      for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (plane.evaluate(at(mid)) < 0 ? lo : hi) = mid;
      }
      const TimeSpacePoint p = at(0.5 * (lo + hi));
      EXPECT_TRUE(on_rim(b, p, tol));
      EXPECT_TRUE(on_mantel(b, p, tol));
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(InitialContactTest, Examples) {
  const Cone c1{{0, 0, 0}, 1, Side::kBottom};
  const TimeSpacePoint p = initial_contact(c1, {{0, 2, 0}, 1, Side::kBottom});
  EXPECT_NEAR(p.t, 1, 1e-12);
  EXPECT_NEAR(p.x, 1, 1e-12);
  EXPECT_NEAR(p.y, 0, 1e-12);

  const Cone c2{{1, 3, 0}, 2, Side::kBottom};
  const TimeSpacePoint q = initial_contact(c1, c2);
  EXPECT_NEAR(q.t, 5.0 / 3, 1e-12);
  EXPECT_NEAR(q.x, 5.0 / 3, 1e-12);
  EXPECT_NEAR(q.y, 0, 1e-12);
  EXPECT_NEAR(cone_residual(c1, q), 0, 1e-9);
  EXPECT_NEAR(cone_residual(c2, q), 0, 1e-9);
}

TEST(InitialContactTest, Errors) {
  const Cone c1{{0, 0, 0}, 1, Side::kBottom};
  EXPECT_THROW(initial_contact(c1, {{1, 0, 0}, 1, Side::kBottom}), std::invalid_argument);
  EXPECT_THROW(initial_contact(c1, {{0, 2, 0}, 1, Side::kTop}), std::invalid_argument);
  EXPECT_THROW(initial_contact({{0, 0, 0}, 0, Side::kBottom}, {{0, 2, 0}, 0, Side::kBottom}),
               std::invalid_argument);
  // Apex (5, 1, 0) lies strictly inside the first cone.
  EXPECT_THROW(initial_contact(c1, {{5, 1, 0}, 1, Side::kBottom}), std::invalid_argument);
}

TEST(InitialContactTest, IdentitiesOnRandomCones) {
  std::mt19937_64 rng(33);
  int checked = 0;
  for (int k = 0; k < 5000; ++k) {
    const Cone c1{{testing::uniform(rng, -5, 5), testing::uniform(rng, -5, 5),
                   testing::uniform(rng, -5, 5)},
                  testing::uniform(rng, 0.1, 3), Side::kBottom};
    const Cone c2{{testing::uniform(rng, -5, 5), testing::uniform(rng, -5, 5),
                   testing::uniform(rng, -5, 5)},
                  testing::uniform(rng, 0.1, 3), Side::kBottom};
    const double d = std::hypot(c2.apex.x - c1.apex.x, c2.apex.y - c1.apex.y);
    // Skip configurations where one apex is inside the other cone.
    if (d < c1.vmax * std::abs(c2.apex.t - c1.apex.t) ||
        d < c2.vmax * std::abs(c2.apex.t - c1.apex.t)) {
      continue;
    }
    const TimeSpacePoint p = initial_contact(c1, c2);
    const double r1 = c1.vmax * (p.t - c1.apex.t);
    const double r2 = c2.vmax * (p.t - c2.apex.t);
    EXPECT_NEAR(std::hypot(p.x - c1.apex.x, p.y - c1.apex.y), r1, 1e-9 * (1 + d));
    EXPECT_NEAR(std::hypot(p.x - c2.apex.x, p.y - c2.apex.y), r2, 1e-9 * (1 + d));
    EXPECT_NEAR(d, r1 + r2, 1e-9 * (1 + d));

    // Mirror: top cones at reflected times touch at the reflected point.
    const Cone m1{{-c1.apex.t, c1.apex.x, c1.apex.y}, c1.vmax, Side::kTop};
    const Cone m2{{-c2.apex.t, c2.apex.x, c2.apex.y}, c2.vmax, Side::kTop};
    const TimeSpacePoint m = initial_contact(m1, m2);
    EXPECT_NEAR(m.t, -p.t, 1e-9 * (1 + std::abs(p.t)));
    EXPECT_NEAR(m.x, p.x, 1e-9 * (1 + d));
    EXPECT_NEAR(m.y, p.y, 1e-9 * (1 + d));
    ++checked;
  }
  EXPECT_GT(checked, 1000);
}

}  // namespace
}  // namespace alibi
