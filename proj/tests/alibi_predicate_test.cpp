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
#include <random>

#include "alibi/alibi_predicate.hpp"
#include "alibi/oracle.hpp"
#include "alibi/query_engine.hpp"
#include "support.hpp"

namespace alibi {
namespace {

const Bead kLeft = Bead::from_tuple(0, 0, 0, 2, 0, 2, 1.9);
const Bead kRight = Bead::from_tuple(0, 3, 0, 2, 3, 2, 1.9);

void expect_point_near(const TimeSpacePoint& p, const TimeSpacePoint& q, double eps) {
  EXPECT_NEAR(p.t, q.t, eps);
  EXPECT_NEAR(p.x, q.x, eps);
  EXPECT_NEAR(p.y, q.y, eps);
}

TEST(SpeedPreservingMapTest, RotatingFrame) {
  const SpeedPreservingMap map({0, 0, 0}, {1, 2, 0}, true);
  EXPECT_DOUBLE_EQ(map.scale(), 2);
  expect_point_near(map.apply(TimeSpacePoint{1, 2, 0}), {2, 4, 0}, 1e-12);
}

TEST(SpeedPreservingMapTest, InverseRoundTrip) {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 1000; ++k) {
    const TimeSpacePoint from{testing::uniform(rng, -5, 5), testing::uniform(rng, -5, 5),
                              testing::uniform(rng, -5, 5)};
    const TimeSpacePoint to{testing::uniform(rng, -5, 5), testing::uniform(rng, -5, 5),
                            testing::uniform(rng, -5, 5)};
    const SpeedPreservingMap map(from, to, true);
    const TimeSpacePoint p{testing::uniform(rng, -5, 5), testing::uniform(rng, -5, 5),
                           testing::uniform(rng, -5, 5)};
    expect_point_near(map.invert(map.apply(p)), p, 1e-9);
    EXPECT_NEAR(map.apply(to).y, 0, 1e-9);
    EXPECT_GE(map.apply(to).x, 0);
  }
}

TEST(NormalizePairTest, Examples) {
  const Bead other = Bead::from_tuple(0, 5, 5, 1, 5, 5, 1);
  auto n = normalize_pair(Bead::from_tuple(0, 0, 0, 1, 3, 0, 4), other, Anchor::kFirst);
  EXPECT_FALSE(n.map.rotates());
  expect_point_near(n.anchor.destination(), {1, 3, 0}, 1e-12);

  n = normalize_pair(Bead::from_tuple(0, 0, 0, 1, 0, 2, 4), other, Anchor::kFirst);
  EXPECT_TRUE(n.map.rotates());
  expect_point_near(n.anchor.destination(), {2, 4, 0}, 1e-12);

  // Same y with the destination to the left still rotates, keeping x >= 0.
  n = normalize_pair(Bead::from_tuple(0, 0, 0, 1, -3, 0, 4), other, Anchor::kFirst);
  EXPECT_TRUE(n.map.rotates());
  EXPECT_GT(n.anchor.destination().x, 0);
}

TEST(NormalizePairTest, InvariantsAndErrors) {
  const auto n = normalize_pair(kLeft, kRight, Anchor::kSecond);
  expect_point_near(n.anchor.origin(), {0, 0, 0}, 1e-12);
  EXPECT_NEAR(n.anchor.destination().y, 0, 1e-12);
  EXPECT_GE(n.anchor.destination().x, 0);
  EXPECT_EQ(n.other.vmax(), kLeft.vmax());
  EXPECT_THROW(normalize_pair(Bead::from_tuple(1, 0, 0, 1, 0, 0, 1), kLeft, Anchor::kFirst),
               std::invalid_argument);
}

TEST(CaseITest, Examples) {
  const auto w = case_i(kLeft, kLeft);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, kLeft.origin());
  EXPECT_FALSE(case_i(kLeft, kRight));
  EXPECT_FALSE(case_i(kLeft, Bead::from_tuple(0, 100, 0, 2, 100, 2, 1.9)));
}

TEST(CaseIITest, TwinBeads) {
  const auto w = case_ii(kLeft, kRight);
  ASSERT_TRUE(w);
  const Tolerance tol = tolerance_for({&kLeft, &kRight});
  EXPECT_TRUE(bead_contains_point(kLeft, *w, tol));
  EXPECT_TRUE(bead_contains_point(kRight, *w, tol));
  EXPECT_FALSE(case_ii(kLeft, kLeft));
  EXPECT_FALSE(case_ii(kLeft, Bead::from_tuple(3, 3, 0, 4, 3, 2, 1.9)));
}

TEST(CaseIITest, CandidatesOnTwinBeads) {
  const auto ctx = make_case_ii_context(normalize_pair(kLeft, kRight, Anchor::kFirst),
                                        Side::kBottom);
  // Equal speeds cancel the quartic and cubic terms.
  EXPECT_LE(ctx.quartic.degree(), 2);
  const auto xs = rim_mantel_candidates(ctx);
  EXPECT_GE(xs.size(), 1u);
  EXPECT_LE(xs.size(), 2u);
}

TEST(CaseIITest, CandidatesMatchSweepOfTheRim) {
  // Independent check: walk the rim by angle and look for sign changes of
  // the other cone's residual.
  const auto pair = normalize_pair(kLeft, kRight, Anchor::kFirst);
  const auto ctx = make_case_ii_context(pair, Side::kBottom);
  const auto xs = rim_mantel_candidates(ctx);
  const Bead& a = pair.anchor;
  const RimPlane plane = RimPlane::of(a);
  int changes = 0;
  double prev = 0;
  for (int s = 0; s <= 4000; ++s) {
    const double theta = 2 * M_PI * s / 4000;
    auto at = [&](double r) {
      return TimeSpacePoint{r / a.vmax(), r * std::cos(theta), r * std::sin(theta)};
    };
    double lo = 0, hi = a.vmax() * a.duration();
    for (int i = 0; i < 100; ++i) {
      const double mid = 0.5 * (lo + hi);
      (plane.evaluate(at(mid)) < 0 ? lo : hi) = mid;
    }
    const double value = cone_residual(ctx.cone, at(lo));
    if (s > 0 && (value < 0) != (prev < 0)) {
      ++changes;
      const double x = at(lo).x;
      const bool close = std::any_of(xs.begin(), xs.end(),
                                     [&](double c) { return std::abs(c - x) < 1e-2; });
      EXPECT_TRUE(close) << "crossing at x=" << x;
    }
    prev = value;
  }
  EXPECT_GE(changes, 1);
}

TEST(CaseIITest, FarBeadsGiveNoCandidates) {
  const Bead far = Bead::from_tuple(0, 100, 0, 2, 100, 2, 1.9);
  const auto ctx =
      make_case_ii_context(normalize_pair(kLeft, far, Anchor::kFirst), Side::kBottom);
  EXPECT_TRUE(rim_mantel_candidates(ctx).empty());
}

TEST(CaseIITest, RimPointsSatisfyTheRimEquations) {
  const Bead b = Bead::from_tuple(0, 0, 0, 2, 2, 0, std::sqrt(2.0));
  const Bead other = Bead::from_tuple(0, 1, 3, 2, 1, 3, 1);
  const auto pair = normalize_pair(b, other, Anchor::kFirst);
  const auto ctx = make_case_ii_context(pair, Side::kBottom);
  const Tolerance tol = tolerance_for({&pair.anchor});
  for (double x : {-0.4, 0.0, 0.5, 1.0, 2.4}) {
    for (const auto& p : rim_point_from_x(ctx, x)) {
      EXPECT_TRUE(on_rim(pair.anchor, p, tol)) << x;
      EXPECT_NEAR(cone_residual(bottom_cone(pair.anchor), p), 0, 1e-9);
      EXPECT_NEAR(RimPlane::of(pair.anchor).evaluate(p), 0, 1e-9);
    }
  }
  EXPECT_THROW(rim_point_from_x(ctx, 50), std::domain_error);
}

TEST(CaseIITest, MirrorPointsAndExtremes) {
  const Bead b = Bead::from_tuple(0, 0, 0, 2, 2, 0, std::sqrt(2.0));
  const Bead on_axis = Bead::from_tuple(0, 5, 0, 2, 5, 0, 1);
  const auto ctx =
      make_case_ii_context(normalize_pair(b, on_axis, Anchor::kFirst), Side::kBottom);
  const auto pts = rim_point_from_x(ctx, 1.0);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_NEAR(pts[0].y, -pts[1].y, 1e-12);
  EXPECT_NE(pts[0].y, 0);

  const auto ends = real_roots(ctx.rim_support);
  ASSERT_EQ(ends.size(), 2u);
  for (double x : ends) {
    const auto tip = rim_point_from_x(ctx, x);
    ASSERT_EQ(tip.size(), 1u);
    EXPECT_NEAR(tip[0].y, 0, 1e-6);
  }
}

TEST(CaseIIITest, Examples) {
  const Bead a = Bead::from_tuple(0, 0, 0, 2, 0, 0, 1);
  const Bead b = Bead::from_tuple(0, 1.5, 0, 2, 1.5, 0, 1);
  const auto w = case_iii(a, b);
  ASSERT_TRUE(w);
  expect_point_near(*w, {0.75, 0.75, 0}, 1e-12);
  EXPECT_TRUE(bead_contains_point(a, *w));
  EXPECT_TRUE(bead_contains_point(b, *w));
  EXPECT_FALSE(case_iii(a, a));
  EXPECT_FALSE(case_iii(a, Bead::from_tuple(0, 10, 0, 2, 10, 0, 1)));
}

TEST(BeadsIntersectTest, Examples) {
  auto v = beads_intersect(kLeft, kRight);
  EXPECT_TRUE(v.intersects);
  EXPECT_EQ(v.fired_case, FiredCase::kII);
  v = beads_intersect(Bead::from_tuple(0, 0, 0, 1, 0, 0, 1),
                      Bead::from_tuple(10, 100, 100, 11, 100, 100, 1));
  EXPECT_FALSE(v.intersects);
  EXPECT_EQ(v.fired_case, FiredCase::kNone);
  EXPECT_FALSE(v.witness);

  const Bead a = Bead::from_tuple(0, 0, 0, 2, 0, 0, 1);
  const Bead b = Bead::from_tuple(0, 2, 0, 2, 2, 0, 1);
  v = beads_intersect(a, b);
  EXPECT_TRUE(v.intersects);
  ASSERT_TRUE(v.witness);
  expect_point_near(*v.witness, {1, 1, 0}, 1e-9);
}

TEST(BeadsIntersectTest, EmptyBeadsIntersectNothing) {
  const Bead empty = Bead::from_tuple(0, 0, 0, 1, 5, 0, 1);
  EXPECT_FALSE(beads_intersect(empty, empty).intersects);
  EXPECT_FALSE(beads_intersect(empty, kLeft).intersects);
}

TEST(BeadsIntersectTest, DegenerateBeads) {
  const Bead point = Bead::from_tuple(1, 0, 1, 1, 0, 1, 0);
  auto v = beads_intersect(point, kLeft);
  EXPECT_TRUE(v.intersects);
  EXPECT_EQ(v.fired_case, FiredCase::kI);
  EXPECT_FALSE(beads_intersect(Bead::from_tuple(1, 0, 5, 1, 0, 5, 1), kLeft).intersects);

  // Vertical segment through the side of the other bead.
  const Bead segment = Bead::from_tuple(-1, 1, 1, 3, 1, 1, 0);
  v = beads_intersect(segment, kLeft);
  EXPECT_TRUE(v.intersects);
  ASSERT_TRUE(v.witness);
  const Tolerance tol = tolerance_for({&segment, &kLeft});
  EXPECT_TRUE(bead_contains_point(kLeft, *v.witness, tol));
  EXPECT_TRUE(bead_contains_point(segment, *v.witness, tol));
  EXPECT_FALSE(beads_intersect(Bead::from_tuple(-1, 3, 3, 3, 3, 3, 0), kLeft).intersects);
}

TEST(BeadsIntersectTest, SegmentBeadsMatchOracle) {
  std::mt19937_64 rng(42);
  int decided = 0;
  for (int k = 0; k < 300; ++k) {
    const Bead other = random_nonempty_bead(rng);
    double t0 = testing::uniform(rng, -5, 5), t1 = testing::uniform(rng, -5, 5);
    if (t0 > t1) std::swap(t0, t1);
    const double x = testing::uniform(rng, -5, 5), y = testing::uniform(rng, -5, 5);
    const Bead seg = Bead::from_tuple(t0, x, y, t1, x, y, 0);
    const auto o = oracle_beads_intersect(seg, other, 64);
    if (o.unreliable(1e-6)) continue;
    ++decided;
    EXPECT_EQ(beads_intersect(seg, other).intersects, o.intersects);
    EXPECT_EQ(beads_intersect(other, seg).intersects, o.intersects);
  }
  EXPECT_GT(decided, 200);
}

TEST(BeadsIntersectTest, Reflexive) {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 1000; ++k) {
    const Bead b = random_nonempty_bead(rng);
    const auto v = beads_intersect(b, b);
    EXPECT_TRUE(v.intersects);
    EXPECT_EQ(v.fired_case, FiredCase::kI);
  }
}

TEST(BeadsIntersectTest, SymmetricAndSound) {
  std::mt19937_64 rng(44);
  for (int k = 0; k < 3000; ++k) {
    const Bead b1 = random_nonempty_bead(rng);
    const Bead b2 = random_nonempty_bead(rng);
    const auto v = beads_intersect(b1, b2);
    EXPECT_EQ(v.intersects, beads_intersect(b2, b1).intersects);
    EXPECT_EQ(v.intersects, v.fired_case != FiredCase::kNone);
    if (v.intersects) {
      ASSERT_TRUE(v.witness);
      const Tolerance tol = tolerance_for({&b1, &b2});
      EXPECT_TRUE(bead_contains_point(b1, *v.witness, tol));
      EXPECT_TRUE(bead_contains_point(b2, *v.witness, tol));
    }
  }
}

TEST(BeadsIntersectTest, InvariantUnderSimilarities) {
  std::mt19937_64 rng(45);
  for (int k = 0; k < 200; ++k) {
    const Bead b1 = random_nonempty_bead(rng);
    const Bead b2 = random_nonempty_bead(rng);
    const auto o = oracle_beads_intersect(b1, b2, 16);
    if (o.unreliable(1e-6)) continue;
    const bool base = beads_intersect(b1, b2).intersects;
    for (int j = 0; j < 20; ++j) {
      const auto map = testing::Similarity::random(rng);
      EXPECT_EQ(beads_intersect(map(b1), map(b2)).intersects, base);
    }
  }
}

// The reported case is the first of I, II, III (each with its guards) that
// produces a witness.
TEST(BeadsIntersectTest, FiredCaseIsFirstApplicable) {
  std::mt19937_64 rng(46);
  int seen[4] = {0, 0, 0, 0};
  for (int k = 0; k < 2000; ++k) {
    const Bead b1 = random_nonempty_bead(rng);
    const Bead b2 = random_nonempty_bead(rng);
    const auto v = beads_intersect(b1, b2);
    const bool i = case_i(b1, b2).has_value();
    const bool ii = case_ii(b1, b2).has_value();
    const bool iii = case_iii(b1, b2).has_value();
    FiredCase expected = FiredCase::kNone;
    if (i) {
      expected = FiredCase::kI;
    } else if (ii) {
      expected = FiredCase::kII;
    } else if (iii) {
      expected = FiredCase::kIII;
    }
    EXPECT_EQ(v.fired_case, expected);
    ++seen[static_cast<int>(v.fired_case)];
  }
  EXPECT_GT(seen[static_cast<int>(FiredCase::kII)], 0);
  EXPECT_GT(seen[static_cast<int>(FiredCase::kIII)], 0);
}

TEST(BeadsIntersectTest, TablePairsMatchOracle) {
  for (const auto& [b1, b2] : table_pairs()) {
    const auto o = oracle_beads_intersect(b1, b2);
    ASSERT_FALSE(o.unreliable(1e-6));
    EXPECT_EQ(beads_intersect(b1, b2).intersects, o.intersects);
  }
}

}  // namespace
}  // namespace alibi
