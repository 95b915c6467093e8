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

// Exact bead-vs-bead intersection by case analysis.
//
// Two nonempty beads intersect iff one of three tests produces a witness:
//
//   I   an apex of one bead lies in the other bead;
//   II  the rim of one bead meets a half of the other bead's mantel. In a
//       frame where the rim's bead starts at the origin and ends on the
//       positive x-axis, the rim is parametrized by x, and meeting the other
//       cone reduces to a polynomial of degree at most four in x;
//   III the initial contact of the two bottom cones, or of the two top cones,
//       lies in both beads.
//
// Every test is constant time. Witnesses are reported in the caller's
// coordinates.

#ifndef ALIBI_ALIBI_PREDICATE_HPP
#define ALIBI_ALIBI_PREDICATE_HPP

#include <optional>
#include <vector>

#include "alibi/bead_geometry.hpp"
#include "alibi/core_model.hpp"
#include "alibi/polyroots.hpp"

namespace alibi {

/// Translation, spatial rotation and uniform time-space scaling taking
/// `from` to the origin and `to` onto the line y = 0. Speeds are preserved.
class SpeedPreservingMap {
 public:
  /// With `rotate` false the map is the plain translation by -from.
  /// Otherwise space is multiplied by the matrix [[dx, dy], [-dy, dx]] and
  /// time by |(dx, dy)|, where (dx, dy) = to.xy - from.xy, which must be
  /// nonzero.
  SpeedPreservingMap(const TimeSpacePoint& from, const TimeSpacePoint& to, bool rotate);

  TimeSpacePoint apply(const TimeSpacePoint& p) const;
  TimeSpacePoint invert(const TimeSpacePoint& p) const;
  Bead apply(const Bead& b) const;

  bool rotates() const { return rotate_; }
  double scale() const { return scale_; }

 private:
  TimeSpacePoint from_;
  double dx_ = 1.0;
  double dy_ = 0.0;
  double scale_ = 1.0;
  bool rotate_ = false;
};

enum class Anchor { kFirst, kSecond };

/// Both beads expressed in the frame of the anchor bead: the anchor origin
/// sits at (0, 0, 0) and its destination at (T, X, 0) with X >= 0.
struct NormalizedPair {
  Bead anchor;
  Bead other;
  SpeedPreservingMap map;
  Tolerance tol;
};

/// The frame rotates and scales unless the anchor's apexes already share y
/// with the destination at non-negative x offset, in which case it only
/// translates. Throws std::invalid_argument when the anchor bead has
/// t_p == t_q.
NormalizedPair normalize_pair(const Bead& b1, const Bead& b2, Anchor anchor);

/// Rim of the normalized anchor bead against one half of the other bead's
/// mantel. The rim point at abscissa x has
///   t(x) = (2 x X - X^2 + v^2 T^2) / (2 v^2 T),   y^2 = rim_support(x),
/// with rim_support(x) = v^2 t(x)^2 - x^2. Substituting into the other cone
/// (apex (t3, x3, y3), speed w) leaves
///   2 y3 y = lift(x) := -2 x x3 + x3^2 + y3^2 + v^2 t(x)^2 - w^2 (t(x) - t3)^2,
/// whose square gives quartic(x) = lift^2 - 4 y3^2 rim_support = 0.
struct CaseIIContext {
  double rim_duration = 0.0;  // T
  double rim_reach = 0.0;     // X
  double rim_speed = 0.0;     // v
  Cone cone;
  Side target = Side::kBottom;
  Bead other;
  Poly4 quartic;
  Poly4 rim_support;
  Poly4 lift;
  Tolerance tol;

  double time_at(double x) const;
};

/// Requires a positive anchor speed and duration; throws
/// std::invalid_argument otherwise.
CaseIIContext make_case_ii_context(const NormalizedPair& pair, Side target);

/// Real roots of the quartic at which the rim exists.
std::vector<double> rim_mantel_candidates(const CaseIIContext& ctx);

/// Rim points at abscissa x (normalized frame). When the cone apex is off the
/// x-axis the sign of y follows `lift`; otherwise, or when lift vanishes,
/// both mirror points are returned. A single point is returned where the rim
/// is tangent to the vertical line. Throws std::domain_error when x is
/// outside the rim's support.
std::vector<TimeSpacePoint> rim_point_from_x(const CaseIIContext& ctx, double x);

std::optional<TimeSpacePoint> case_i(const Bead& b1, const Bead& b2);
std::optional<TimeSpacePoint> case_ii(const Bead& b1, const Bead& b2);
std::optional<TimeSpacePoint> case_iii(const Bead& b1, const Bead& b2);

/// Total intersection predicate. Empty beads intersect nothing; beads with
/// disjoint time slabs are rejected before any case logic. Point beads and
/// zero-speed beads take a direct convex test.
AlibiVerdict beads_intersect(const Bead& b1, const Bead& b2);

}  // namespace alibi

#endif  // ALIBI_ALIBI_PREDICATE_HPP
