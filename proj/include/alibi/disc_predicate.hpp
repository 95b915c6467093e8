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

#ifndef ALIBI_DISC_PREDICATE_HPP
#define ALIBI_DISC_PREDICATE_HPP

#include <vector>

#include "alibi/core_model.hpp"

namespace alibi {

/// Two circles and their squared center distance.
struct CirclePair {
  Disc first;
  Disc second;

  double center_distance2() const {
    const double dx = second.cx - first.cx;
    const double dy = second.cy - first.cy;
    return dx * dx + dy * dy;
  }
};

/// Points shared by the two bounding circles: none (disjoint or strictly
/// nested), one (tangent) or two. Throws std::invalid_argument "coincident"
/// when the circles are identical.
std::vector<Point2> circle_circle_intersection(const Disc& c1, const Disc& c2);

/// Closed discs d1, d2, d3 share a point iff some center lies in the other
/// two discs, or some pair of bounding circles crosses at a point of the
/// remaining disc. The crossing test is decided on squared quantities only.
bool three_discs_intersect(const Disc& d1, const Disc& d2, const Disc& d3);

/// Helly: four planar convex sets meet iff every three of them do.
bool four_discs_intersect(const Disc& d1, const Disc& d2, const Disc& d3,
                          const Disc& d4);

/// Whether the two beads overlap at the instant t0: the two slice discs of
/// each bead share a point. False when t0 is outside either time slab or
/// either bead is empty.
bool alibi_at_time(const Bead& b1, const Bead& b2, double t0);

}  // namespace alibi

#endif  // ALIBI_DISC_PREDICATE_HPP
