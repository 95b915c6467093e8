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

// Brute-force reference answers for the analytic predicates. Nothing here
// shares code with the case analysis or the disc formulas; the oracle only
// evaluates the defining inequalities at sampled points.
//
// The common quantity is the slack of a point p against a set of closed
// discs, min_i (r_i - |p - c_i|). It is concave in p and, for beads, jointly
// concave in (t, p), so sampling followed by golden-section refinement finds
// its maximum reliably.

#ifndef ALIBI_ORACLE_HPP
#define ALIBI_ORACLE_HPP

#include <cmath>
#include <cstddef>
#include <span>

#include "alibi/core_model.hpp"

namespace alibi {

struct OracleVerdict {
  bool intersects = false;
  /// Best slack found; negative when no common point was seen.
  double margin = 0.0;
  std::size_t samples_used = 0;

  /// Sampling cannot certify verdicts this close to tangency.
  bool unreliable(double band = kEpsilon) const { return std::abs(margin) < band; }
};

inline constexpr std::size_t kDefaultSlices = 2048;
inline constexpr std::size_t kDefaultGrid = 512;
inline constexpr std::size_t kSampleCap = std::size_t{1} << 20;

/// Samples `slices` instants over the common time slab, takes the best
/// four-disc slack at each, then refines around the best instant. Throws
/// std::invalid_argument when slices < 2.
OracleVerdict oracle_beads_intersect(const Bead& b1, const Bead& b2,
                                     std::size_t slices = kDefaultSlices);

/// Grid-samples the bounding box of the smallest disc, doubling the grid
/// while the best sample is inconclusive, then refines the best slack.
/// Throws std::invalid_argument unless 1 <= discs.size() <= 4 and grid >= 16.
OracleVerdict oracle_discs_intersect(std::span<const Disc> discs,
                                     std::size_t grid = kDefaultGrid);

/// Best slack over the plane: max_p min_i (r_i - |p - c_i|).
double best_disc_slack(std::span<const Disc> discs, std::size_t* evaluations = nullptr);

}  // namespace alibi

#endif  // ALIBI_ORACLE_HPP
