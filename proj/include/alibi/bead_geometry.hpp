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

#ifndef ALIBI_BEAD_GEOMETRY_HPP
#define ALIBI_BEAD_GEOMETRY_HPP

#include <optional>

#include "alibi/core_model.hpp"

namespace alibi {

enum class Side { kBottom, kTop };

/// Border of a filled cone: the circle around `apex` whose radius grows
/// (bottom) or shrinks (top) at `vmax` per time unit.
struct Cone {
  TimeSpacePoint apex;
  double vmax = 0.0;
  Side orientation = Side::kBottom;
};

inline Cone bottom_cone(const Bead& b) { return {b.origin(), b.vmax(), Side::kBottom}; }
inline Cone top_cone(const Bead& b) { return {b.destination(), b.vmax(), Side::kTop}; }

/// The plane through the rim of a bead, as a linear form in coordinates
/// relative to the bead origin:
///   at * (t - t_p) + ax * (x - x_p) + ay * (y - y_p) + a0.
/// The form equals (top-cone expression) - (bottom-cone expression), so it
/// is <= 0 on the bottom half-bead side and >= 0 on the top side.
struct RimPlane {
  TimeSpacePoint anchor;
  double at = 0.0;
  double ax = 0.0;
  double ay = 0.0;
  double a0 = 0.0;

  static RimPlane of(const Bead& b);

  double evaluate(const TimeSpacePoint& p) const {
    return at * (p.t - anchor.t) + ax * (p.x - anchor.x) + ay * (p.y - anchor.y) + a0;
  }
};

/// Signed cone-surface residual |xy - apex|^2 - v^2 (t - t_apex)^2.
double cone_residual(const Cone& c, const TimeSpacePoint& p);

/// Throws std::invalid_argument unless c is a bottom cone.
bool on_bottom_cone(const Cone& c, const TimeSpacePoint& p);
bool on_bottom_cone(const Cone& c, const TimeSpacePoint& p, const Tolerance& tol);
/// Throws std::invalid_argument unless c is a top cone.
bool on_top_cone(const Cone& c, const TimeSpacePoint& p);
bool on_top_cone(const Cone& c, const TimeSpacePoint& p, const Tolerance& tol);

bool on_mantel(const Bead& b, const TimeSpacePoint& p);
bool on_mantel(const Bead& b, const TimeSpacePoint& p, const Tolerance& tol);

bool on_rim(const Bead& b, const TimeSpacePoint& p);
bool on_rim(const Bead& b, const TimeSpacePoint& p, const Tolerance& tol);

bool in_half_bead(const Bead& b, const TimeSpacePoint& p, Side side);
bool in_half_bead(const Bead& b, const TimeSpacePoint& p, Side side,
                  const Tolerance& tol);

/// Closed-form point where the circles of two equally oriented cones first
/// (bottom) or last (top) touch. Returns nothing when the apexes share a
/// spatial location or both speeds are zero. Does not check that neither
/// apex lies inside the other cone.
std::optional<TimeSpacePoint> contact_point(const Cone& c1, const Cone& c2);

/// contact_point with its preconditions enforced. Throws
/// std::invalid_argument on mixed orientations, zero combined speed,
/// coincident apexes ("no unique contact direction"), or an apex strictly
/// inside the other cone.
TimeSpacePoint initial_contact(const Cone& c1, const Cone& c2);

}  // namespace alibi

#endif  // ALIBI_BEAD_GEOMETRY_HPP
