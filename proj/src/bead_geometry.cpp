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

#include "alibi/bead_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace alibi {

namespace {

double sq(double v) { return v * v; }

Tolerance cone_tolerance(const Cone& c, const TimeSpacePoint& p) {
  const double dt = std::abs(p.t - c.apex.t);
  const double length =
      std::max({std::abs(p.x - c.apex.x), std::abs(p.y - c.apex.y), c.vmax * dt});
  return Tolerance::for_extent(length, dt);
}

bool in_slab(const Bead& b, const TimeSpacePoint& p, const Tolerance& tol) {
  return b.origin().t - tol.time <= p.t && p.t <= b.destination().t + tol.time;
}

bool on_surface(const Cone& c, const TimeSpacePoint& p, const Tolerance& tol) {
  if (std::abs(cone_residual(c, p)) > tol.area) return false;
  return c.orientation == Side::kBottom ? c.apex.t - tol.time <= p.t
                                        : p.t <= c.apex.t + tol.time;
}

}  // namespace

RimPlane RimPlane::of(const Bead& b) {
  const auto& p = b.origin();
  const auto& q = b.destination();
  const double dx = q.x - p.x;
  const double dy = q.y - p.y;
  const double dt = q.t - p.t;
  const double v2 = sq(b.vmax());
  return {p, 2.0 * v2 * dt, -2.0 * dx, -2.0 * dy, dx * dx + dy * dy - v2 * dt * dt};
}

double cone_residual(const Cone& c, const TimeSpacePoint& p) {
  return sq(p.x - c.apex.x) + sq(p.y - c.apex.y) - sq(c.vmax * (p.t - c.apex.t));
}

bool on_bottom_cone(const Cone& c, const TimeSpacePoint& p) {
  return on_bottom_cone(c, p, cone_tolerance(c, p));
}

bool on_bottom_cone(const Cone& c, const TimeSpacePoint& p, const Tolerance& tol) {
  if (c.orientation != Side::kBottom) {
    throw std::invalid_argument("on_bottom_cone needs a bottom cone");
  }
  return on_surface(c, p, tol);
}

bool on_top_cone(const Cone& c, const TimeSpacePoint& p) {
  return on_top_cone(c, p, cone_tolerance(c, p));
}

bool on_top_cone(const Cone& c, const TimeSpacePoint& p, const Tolerance& tol) {
  if (c.orientation != Side::kTop) {
    throw std::invalid_argument("on_top_cone needs a top cone");
  }
  return on_surface(c, p, tol);
}

bool on_mantel(const Bead& b, const TimeSpacePoint& p) {
  return on_mantel(b, p, tolerance_for({&b}, {p}));
}

bool on_mantel(const Bead& b, const TimeSpacePoint& p, const Tolerance& tol) {
  if (!in_slab(b, p, tol)) return false;
  const double side = RimPlane::of(b).evaluate(p);
  return (side <= tol.area && on_surface(bottom_cone(b), p, tol)) ||
         (side >= -tol.area && on_surface(top_cone(b), p, tol));
}

bool on_rim(const Bead& b, const TimeSpacePoint& p) {
  return on_rim(b, p, tolerance_for({&b}, {p}));
}

bool on_rim(const Bead& b, const TimeSpacePoint& p, const Tolerance& tol) {
  return in_slab(b, p, tol) && on_surface(bottom_cone(b), p, tol) &&
         std::abs(RimPlane::of(b).evaluate(p)) <= tol.area;
}

bool in_half_bead(const Bead& b, const TimeSpacePoint& p, Side side) {
  return in_half_bead(b, p, side, tolerance_for({&b}, {p}));
}

bool in_half_bead(const Bead& b, const TimeSpacePoint& p, Side side,
                  const Tolerance& tol) {
  if (!in_slab(b, p, tol)) return false;
  const double plane = RimPlane::of(b).evaluate(p);
  if (side == Side::kBottom) {
    return plane <= tol.area && cone_residual(bottom_cone(b), p) <= tol.area &&
           p.t >= b.origin().t - tol.time;
  }
  return plane >= -tol.area && cone_residual(top_cone(b), p) <= tol.area &&
         p.t <= b.destination().t + tol.time;
}

std::optional<TimeSpacePoint> contact_point(const Cone& c1, const Cone& c2) {
  const double speed = c1.vmax + c2.vmax;
  const double ux = c2.apex.x - c1.apex.x;
  const double uy = c2.apex.y - c1.apex.y;
  const double dist = std::hypot(ux, uy);
  if (!(speed > 0.0) || !(dist > 0.0)) return std::nullopt;
  const auto& a1 = c1.apex;
  const auto& a2 = c2.apex;
  if (c1.orientation == Side::kBottom) {
    const double t = (dist + a1.t * c1.vmax + a2.t * c2.vmax) / speed;
    const double reach = c1.vmax * (t - a1.t) / dist;
    return TimeSpacePoint{t, a1.x + reach * ux, a1.y + reach * uy};
  }
  const double t = (a1.t * c1.vmax + a2.t * c2.vmax - dist) / speed;
  const double reach = c1.vmax * (a1.t - t) / dist;
  return TimeSpacePoint{t, a1.x + reach * ux, a1.y + reach * uy};
}

TimeSpacePoint initial_contact(const Cone& c1, const Cone& c2) {
  if (c1.orientation != c2.orientation) {
    throw std::invalid_argument("initial contact needs equally oriented cones");
  }
  if (!(c1.vmax + c2.vmax > 0.0)) {
    throw std::invalid_argument("initial contact needs a positive combined speed");
  }
  const double d2 = sq(c2.apex.x - c1.apex.x) + sq(c2.apex.y - c1.apex.y);
  if (!(d2 > 0.0)) {
    throw std::invalid_argument("no unique contact direction");
  }
  // Apex strictly inside the other filled cone (same temporal direction and
  // strictly within reach). Touching the surface is allowed.
  const double dt = c2.apex.t - c1.apex.t;
  const bool bottom = c1.orientation == Side::kBottom;
  const double slack = kEpsilon * std::max(d2, sq(std::max(c1.vmax, c2.vmax) * dt));
  const bool second_in_first = (bottom ? dt > 0.0 : dt < 0.0) && d2 < sq(c1.vmax * dt) - slack;
  const bool first_in_second = (bottom ? dt < 0.0 : dt > 0.0) && d2 < sq(c2.vmax * dt) - slack;
  if (second_in_first || first_in_second) {
    throw std::invalid_argument("an apex lies inside the other cone");
  }
  return *contact_point(c1, c2);
}

}  // namespace alibi
