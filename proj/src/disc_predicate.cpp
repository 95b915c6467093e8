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

#include "alibi/disc_predicate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace alibi {

namespace {

double sq(double v) { return v * v; }

double area_tolerance(std::initializer_list<const Disc*> discs) {
  double lo_x = discs.begin()[0]->cx, hi_x = lo_x;
  double lo_y = discs.begin()[0]->cy, hi_y = lo_y;
  double r = 0.0;
  for (const Disc* d : discs) {
    lo_x = std::min(lo_x, d->cx);
    hi_x = std::max(hi_x, d->cx);
    lo_y = std::min(lo_y, d->cy);
    hi_y = std::max(hi_y, d->cy);
    r = std::max(r, d->r);
  }
  return kEpsilon * sq(std::max({hi_x - lo_x, hi_y - lo_y, r}));
}

bool two_discs_intersect(const Disc& a, const Disc& b) {
  const double d2 = sq(b.cx - a.cx) + sq(b.cy - a.cy);
  return d2 <= sq(a.r + b.r) + area_tolerance({&a, &b});
}

// Disc `base` (radius > 0) normalized to the unit circle at the origin and
// `partner` to center (x2, 0), x2 > 0. With x2^2, x2 * x3 and x2 * y3 taken
// from squared distance, dot and cross products, the test needs no roots:
//   W = (r2^2 - (x2 - 1)^2) ((1 + x2)^2 - r2^2) >= 0 and
//   (L <= 0 or L^2 <= (4 x2 y3)^2 W), with
//   L = (x2^2 + 1 - r2^2 - 2 x2 x3)^2 + W + (2 x2 y3)^2 - 4 x2^2 r3^2.
bool crossing_in_third(const Disc& base, const Disc& partner, const Disc& third) {
  const double r1 = base.r;
  const double px = partner.cx - base.cx;
  const double py = partner.cy - base.cy;
  const double qx = third.cx - base.cx;
  const double qy = third.cy - base.cy;
  const double r1s = r1 * r1;

  const double x2sq = (px * px + py * py) / r1s;
  const double x2x3 = (px * qx + py * qy) / r1s;
  const double x2y3 = (px * qy - py * qx) / r1s;
  const double r2sq = sq(partner.r / r1);
  const double r3sq = sq(third.r / r1);

  const double shift = r2sq - x2sq - 1.0;
  const double w = 4.0 * x2sq - shift * shift;
  const double w_slack = kEpsilon * (4.0 * x2sq + shift * shift);
  if (w < -w_slack) return false;
  const double w_clamped = std::max(w, 0.0);

  const double chord = sq(x2sq + 1.0 - r2sq - 2.0 * x2x3);
  const double lateral = 4.0 * x2y3 * x2y3;
  const double reach = 4.0 * x2sq * r3sq;
  const double l = chord + w_clamped + lateral - reach;
  const double l_slack = kEpsilon * (chord + std::abs(w) + lateral + reach);
  if (l <= l_slack) return true;
  const double rhs = 16.0 * x2y3 * x2y3 * w_clamped;
  return l * l <= rhs + kEpsilon * (l * l + rhs);
}

// Circles of a and b cross or touch, are not concentric, and neither disc
// strictly encloses the other.
bool circles_meet(const Disc& a, const Disc& b, double tol) {
  const double d2 = sq(b.cx - a.cx) + sq(b.cy - a.cy);
  return d2 > 0.0 && d2 <= sq(a.r + b.r) + tol && d2 >= sq(a.r - b.r) - tol;
}

}  // namespace

std::vector<Point2> circle_circle_intersection(const Disc& c1, const Disc& c2) {
  if (c1 == c2) throw std::invalid_argument("coincident");
  const double tol = area_tolerance({&c1, &c2});
  const double dx = c2.cx - c1.cx;
  const double dy = c2.cy - c1.cy;
  const double d2 = dx * dx + dy * dy;
  if (c1.r == 0.0 || c2.r == 0.0) {
    const Disc& point = c1.r == 0.0 ? c1 : c2;
    const Disc& circle = c1.r == 0.0 ? c2 : c1;
    if (std::abs(d2 - sq(circle.r)) <= tol) return {{point.cx, point.cy}};
    return {};
  }
  if (!circles_meet(c1, c2, tol)) return {};

  const double r1 = c1.r;
  const double d = std::sqrt(d2);
  const double x2 = d / r1;
  const double r2 = c2.r / r1;
  const double shift = r2 * r2 - x2 * x2 - 1.0;
  const double w = 4.0 * x2 * x2 - shift * shift;
  const double x = (x2 * x2 + 1.0 - r2 * r2) / (2.0 * x2);
  const double ux = dx / d;
  const double uy = dy / d;
  auto back = [&](double nx, double ny) {
    return Point2{c1.cx + r1 * (nx * ux - ny * uy), c1.cy + r1 * (nx * uy + ny * ux)};
  };
  const double y = std::sqrt(std::max(w, 0.0)) / (2.0 * x2);
  if (r1 * r1 * y * y <= tol) return {back(x, 0.0)};
  return {back(x, y), back(x, -y)};
}

bool three_discs_intersect(const Disc& d1, const Disc& d2, const Disc& d3) {
  if (d1 == d2) return two_discs_intersect(d1, d3);
  if (d1 == d3 || d2 == d3) return two_discs_intersect(d1, d2);

  const double tol = area_tolerance({&d1, &d2, &d3});
  const std::array<const Disc*, 3> discs{&d1, &d2, &d3};
  for (int i = 0; i < 3; ++i) {
    const Disc& self = *discs[i];
    const Point2 center{self.cx, self.cy};
    if (disc_contains(*discs[(i + 1) % 3], center, tol) &&
        disc_contains(*discs[(i + 2) % 3], center, tol)) {
      return true;
    }
  }
  for (int i = 0; i < 3; ++i) {
    const Disc& a = *discs[i];
    const Disc& b = *discs[(i + 1) % 3];
    const Disc& third = *discs[(i + 2) % 3];
    if (!circles_meet(a, b, tol)) continue;
    // The larger disc becomes the unit circle; a zero radius pair member is
    // a point, already covered by the center test.
    const Disc& base = a.r >= b.r ? a : b;
    const Disc& partner = a.r >= b.r ? b : a;
    if (base.r == 0.0) continue;
    if (crossing_in_third(base, partner, third)) return true;
  }
  return false;
}

bool four_discs_intersect(const Disc& d1, const Disc& d2, const Disc& d3,
                          const Disc& d4) {
  return three_discs_intersect(d1, d2, d3) && three_discs_intersect(d1, d2, d4) &&
         three_discs_intersect(d1, d3, d4) && three_discs_intersect(d2, d3, d4);
}

bool alibi_at_time(const Bead& b1, const Bead& b2, double t0) {
  if (!bead_nonempty(b1) || !bead_nonempty(b2)) return false;
  const auto s1 = time_slice(b1, t0);
  const auto s2 = time_slice(b2, t0);
  if (!s1 || !s2) return false;
  return four_discs_intersect(s1->first, s1->second, s2->first, s2->second);
}

}  // namespace alibi
