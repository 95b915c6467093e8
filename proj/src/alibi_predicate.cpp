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

#include "alibi/alibi_predicate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace alibi {

namespace {

double sq(double v) { return v * v; }

// c0 + c1 x + c2 x^2
struct Quad {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
};

Poly4 as_poly(const Quad& q) { return {0.0, 0.0, q.c2, q.c1, q.c0}; }

Poly4 product(const Quad& p, const Quad& q) {
  return {p.c2 * q.c2, p.c2 * q.c1 + p.c1 * q.c2, p.c2 * q.c0 + p.c1 * q.c1 + p.c0 * q.c2,
          p.c1 * q.c0 + p.c0 * q.c1, p.c0 * q.c0};
}

Poly4 operator-(const Poly4& p, const Poly4& q) {
  return {p.a - q.a, p.b - q.b, p.c - q.c, p.d - q.d, p.e - q.e};
}

Poly4 operator*(double s, const Poly4& p) {
  return {s * p.a, s * p.b, s * p.c, s * p.d, s * p.e};
}

// Root tolerance for the rim/cone quartic: generous enough that tangential
// contacts surface as candidates; back-substitution decides.
constexpr double kCandidateNoise = 1e-9;

bool nondegenerate(const Bead& b) { return b.duration() > 0.0 && b.vmax() > 0.0; }

Tolerance pair_tolerance(const Bead& b1, const Bead& b2) {
  return tolerance_for({&b1, &b2});
}

std::optional<TimeSpacePoint> first_apex_inside(const Bead& b1, const Bead& b2,
                                                const Tolerance& tol) {
  for (const auto& p : {b2.origin(), b2.destination()}) {
    if (bead_contains_point(b1, p, tol)) return p;
  }
  for (const auto& p : {b1.origin(), b1.destination()}) {
    if (bead_contains_point(b2, p, tol)) return p;
  }
  return std::nullopt;
}

// A rim point of the context's anchor bead lying on the targeted half of the
// other bead's mantel.
bool on_target_half(const CaseIIContext& ctx, const TimeSpacePoint& p) {
  const auto& tol = ctx.tol;
  if (p.t < -tol.time || p.t > ctx.rim_duration + tol.time) return false;
  if (std::abs(cone_residual(ctx.cone, p)) > tol.area) return false;
  if (p.t < ctx.other.origin().t - tol.time || p.t > ctx.other.destination().t + tol.time) {
    return false;
  }
  const double side = RimPlane::of(ctx.other).evaluate(p);
  return ctx.target == Side::kBottom ? side <= tol.area : side >= -tol.area;
}

std::optional<TimeSpacePoint> rim_meets_mantel(const NormalizedPair& pair) {
  for (Side side : {Side::kBottom, Side::kTop}) {
    const CaseIIContext ctx = make_case_ii_context(pair, side);
    for (double x : rim_mantel_candidates(ctx)) {
      for (const auto& p : rim_point_from_x(ctx, x)) {
        if (on_target_half(ctx, p)) return pair.map.invert(p);
      }
    }
  }
  return std::nullopt;
}

std::optional<TimeSpacePoint> case_ii_unguarded(const Bead& b1, const Bead& b2) {
  if (auto w = rim_meets_mantel(normalize_pair(b1, b2, Anchor::kFirst))) return w;
  return rim_meets_mantel(normalize_pair(b1, b2, Anchor::kSecond));
}

std::optional<TimeSpacePoint> case_iii_unguarded(const Bead& b1, const Bead& b2,
                                                 const Tolerance& tol) {
  const RimPlane plane1 = RimPlane::of(b1);
  const RimPlane plane2 = RimPlane::of(b2);
  const double lo = std::max(b1.origin().t, b2.origin().t) - tol.time;
  const double hi = std::min(b1.destination().t, b2.destination().t) + tol.time;
  for (Side side : {Side::kBottom, Side::kTop}) {
    const auto ic = side == Side::kBottom
                        ? contact_point(bottom_cone(b1), bottom_cone(b2))
                        : contact_point(top_cone(b1), top_cone(b2));
    if (!ic || ic->t < lo || ic->t > hi) continue;
    const double s1 = plane1.evaluate(*ic);
    const double s2 = plane2.evaluate(*ic);
    const bool same_half = side == Side::kBottom
                               ? s1 <= tol.area && s2 <= tol.area
                               : s1 >= -tol.area && s2 >= -tol.area;
    if (same_half) return ic;
  }
  return std::nullopt;
}

// `seg` has zero speed, so it is the vertical segment above its origin.
std::optional<TimeSpacePoint> segment_meets_bead(const Bead& seg, const Bead& other,
                                                 const Tolerance& tol) {
  const double a = std::max(seg.origin().t, other.origin().t);
  const double b = std::min(seg.destination().t, other.destination().t);
  if (a > b) return std::nullopt;
  const Point2 at{seg.origin().x, seg.origin().y};
  std::vector<double> times{a, b};
  if (other.vmax() > 0.0) {
    const double entry = other.origin().t + std::hypot(at.x - other.origin().x,
                                                       at.y - other.origin().y) /
                                                other.vmax();
    times.push_back(std::clamp(entry, a, b));
  }
  for (double t : times) {
    const auto slice = time_slice(other, t);
    if (!slice) continue;
    if (disc_contains(slice->first, at, tol.area) &&
        disc_contains(slice->second, at, tol.area)) {
      return TimeSpacePoint{t, at.x, at.y};
    }
  }
  return std::nullopt;
}

}  // namespace

SpeedPreservingMap::SpeedPreservingMap(const TimeSpacePoint& from,
                                       const TimeSpacePoint& to, bool rotate)
    : from_(from), rotate_(rotate) {
  if (rotate) {
    dx_ = to.x - from.x;
    dy_ = to.y - from.y;
    scale_ = std::hypot(dx_, dy_);
    if (!(scale_ > 0.0)) {
      throw std::invalid_argument("rotation needs spatially distinct points");
    }
  }
}

TimeSpacePoint SpeedPreservingMap::apply(const TimeSpacePoint& p) const {
  const double t = p.t - from_.t;
  const double x = p.x - from_.x;
  const double y = p.y - from_.y;
  if (!rotate_) return {t, x, y};
  return {t * scale_, x * dx_ + y * dy_, -x * dy_ + y * dx_};
}

TimeSpacePoint SpeedPreservingMap::invert(const TimeSpacePoint& p) const {
  if (!rotate_) return {p.t + from_.t, p.x + from_.x, p.y + from_.y};
  const double s2 = scale_ * scale_;
  return {p.t / scale_ + from_.t, (p.x * dx_ - p.y * dy_) / s2 + from_.x,
          (p.x * dy_ + p.y * dx_) / s2 + from_.y};
}

Bead SpeedPreservingMap::apply(const Bead& b) const {
  return Bead(apply(b.origin()), apply(b.destination()), b.vmax());
}

NormalizedPair normalize_pair(const Bead& b1, const Bead& b2, Anchor anchor) {
  const Bead& a = anchor == Anchor::kFirst ? b1 : b2;
  const Bead& o = anchor == Anchor::kFirst ? b2 : b1;
  if (!(a.duration() > 0.0)) {
    throw std::invalid_argument("anchor bead needs distinct apex times");
  }
  const bool aligned = a.destination().y == a.origin().y &&
                       a.destination().x >= a.origin().x;
  SpeedPreservingMap map(a.origin(), a.destination(), !aligned);
  Bead na = map.apply(a);
  Bead no = map.apply(o);
  const Tolerance tol = tolerance_for({&na, &no});
  return {na, no, map, tol};
}

double CaseIIContext::time_at(double x) const {
  const double k = 2.0 * sq(rim_speed) * rim_duration;
  return (2.0 * x * rim_reach - sq(rim_reach) + sq(rim_speed * rim_duration)) / k;
}

CaseIIContext make_case_ii_context(const NormalizedPair& pair, Side target) {
  const double T = pair.anchor.destination().t;
  const double X = pair.anchor.destination().x;
  const double v = pair.anchor.vmax();
  if (!(T > 0.0) || !(v > 0.0)) {
    throw std::invalid_argument("rim parametrization needs positive speed and duration");
  }
  CaseIIContext ctx{
      .rim_duration = T,
      .rim_reach = X,
      .rim_speed = v,
      .cone = target == Side::kBottom ? bottom_cone(pair.other) : top_cone(pair.other),
      .target = target,
      .other = pair.other,
      .quartic = {},
      .rim_support = {},
      .lift = {},
      .tol = pair.tol,
  };

  // t(x) = alpha x + beta
  const double v2 = v * v;
  const double alpha = X / (v2 * T);
  const double beta = (v2 * T * T - X * X) / (2.0 * v2 * T);
  const double w2 = sq(ctx.cone.vmax);
  const auto& apex = ctx.cone.apex;
  const double shifted = beta - apex.t;

  const Quad support{v2 * beta * beta, 2.0 * v2 * alpha * beta, v2 * alpha * alpha - 1.0};
  const Quad lift{sq(apex.x) + sq(apex.y) + v2 * beta * beta - w2 * shifted * shifted,
                  -2.0 * apex.x + 2.0 * v2 * alpha * beta - 2.0 * w2 * alpha * shifted,
                  (v2 - w2) * alpha * alpha};
  ctx.rim_support = as_poly(support);
  ctx.lift = as_poly(lift);
  ctx.quartic = product(lift, lift) - (4.0 * sq(apex.y)) * ctx.rim_support;
  return ctx;
}

std::vector<double> rim_mantel_candidates(const CaseIIContext& ctx) {
  std::vector<double> roots;
  if (ctx.quartic.degree() < 0) {
    // The whole rim lies on the cone: probe the support ends and interior.
    if (ctx.rim_support.degree() < 0) return {};
    const auto ends = real_roots(ctx.rim_support, kCandidateNoise);
    if (ends.empty()) return {};
    const double lo = ends.front();
    const double hi = ends.back();
    for (int i = 0; i <= 8; ++i) roots.push_back(lo + (hi - lo) * i / 8.0);
  } else {
    // Solve in u = x / L with L the rim's reach, so coefficient magnitudes
    // are comparable and the relative degree cutoff means something.
    const double L = ctx.rim_speed * ctx.rim_duration;
    const Poly4& q = ctx.quartic;
    const Poly4 unit{q.a * L * L * L * L, q.b * L * L * L, q.c * L * L, q.d * L, q.e};
    for (double u : real_roots(unit, kCandidateNoise)) roots.push_back(u * L);
  }
  std::erase_if(roots, [&](double x) { return ctx.rim_support(x) < -ctx.tol.area; });
  return roots;
}

std::vector<TimeSpacePoint> rim_point_from_x(const CaseIIContext& ctx, double x) {
  const double support = ctx.rim_support(x);
  if (support < -ctx.tol.area) {
    throw std::domain_error("abscissa outside the rim");
  }
  const double t = ctx.time_at(x);
  const double magnitude = std::sqrt(std::max(support, 0.0));
  if (magnitude * magnitude <= ctx.tol.area) return {{t, x, 0.0}};
  const double y3 = ctx.cone.apex.y;
  const double lift = ctx.lift(x);
  const double length = std::sqrt(ctx.tol.area / kEpsilon);
  if (std::abs(y3) > kEpsilon * length && std::abs(lift) > ctx.tol.area) {
    const bool positive = (lift > 0.0) == (y3 > 0.0);
    return {{t, x, positive ? magnitude : -magnitude}};
  }
  return {{t, x, magnitude}, {t, x, -magnitude}};
}

std::optional<TimeSpacePoint> case_i(const Bead& b1, const Bead& b2) {
  const Tolerance tol = pair_tolerance(b1, b2);
  if (!bead_nonempty(b1, tol) || !bead_nonempty(b2, tol)) return std::nullopt;
  return first_apex_inside(b1, b2, tol);
}

std::optional<TimeSpacePoint> case_ii(const Bead& b1, const Bead& b2) {
  if (!nondegenerate(b1) || !nondegenerate(b2)) return std::nullopt;
  if (!bead_nonempty(b1) || !bead_nonempty(b2)) return std::nullopt;
  if (case_i(b1, b2)) return std::nullopt;
  return case_ii_unguarded(b1, b2);
}

std::optional<TimeSpacePoint> case_iii(const Bead& b1, const Bead& b2) {
  if (!(b1.vmax() + b2.vmax() > 0.0)) return std::nullopt;
  if (!bead_nonempty(b1) || !bead_nonempty(b2)) return std::nullopt;
  if (case_i(b1, b2)) return std::nullopt;
  return case_iii_unguarded(b1, b2, pair_tolerance(b1, b2));
}

AlibiVerdict beads_intersect(const Bead& b1, const Bead& b2) {
  const Tolerance tol = pair_tolerance(b1, b2);
  if (!bead_nonempty(b1, tol) || !bead_nonempty(b2, tol)) return {};
  if (b1.destination().t < b2.origin().t || b2.destination().t < b1.origin().t) {
    return {};
  }
  if (auto w = first_apex_inside(b1, b2, tol)) return {true, FiredCase::kI, w};

  if (b1.is_instant() || b2.is_instant()) return {};
  if (b1.vmax() == 0.0 || b2.vmax() == 0.0) {
    const bool first_is_segment = b1.vmax() == 0.0;
    const Bead& seg = first_is_segment ? b1 : b2;
    const Bead& other = first_is_segment ? b2 : b1;
    if (auto w = segment_meets_bead(seg, other, tol)) return {true, FiredCase::kIII, w};
    return {};
  }

  if (auto w = case_ii_unguarded(b1, b2)) return {true, FiredCase::kII, w};
  if (auto w = case_iii_unguarded(b1, b2, tol)) return {true, FiredCase::kIII, w};
  return {};
}

}  // namespace alibi
