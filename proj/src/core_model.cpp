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

#include "alibi/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace alibi {

namespace {

bool finite(const TimeSpacePoint& p) {
  return std::isfinite(p.t) && std::isfinite(p.x) && std::isfinite(p.y);
}

double sq(double v) { return v * v; }

}  // namespace

Bead::Bead(TimeSpacePoint origin, TimeSpacePoint destination, double vmax)
    : origin_(origin), destination_(destination), vmax_(vmax) {
  if (!finite(origin) || !finite(destination) || !std::isfinite(vmax)) {
    throw std::invalid_argument("bead coordinates must be finite");
  }
  if (origin.t > destination.t) {
    throw std::invalid_argument("bead origin must not be later than destination");
  }
  if (vmax < 0.0) {
    throw std::invalid_argument("bead speed bound must be non-negative");
  }
}

Tolerance tolerance_for(std::initializer_list<const Bead*> beads,
                        std::initializer_list<TimeSpacePoint> points) {
  double tmin = std::numeric_limits<double>::infinity();
  double tmax = -tmin;
  double xmin = tmin, xmax = -tmin, ymin = tmin, ymax = -tmin;
  double vmax = 0.0;
  auto extend = [&](const TimeSpacePoint& p) {
    tmin = std::min(tmin, p.t);
    tmax = std::max(tmax, p.t);
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  };
  for (const Bead* b : beads) {
    extend(b->origin());
    extend(b->destination());
    vmax = std::max(vmax, b->vmax());
  }
  for (const auto& p : points) extend(p);
  if (tmin > tmax) return {};
  const double duration = tmax - tmin;
  const double length =
      std::max({xmax - xmin, ymax - ymin, vmax * duration});
  return Tolerance::for_extent(length, duration);
}

bool bead_nonempty(const Bead& b) { return bead_nonempty(b, tolerance_for({&b})); }

bool bead_nonempty(const Bead& b, const Tolerance& tol) {
  const auto& p = b.origin();
  const auto& q = b.destination();
  return sq(q.x - p.x) + sq(q.y - p.y) <=
         sq(q.t - p.t) * sq(b.vmax()) + tol.area;
}

bool bead_contains_point(const Bead& b, const TimeSpacePoint& p) {
  return bead_contains_point(b, p, tolerance_for({&b}, {p}));
}

bool bead_contains_point(const Bead& b, const TimeSpacePoint& p,
                         const Tolerance& tol) {
  const auto& o = b.origin();
  const auto& d = b.destination();
  const double v2 = sq(b.vmax());
  if (p.t < o.t - tol.time || p.t > d.t + tol.time) return false;
  // A point within the time slack of an apex is measured with its time
  // clamped, so the cone radius never goes negative.
  const double after = std::max(p.t - o.t, 0.0);
  const double before = std::max(d.t - p.t, 0.0);
  return sq(p.x - o.x) + sq(p.y - o.y) <= sq(after) * v2 + tol.area &&
         sq(p.x - d.x) + sq(p.y - d.y) <= sq(before) * v2 + tol.area;
}

std::optional<std::pair<Disc, Disc>> time_slice(const Bead& b, double t0) {
  const auto& o = b.origin();
  const auto& d = b.destination();
  if (!(o.t <= t0 && t0 <= d.t)) return std::nullopt;
  return std::pair{Disc{o.x, o.y, b.vmax() * (t0 - o.t)},
                   Disc{d.x, d.y, b.vmax() * (d.t - t0)}};
}

bool disc_contains(const Disc& d, Point2 p, double area_tol) {
  return sq(p.x - d.cx) + sq(p.y - d.cy) <= sq(d.r) + area_tol;
}

TrajectoryDatabase::TrajectoryDatabase(std::vector<Sample> rows) {
  for (auto& s : rows) {
    if (!std::isfinite(s.t) || !std::isfinite(s.x) || !std::isfinite(s.y) ||
        !std::isfinite(s.v)) {
      throw std::invalid_argument("sample for label '" + s.label +
                                  "' has a non-finite value");
    }
    if (s.v < 0.0) {
      throw std::invalid_argument("sample for label '" + s.label +
                                  "' has a negative speed");
    }
    by_label_[s.label].push_back(std::move(s));
  }
  for (auto& [label, samples] : by_label_) {
    std::stable_sort(samples.begin(), samples.end(),
                     [](const Sample& a, const Sample& b) { return a.t < b.t; });
    for (std::size_t i = 1; i < samples.size(); ++i) {
      if (samples[i].t == samples[i - 1].t) {
        throw std::invalid_argument("duplicate sample for label '" + label +
                                    "' at t=" + std::to_string(samples[i].t));
      }
    }
  }
}

bool TrajectoryDatabase::contains(const std::string& label) const {
  return by_label_.contains(label);
}

const std::vector<Sample>& TrajectoryDatabase::samples(
    const std::string& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) {
    throw std::out_of_range("unknown label '" + label + "'");
  }
  return it->second;
}

std::vector<std::string> TrajectoryDatabase::labels() const {
  std::vector<std::string> out;
  out.reserve(by_label_.size());
  for (const auto& [label, _] : by_label_) out.push_back(label);
  return out;
}

std::size_t TrajectoryDatabase::size() const {
  std::size_t n = 0;
  for (const auto& [_, samples] : by_label_) n += samples.size();
  return n;
}

Necklace build_necklace(const TrajectoryDatabase& db, const std::string& label) {
  const auto& samples = db.samples(label);
  if (samples.size() < 2) {
    throw std::invalid_argument("label '" + label +
                                "' needs at least two samples to form a necklace");
  }
  Necklace out;
  out.reserve(samples.size() - 1);
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    const auto& a = samples[i];
    const auto& b = samples[i + 1];
    out.emplace_back(TimeSpacePoint{a.t, a.x, a.y}, TimeSpacePoint{b.t, b.x, b.y},
                     a.v);
  }
  return out;
}

const char* to_string(FiredCase c) {
  switch (c) {
    case FiredCase::kI:
      return "I";
    case FiredCase::kII:
      return "II";
    case FiredCase::kIII:
      return "III";
    case FiredCase::kNone:
      break;
  }
  return "none";
}

}  // namespace alibi
