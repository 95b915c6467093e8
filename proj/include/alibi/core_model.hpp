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

#ifndef ALIBI_CORE_MODEL_HPP
#define ALIBI_CORE_MODEL_HPP

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace alibi {

/// Relative tolerance applied to squared-length expressions and time
/// comparisons after scaling by the magnitude of the configuration.
inline constexpr double kEpsilon = 1e-9;

/// An event (t, x, y) in time x plane.
struct TimeSpacePoint {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const TimeSpacePoint&, const TimeSpacePoint&) = default;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Closed disc with center (cx, cy) and radius r >= 0.
struct Disc {
  double cx = 0.0;
  double cy = 0.0;
  double r = 0.0;

  friend bool operator==(const Disc&, const Disc&) = default;
};

/// Absolute slack used by the closed-set comparisons. `area` applies to
/// expressions measured in squared length units, `time` to time coordinates.
struct Tolerance {
  double area = 0.0;
  double time = 0.0;

  /// Tolerance for a configuration whose spatial extent (including the
  /// reach vmax * duration) is `length` and whose temporal extent is
  /// `duration`.
  static Tolerance for_extent(double length, double duration) {
    return {kEpsilon * length * length, kEpsilon * duration};
  }
};

/// The space-time prism between two time-stamped locations under a speed
/// bound: all (t, x, y) with t_p <= t <= t_q that lie in both the forward
/// cone from `origin` and the backward cone from `destination`.
class Bead {
 public:
  /// Throws std::invalid_argument when origin.t > destination.t, vmax < 0,
  /// or any value is not finite.
  Bead(TimeSpacePoint origin, TimeSpacePoint destination, double vmax);

  /// B(t_p, x_p, y_p, t_q, x_q, y_q, vmax) in the customary argument order.
  static Bead from_tuple(double tp, double xp, double yp, double tq, double xq,
                         double yq, double vmax) {
    return Bead({tp, xp, yp}, {tq, xq, yq}, vmax);
  }

  const TimeSpacePoint& origin() const { return origin_; }
  const TimeSpacePoint& destination() const { return destination_; }
  double vmax() const { return vmax_; }
  double duration() const { return destination_.t - origin_.t; }

  /// Point bead: both apexes at the same instant.
  bool is_instant() const { return origin_.t == destination_.t; }

  friend bool operator==(const Bead&, const Bead&) = default;

 private:
  TimeSpacePoint origin_;
  TimeSpacePoint destination_;
  double vmax_;
};

/// Magnitude-scaled tolerance covering the given beads and extra points.
Tolerance tolerance_for(std::initializer_list<const Bead*> beads,
                        std::initializer_list<TimeSpacePoint> points = {});

bool bead_nonempty(const Bead& b);
bool bead_nonempty(const Bead& b, const Tolerance& tol);

/// Closed membership test of the three bead conjuncts.
bool bead_contains_point(const Bead& b, const TimeSpacePoint& p);
bool bead_contains_point(const Bead& b, const TimeSpacePoint& p,
                         const Tolerance& tol);

/// The two discs bounding the bead at time t0 (bottom-cone disc first), or
/// nothing when t0 lies outside [t_p, t_q].
std::optional<std::pair<Disc, Disc>> time_slice(const Bead& b, double t0);

bool disc_contains(const Disc& d, Point2 p, double area_tol = 0.0);

/// One trajectory sample. `v` bounds the speed until the next sample of the
/// same label.
struct Sample {
  std::string label;
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double v = 0.0;
};

/// Labeled samples grouped per label and sorted by time. Immutable after
/// construction.
class TrajectoryDatabase {
 public:
  TrajectoryDatabase() = default;

  /// Sorts per label by t. Throws std::invalid_argument on a duplicate
  /// (label, t), a negative or non-finite speed, or a non-finite coordinate.
  explicit TrajectoryDatabase(std::vector<Sample> rows);

  bool contains(const std::string& label) const;
  /// Throws std::out_of_range for an unknown label.
  const std::vector<Sample>& samples(const std::string& label) const;
  std::vector<std::string> labels() const;
  std::size_t size() const;

 private:
  std::map<std::string, std::vector<Sample>> by_label_;
};

/// Chain of beads linking consecutive samples of one object.
using Necklace = std::vector<Bead>;

/// Throws std::out_of_range for an unknown label and std::invalid_argument
/// when the label has fewer than two samples.
Necklace build_necklace(const TrajectoryDatabase& db, const std::string& label);

enum class FiredCase { kNone, kI, kII, kIII };

const char* to_string(FiredCase c);

struct AlibiVerdict {
  bool intersects = false;
  FiredCase fired_case = FiredCase::kNone;
  std::optional<TimeSpacePoint> witness;
};

}  // namespace alibi

#endif  // ALIBI_CORE_MODEL_HPP
