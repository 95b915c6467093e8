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

// Random inputs and similarity transforms shared by the test binaries.

#ifndef ALIBI_TESTS_SUPPORT_HPP
#define ALIBI_TESTS_SUPPORT_HPP

#include <cmath>
#include <numbers>
#include <random>

#include "alibi/core_model.hpp"

namespace alibi::testing {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Translation in time and space, rotation in space, and one scale factor
/// for both; speeds are unchanged.
struct Similarity {
  double dt = 0.0, dx = 0.0, dy = 0.0;
  double angle = 0.0;
  double scale = 1.0;

  TimeSpacePoint operator()(const TimeSpacePoint& p) const {
    const double c = std::cos(angle), s = std::sin(angle);
    return {scale * p.t + dt, scale * (c * p.x - s * p.y) + dx,
            scale * (s * p.x + c * p.y) + dy};
  }
  Bead operator()(const Bead& b) const {
    return Bead((*this)(b.origin()), (*this)(b.destination()), b.vmax());
  }

  static Similarity random(std::mt19937_64& rng) {
    return {uniform(rng, -20, 20), uniform(rng, -20, 20), uniform(rng, -20, 20),
            uniform(rng, 0, 2 * std::numbers::pi), std::exp(uniform(rng, -2, 2))};
  }
};

inline Disc random_disc(std::mt19937_64& rng) {
  return {uniform(rng, -5, 5), uniform(rng, -5, 5), 4.0 - uniform(rng, 0, 4)};
}

}  // namespace alibi::testing

#endif  // ALIBI_TESTS_SUPPORT_HPP
