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

#include "alibi/oracle.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <utility>

namespace alibi {

namespace {

constexpr int kGoldenSteps = 50;
constexpr double kInvPhi = 0.6180339887498949;

// Maximum of a concave function on [lo, hi]: (argmax, value).
template <class F>
std::pair<double, double> golden_max(F&& f, double lo, double hi) {
  if (!(hi > lo)) return {lo, f(lo)};
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < kGoldenSteps; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? std::pair{c, fc} : std::pair{d, fd};
}

double slack_at(std::span<const Disc> discs, double x, double y) {
  double worst = std::numeric_limits<double>::infinity();
  for (const Disc& d : discs) {
    const double dx = x - d.cx;
    const double dy = y - d.cy;
    worst = std::min(worst, d.r - std::sqrt(dx * dx + dy * dy));
  }
  return worst;
}

struct Box {
  double x0, x1, y0, y1;
};

// The best slack over `box`, by nested golden sections.
double refine(std::span<const Disc> discs, const Box& box, std::size_t& evaluations) {
  auto column = [&](double x) {
    return golden_max(
               [&](double y) {
                 ++evaluations;
                 return slack_at(discs, x, y);
               },
               box.y0, box.y1)
        .second;
  };
  return golden_max(column, box.x0, box.x1).second;
}

std::array<Disc, 4> slice_discs(const Bead& b1, const Bead& b2, double t) {
  auto clamp = [](double r) { return std::max(r, 0.0); };
  return {Disc{b1.origin().x, b1.origin().y, clamp(b1.vmax() * (t - b1.origin().t))},
          Disc{b1.destination().x, b1.destination().y,
               clamp(b1.vmax() * (b1.destination().t - t))},
          Disc{b2.origin().x, b2.origin().y, clamp(b2.vmax() * (t - b2.origin().t))},
          Disc{b2.destination().x, b2.destination().y,
               clamp(b2.vmax() * (b2.destination().t - t))}};
}

double emptiness_gap(const Bead& b) {
  const double d = std::hypot(b.destination().x - b.origin().x,
                              b.destination().y - b.origin().y);
  return d - b.vmax() * b.duration();
}

}  // namespace

double best_disc_slack(std::span<const Disc> discs, std::size_t* evaluations) {
  // The maximizer lies in the convex hull of the centers.
  Box box{discs[0].cx, discs[0].cx, discs[0].cy, discs[0].cy};
  for (const Disc& d : discs) {
    box.x0 = std::min(box.x0, d.cx);
    box.x1 = std::max(box.x1, d.cx);
    box.y0 = std::min(box.y0, d.cy);
    box.y1 = std::max(box.y1, d.cy);
  }
  std::size_t count = 0;
  const double best = refine(discs, box, count);
  if (evaluations) *evaluations += count;
  return best;
}

OracleVerdict oracle_beads_intersect(const Bead& b1, const Bead& b2, std::size_t slices) {
  if (slices < 2) throw std::invalid_argument("oracle needs at least two slices");
  const double gap = std::max(emptiness_gap(b1), emptiness_gap(b2));
  if (gap > 0.0) return {false, -gap, 0};
  const double lo = std::max(b1.origin().t, b2.origin().t);
  const double hi = std::min(b1.destination().t, b2.destination().t);
  if (lo > hi) return {false, -(lo - hi), 0};

  OracleVerdict out;
  auto profile = [&](double t) {
    const auto discs = slice_discs(b1, b2, t);
    return best_disc_slack(discs, &out.samples_used);
  };
  if (hi == lo) {
    out.margin = profile(lo);
    out.intersects = out.margin >= 0.0;
    return out;
  }
  const double pitch = (hi - lo) / static_cast<double>(slices - 1);
  std::size_t best_k = 0;
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < slices; ++k) {
    const double t = k + 1 == slices ? hi : lo + pitch * static_cast<double>(k);
    const double value = profile(t);
    if (value > best) {
      best = value;
      best_k = k;
    }
  }
  // The slack profile is concave in t, so its peak is bracketed by the
  // neighbours of the best slice.
  const double left = lo + pitch * static_cast<double>(best_k == 0 ? 0 : best_k - 1);
  const double right = std::min(hi, lo + pitch * static_cast<double>(best_k + 1));
  const double refined = golden_max(profile, left, right).second;
  out.margin = std::max(best, refined);
  out.intersects = out.margin >= 0.0;
  return out;
}

OracleVerdict oracle_discs_intersect(std::span<const Disc> discs, std::size_t grid) {
  if (discs.empty() || discs.size() > 4) {
    throw std::invalid_argument("oracle takes one to four discs");
  }
  if (grid < 16) throw std::invalid_argument("oracle grid must be at least 16");
  const Disc& tight =
      *std::min_element(discs.begin(), discs.end(),
                        [](const Disc& a, const Disc& b) { return a.r < b.r; });
  const Box box{tight.cx - tight.r, tight.cx + tight.r, tight.cy - tight.r,
                tight.cy + tight.r};

  OracleVerdict out;
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t n = grid;; n *= 2) {
    const double pitch = (box.x1 - box.x0) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      const double x = box.x0 + pitch * static_cast<double>(i);
      for (std::size_t j = 0; j < n; ++j) {
        best = std::max(best, slack_at(discs, x, box.y0 + pitch * static_cast<double>(j)));
      }
    }
    out.samples_used += n * n;
    // A miss is conclusive once the best sample is farther below zero than
    // the slack can rise within half a grid diagonal.
    const bool conclusive = best >= 0.0 || -best > pitch;
    if (conclusive || 4 * n * n > kSampleCap) break;
  }
  // Every common point lies in the smallest disc, so refining over its box
  // decides the sign; the grid value stays as a floor.
  out.margin = std::max(best, refine(discs, box, out.samples_used));
  out.intersects = out.margin >= 0.0;
  return out;
}

}  // namespace alibi
