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

#include "alibi/polyroots.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace alibi {

namespace {

// Coefficients in ascending powers; c[n] != 0 for degree n.
struct Dense {
  std::array<double, 5> c{};
  int n = 0;

  double eval(double x) const {
    double acc = c[n];
    for (int i = n - 1; i >= 0; --i) acc = acc * x + c[i];
    return acc;
  }

  double slope(double x) const {
    double acc = n * c[n];
    for (int i = n - 1; i >= 1; --i) acc = acc * x + i * c[i];
    return acc;
  }

  double scale(double x) const {
    const double ax = std::abs(x);
    double acc = std::abs(c[n]);
    for (int i = n - 1; i >= 0; --i) acc = acc * ax + std::abs(c[i]);
    return acc;
  }

  Dense derivative() const {
    Dense d;
    d.n = n - 1;
    for (int i = 1; i <= n; ++i) d.c[i - 1] = i * c[i];
    return d;
  }
};

int sign(double v) { return (v > 0.0) - (v < 0.0); }

// Root of a polynomial that is monotone on [lo, hi] with a strict sign change.
double bisect(const Dense& p, double lo, double hi) {
  int slo = sign(p.eval(lo));
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const int s = sign(p.eval(mid));
    if (s == 0) return mid;
    if (s == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double r = 0.5 * (lo + hi);
  // One guarded Newton step; kept only if it lowers the residual.
  const double f = p.eval(r);
  const double df = p.slope(r);
  if (df != 0.0) {
    const double polished = r - f / df;
    if (std::abs(p.eval(polished)) < std::abs(f)) r = polished;
  }
  return r;
}

std::vector<double> roots_of(const Dense& p, double tol) {
  if (p.n <= 0) return {};
  if (p.n == 1) return {-p.c[0] / p.c[1]};

  double bound = 0.0;
  for (int i = 0; i < p.n; ++i) bound = std::max(bound, std::abs(p.c[i] / p.c[p.n]));
  bound += 1.0;

  std::vector<double> knots;
  knots.push_back(-bound);
  for (double cp : roots_of(p.derivative(), tol)) {
    if (cp > -bound && cp < bound) knots.push_back(cp);
  }
  knots.push_back(bound);

  const std::size_t m = knots.size();
  std::vector<double> values(m);
  for (std::size_t i = 0; i < m; ++i) values[i] = p.eval(knots[i]);

  // found[i]: a root was bracketed on the piece [knots[i], knots[i + 1]].
  std::vector<double> out;
  std::vector<bool> found(m - 1, false);
  std::vector<double> bracketed(m - 1, 0.0);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (sign(values[i]) * sign(values[i + 1]) < 0) {
      found[i] = true;
      bracketed[i] = bisect(p, knots[i], knots[i + 1]);
    }
  }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (found[i]) out.push_back(bracketed[i]);
  }
  // Interior knots are critical points. A critical value at noise level is a
  // repeated root. p is monotone between the knot and a root bracketed on an
  // adjacent piece, so |p| stays at noise level in between; such roots
  // collapse onto the critical point, which the derivative locates far more
  // accurately than bisection on a flat piece.
  for (std::size_t i = 1; i + 1 < m; ++i) {
    const double cp = knots[i];
    if (std::abs(values[i]) > tol * p.scale(cp)) continue;
    if (found[i - 1]) std::erase(out, bracketed[i - 1]);
    if (found[i]) std::erase(out, bracketed[i]);
    out.push_back(cp);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

double Poly4::scale_at(double x) const {
  const double ax = std::abs(x);
  return (((std::abs(a) * ax + std::abs(b)) * ax + std::abs(c)) * ax +
          std::abs(d)) * ax + std::abs(e);
}

int Poly4::degree() const {
  const std::array<double, 5> asc{e, d, c, b, a};
  double biggest = 0.0;
  for (double v : asc) biggest = std::max(biggest, std::abs(v));
  if (biggest == 0.0) return -1;
  int n = 4;
  while (n > 0 && std::abs(asc[n]) <= kLeadingCutoff * biggest) --n;
  return n;
}

std::vector<double> real_roots(const Poly4& p, double tol) {
  const int n = p.degree();
  if (n < 0) throw std::invalid_argument("identically zero");
  Dense dense;
  dense.n = n;
  const std::array<double, 5> asc{p.e, p.d, p.c, p.b, p.a};
  double biggest = 0.0;
  for (int i = 0; i <= n; ++i) biggest = std::max(biggest, std::abs(asc[i]));
  for (int i = 0; i <= n; ++i) dense.c[i] = asc[i] / biggest;
  return roots_of(dense, tol);
}

}  // namespace alibi
