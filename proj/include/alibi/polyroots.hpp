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

#ifndef ALIBI_POLYROOTS_HPP
#define ALIBI_POLYROOTS_HPP

#include <vector>

namespace alibi {

/// a*x^4 + b*x^3 + c*x^2 + d*x + e.
struct Poly4 {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double e = 0.0;

  double operator()(double x) const { return (((a * x + b) * x + c) * x + d) * x + e; }

  /// Sum of |coefficient| * |x|^power; the natural magnitude against which a
  /// residual at x is judged.
  double scale_at(double x) const;

  /// Degree after dropping leading coefficients with
  /// |coef| <= kLeadingCutoff * max|coef|; -1 for the zero polynomial.
  int degree() const;

  static constexpr double kLeadingCutoff = 1e-12;
};

/// Default residual tolerance: a few units of rounding in the evaluation.
inline constexpr double kRootNoise = 1e-14;

/// Real roots of `p` in ascending order, each reported once.
///
/// Roots are isolated on the monotone pieces between critical points (the
/// roots of the derivative, found recursively) and refined by bisection with
/// a final Newton step. A critical point where |p| <= tol * scale_at is
/// reported as a (near) repeated root. Throws std::invalid_argument
/// "identically zero" for the zero polynomial.
std::vector<double> real_roots(const Poly4& p, double tol = kRootNoise);

}  // namespace alibi

#endif  // ALIBI_POLYROOTS_HPP
