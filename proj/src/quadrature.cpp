// Copyright 2026 The qnoise authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qnoise/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qnoise {

namespace {

double simpson(double h, double fa, double fc, double fb) {
  return (fa + 4.0 * fc + fb) * (h / 6.0);
}

double simpson_adaptive(const std::function<double(double)>& f, double a,
                        double c, double b, double fa, double fc, double fb,
                        double whole, double tol, int depth) {
  const double ca = 0.5 * (a + c);
  const double cb = 0.5 * (c + b);
  const double fca = f(ca);
  const double fcb = f(cb);
  const double left = simpson(c - a, fa, fca, fc);
  const double right = simpson(b - c, fc, fcb, fb);
  const double err = (left + right - whole) / 15.0;
  if (std::abs(err) <= tol) return left + right + err;
  if (depth <= 0)
    throw std::runtime_error(
        "adaptive_simpson: no convergence on [" + std::to_string(a) + ", " +
        std::to_string(b) + "], error estimate " + std::to_string(err));
  return simpson_adaptive(f, a, ca, c, fa, fca, fc, left, tol, depth - 1) +
         simpson_adaptive(f, c, cb, b, fc, fcb, fb, right, tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double abs_tol, int max_depth) {
  if (!(abs_tol > 0.0))
    throw std::domain_error("adaptive_simpson: tolerance must be > 0");
  if (a == b) return 0.0;
  const double c = 0.5 * (a + b);
  const double fa = f(a);
  const double fc = f(c);
  const double fb = f(b);
  if (!std::isfinite(fa) || !std::isfinite(fc) || !std::isfinite(fb))
    throw std::runtime_error("adaptive_simpson: non-finite integrand");
  const double whole = simpson(b - a, fa, fc, fb);
  return simpson_adaptive(f, a, c, b, fa, fc, fb, whole, abs_tol, max_depth);
}

}  // namespace qnoise
