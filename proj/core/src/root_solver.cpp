// secrecap - secrecy capacity toolkit for reconfigurable antenna wiretap channels
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "secrecap/root_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace secrecap::solver {

namespace {
constexpr int kMaxIterations = 200;
}

double find_root(const RootFn& f, const Bracket& bracket, double tol,
                 const IterationTrace& trace) {
  if (!(bracket.lo < bracket.hi)) {
    throw std::invalid_argument("find_root: bracket requires lo < hi");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("find_root: tol must be > 0");
  }
  if (bracket.f_lo == 0.0) return bracket.lo;
  if (bracket.f_hi == 0.0) return bracket.hi;
  if (std::signbit(bracket.f_lo) == std::signbit(bracket.f_hi)) {
    throw std::invalid_argument("find_root: no sign change across bracket");
  }

  // Brent's method, after the classic zbrent formulation: b is the best
  // estimate, c the contrapoint with f(b)*f(c) <= 0, a the previous b.
  double a = bracket.lo;
  double b = bracket.hi;
  double c = b;
  double fa = bracket.f_lo;
  double fb = bracket.f_hi;
  double fc = fb;
  double d = 0.0;
  double e = 0.0;

  for (int iter = 0; iter < kMaxIterations; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      e = d = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    if (trace) {
      trace(iter, std::min(b, c), std::max(b, c));
    }
    const double tol1 =
        2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * tol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) {
      return b;
    }
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      // Secant or inverse quadratic step.
      const double s = fb / fa;
      double p;
      double q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      const double min1 = 3.0 * xm * q - std::abs(tol1 * q);
      const double min2 = std::abs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol1 ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = f(b);
  }
  throw std::runtime_error("find_root: iteration cap reached without convergence");
}

Bracket expand_bracket(const RootFn& f, double x_lo, double x_hi, double x_max) {
  if (!(x_lo < x_hi) || !(x_hi <= x_max)) {
    throw std::invalid_argument("expand_bracket: requires x_lo < x_hi <= x_max");
  }
  const double f_lo = f(x_lo);
  double hi = x_hi;
  double f_hi = f(hi);
  while (f_hi != 0.0 && std::signbit(f_lo) == std::signbit(f_hi)) {
    if (hi >= x_max) {
      throw std::runtime_error("expand_bracket: no sign change up to x_max");
    }
    hi = std::min(x_lo + 2.0 * (hi - x_lo), x_max);
    f_hi = f(hi);
  }
  return Bracket{x_lo, hi, f_lo, f_hi};
}

}  // namespace secrecap::solver
