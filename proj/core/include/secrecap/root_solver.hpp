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

#pragma once

#include <functional>

namespace secrecap::solver {

/// A sign-changing interval: lo < hi with f(lo) and f(hi) of opposite sign
/// (a zero endpoint value is accepted and short-circuits find_root).
struct Bracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;
};

using RootFn = std::function<double(double)>;

/// Observer invoked once per iteration with the current bracketing interval;
/// used by tests to assert the width never grows.
using IterationTrace = std::function<void(int iteration, double lo, double hi)>;

/// Brent-style bracketed root finding: bisection with secant/inverse-quadratic
/// acceleration. Returns x with |x - root| <= tol (absolute, on the abscissa).
/// Deterministic for identical inputs; at most 200 iterations.
/// Throws std::invalid_argument if the bracket does not change sign and
/// std::runtime_error if the iteration cap is reached.
double find_root(const RootFn& f, const Bracket& bracket, double tol,
                 const IterationTrace& trace = {});

/// Doubles the interval [x_lo, x_hi] geometrically (keeping x_lo fixed) until
/// f changes sign, capped at x_max. Throws std::runtime_error when the cap is
/// reached without a sign change; callers translate that into Infeasible or a
/// parameter error.
Bracket expand_bracket(const RootFn& f, double x_lo, double x_hi, double x_max);

}  // namespace secrecap::solver
