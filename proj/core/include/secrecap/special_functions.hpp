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

namespace secrecap::special {

/// Principal branch of the Lambert W function for x >= 0: the w >= 0 with
/// w*exp(w) = x. Halley iteration from w0 = x (x <= e) or the asymptotic
/// guess log(x) - log(log(x)) (x > e); relative error <= 1e-12 over the
/// full nonnegative range. Throws std::domain_error for negative or
/// non-finite input. The negative branch point is never needed here.
double lambert_w0(double x);

/// W0(exp(log_x)) evaluated without forming exp(log_x). For log_x > 1 the
/// defining equation w + log(w) = log_x is solved directly, so arguments
/// whose exponential would overflow a double are handled exactly; smaller
/// arguments fall back to lambert_w0. Throws std::domain_error for
/// non-finite input.
double lambert_w0_of_log(double log_x);

/// Exponential integral E1(x) = integral from x to infinity of exp(-t)/t dt,
/// x > 0. Power series with the Euler-Mascheroni constant for x <= 1,
/// modified-Lentz continued fraction for x > 1; relative error <= 1e-10.
/// Underflows to 0 near x ~ 746. Throws std::domain_error for x <= 0.
double exp_integral_e1(double x);

/// exp(x)*E1(x) computed in scaled form, x > 0. For x > 1 the continued
/// fraction yields the product directly, so there is no overflow at any x;
/// the result always lies strictly between 1/(x+1) and 1/x.
/// Throws std::domain_error for x <= 0.
double expx_e1(double x);

}  // namespace secrecap::special
