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

#include "secrecap/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace secrecap::special {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kE = 2.718281828459045235;
constexpr int kMaxIterations = 64;

// Halley on f(w) = w*exp(w) - x, valid while exp(w) cannot overflow.
// Monotone convex target, so the iteration is safe from any w0 in [0, e].
double lambert_w0_direct(double x) {
  double w = x;
  for (int it = 0; it < kMaxIterations; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double fp = ew * (w + 1.0);
    const double step = f / (fp - 0.5 * f * (w + 2.0) / (w + 1.0));
    w -= step;
    if (std::abs(step) <= 1e-16 * (1.0 + std::abs(w))) {
      return w;
    }
  }
  return w;
}

// Halley on g(w) = w + log(w) - L, the log form of w*exp(w) = exp(L).
// Used for L > 1 (w > 1), where it cannot overflow for any double L.
double lambert_w0_log_form(double target_log) {
  double w = target_log - std::log(target_log);
  for (int it = 0; it < kMaxIterations; ++it) {
    const double g = w + std::log(w) - target_log;
    const double gp = 1.0 + 1.0 / w;
    const double step = g / (gp + 0.5 * g / (w * w * gp));
    w -= step;
    if (std::abs(step) <= 1e-16 * w) {
      return w;
    }
  }
  return w;
}

// Power series E1(x) = -gamma - log(x) + sum_{k>=1} (-1)^{k+1} x^k/(k*k!).
double e1_series(double x) {
  double sum = 0.0;
  double pow_over_fact = 1.0;  // x^k / k!
  double sign = 1.0;
  for (int k = 1; k <= 48; ++k) {
    pow_over_fact *= x / k;
    const double term = sign * pow_over_fact / k;
    sum += term;
    if (std::abs(term) <= std::numeric_limits<double>::epsilon() * std::abs(sum)) {
      break;
    }
    sign = -sign;
  }
  return -kEulerGamma - std::log(x) + sum;
}

// Modified Lentz evaluation of exp(x)*E1(x) =
// 1/(x+1 - 1/(x+3 - 4/(x+5 - 9/(...)))), stable for all x > 1.
double e1_cf_scaled(double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 400; ++i) {
    const double a = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = a * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) <= std::numeric_limits<double>::epsilon()) {
      break;
    }
  }
  return h;
}

void require_positive_finite(double x, const char* who) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error(std::string(who) + ": argument must be finite and > 0");
  }
}

}  // namespace

double lambert_w0(double x) {
  if (std::isnan(x) || !std::isfinite(x) || x < 0.0) {
    throw std::domain_error("lambert_w0: argument must be finite and >= 0");
  }
  if (x == 0.0) return 0.0;
  if (x <= kE) return lambert_w0_direct(x);
  return lambert_w0_log_form(std::log(x));
}

double lambert_w0_of_log(double log_x) {
  if (std::isnan(log_x) || !std::isfinite(log_x)) {
    throw std::domain_error("lambert_w0_of_log: argument must be finite");
  }
  if (log_x <= 1.0) return lambert_w0(std::exp(log_x));
  return lambert_w0_log_form(log_x);
}

double exp_integral_e1(double x) {
  require_positive_finite(x, "exp_integral_e1");
  if (x <= 1.0) return e1_series(x);
  return std::exp(-x) * e1_cf_scaled(x);
}

double expx_e1(double x) {
  require_positive_finite(x, "expx_e1");
  if (x <= 1.0) return std::exp(x) * e1_series(x);
  return e1_cf_scaled(x);
}

}  // namespace secrecap::special
