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

#include "secrecap/analytic_schemes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "secrecap/root_solver.hpp"
#include "secrecap/special_functions.hpp"

namespace secrecap::analytic {

namespace {

constexpr double kInvLn2 = std::numbers::log2e;

double clamp01(double p) { return std::min(1.0, std::max(0.0, p)); }

void check_rate(double rate) {
  if (std::isnan(rate) || rate < 0.0 || !std::isfinite(rate)) {
    throw std::domain_error("outage query: rate must be finite and >= 0");
  }
}

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw std::domain_error("epsilon must lie in (0, 1)");
  }
}

void check_n_states(int n_states) {
  if (n_states < 1) throw std::domain_error("n_states must be >= 1");
  if (n_states > channel::kMaxBinomialStates) {
    throw std::range_error(
        "n_states > 30: the alternating binomial closed form is unstable there");
  }
}

// Joint probability that the selected-state secrecy capacity is positive but
// below `rate`: the alternating binomial sum over the max-order statistic,
// term i carrying n*C(n-1,i)(-1)^i/(i+1). Compensated summation in extended
// precision keeps term round-off below the 1e-9 contract at n = 30.
double selection_joint_below(double rate, const ChannelParams& p, int n) {
  const long double gm = p.gamma_bar_m;
  const long double ratio = static_cast<long double>(p.gamma_bar_w) / gm;
  const long double two_r = std::exp2(static_cast<long double>(rate));
  long double sum = 0.0L;
  long double comp = 0.0L;
  long double binom = 1.0L;  // C(n-1, i)
  long double sign = 1.0L;
  for (int i = 0; i < n; ++i) {
    const long double k = i + 1.0L;
    const long double steered = 1.0L / (1.0L + k * ratio);
    const long double escaped =
        std::exp(-(two_r - 1.0L) * k / gm) / (1.0L + k * two_r * ratio);
    const long double term = sign * binom / k * (steered - escaped);
    const long double y = term - comp;
    const long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    binom = binom * (n - 1 - i) / (i + 1.0L);
    sign = -sign;
  }
  return static_cast<double>(sum * n);
}

}  // namespace

double awgn_secrecy_capacity(double gamma_m, double gamma_w) {
  if (std::isnan(gamma_m) || std::isnan(gamma_w) || gamma_m < 0.0 || gamma_w < 0.0 ||
      !std::isfinite(gamma_m) || !std::isfinite(gamma_w)) {
    throw std::domain_error("awgn_secrecy_capacity: SNRs must be finite and >= 0");
  }
  const double diff = (std::log1p(gamma_m) - std::log1p(gamma_w)) * kInvLn2;
  return diff > 0.0 ? diff : 0.0;
}

double conventional_outage(const OutageQuery& q) {
  check_rate(q.rate);
  if (q.n_states != 1) {
    throw std::invalid_argument("conventional_outage: n_states must be 1");
  }
  const double gm = q.params.gamma_bar_m;
  const double gw = q.params.gamma_bar_w;
  const double two_r = std::exp2(q.rate);
  const double p_main_wins = gm / (gm + gw);
  const double p_cond =
      1.0 - ((gm + gw) / (gm + two_r * gw)) * std::exp(-(two_r - 1.0) / gm);
  return clamp01(p_cond * p_main_wins + (1.0 - p_main_wins));
}

RateResult conventional_eps_capacity(double epsilon, const ChannelParams& params) {
  check_epsilon(epsilon);
  const double gm = params.gamma_bar_m;
  const double gw = params.gamma_bar_w;
  const double floor = gw / (gm + gw);  // outage of rate zero
  if (epsilon <= floor) return RateResult::infeasible();

  // log of the Lambert argument, formed without exponentiating 1/gm + 1/gw.
  const double log_arg = 1.0 / gm + 1.0 / gw - std::log(gw * (1.0 - epsilon));
  const double w = special::lambert_w0_of_log(log_arg);
  const double two_r = gm * (w - 1.0 / gw);
  if (!(two_r > 1.0)) return RateResult::achievable(0.0);
  return RateResult::achievable(std::log2(two_r));
}

double ergodic_capacity(double gamma_bar) {
  if (!(gamma_bar > 0.0) || !std::isfinite(gamma_bar)) {
    throw std::domain_error("ergodic_capacity: mean SNR must be finite and > 0");
  }
  return special::expx_e1(1.0 / gamma_bar) * kInvLn2;
}

double switching_secrecy_capacity(const ChannelParams& params) {
  const double diff =
      ergodic_capacity(params.gamma_bar_m) - ergodic_capacity(params.gamma_bar_w);
  return diff > 0.0 ? diff : 0.0;
}

double selection_prob_exceed(const ChannelParams& params, int n_states) {
  if (n_states < 1) throw std::domain_error("selection_prob_exceed: n_states must be >= 1");
  const double gm = params.gamma_bar_m;
  const double gw = params.gamma_bar_w;
  if (n_states > channel::kMaxBinomialStates) {
    // P(max of N > W) = 1 - N*B(N, c+1) with c = gm/gw, evaluated via lgamma.
    const double c = gm / gw;
    const double log_p_below = std::lgamma(n_states + 1.0) + std::lgamma(c + 1.0) -
                               std::lgamma(n_states + 1.0 + c);
    return clamp01(1.0 - std::exp(log_p_below));
  }
  const long double ratio = static_cast<long double>(gw) / gm;
  long double sum = 0.0L;
  long double comp = 0.0L;
  long double binom = 1.0L;
  long double sign = 1.0L;
  for (int i = 0; i < n_states; ++i) {
    const long double k = i + 1.0L;
    const long double term = sign * binom / (k * (1.0L + k * ratio));
    const long double y = term - comp;
    const long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    binom = binom * (n_states - 1 - i) / (i + 1.0L);
    sign = -sign;
  }
  return clamp01(static_cast<double>(sum * n_states));
}

double selection_outage(const OutageQuery& q) {
  check_rate(q.rate);
  check_n_states(q.n_states);
  const double joint = selection_joint_below(q.rate, q.params, q.n_states);
  const double p_exceed = selection_prob_exceed(q.params, q.n_states);
  return clamp01(joint + (1.0 - p_exceed));
}

RateResult selection_eps_capacity(double epsilon, const ChannelParams& params,
                                  int n_states) {
  check_epsilon(epsilon);
  check_n_states(n_states);
  const double floor = 1.0 - selection_prob_exceed(params, n_states);
  if (epsilon <= floor) return RateResult::infeasible();

  const auto objective = [&](double rate) {
    return selection_outage(OutageQuery{rate, params, n_states}) - epsilon;
  };
  const solver::Bracket bracket =
      solver::expand_bracket(objective, 0.0, 1.0, kMaxRateBits);
  const double root = solver::find_root(objective, bracket, 1e-12);
  return RateResult::achievable(std::max(0.0, root));
}

}  // namespace secrecap::analytic
