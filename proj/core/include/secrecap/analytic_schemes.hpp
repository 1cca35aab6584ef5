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

#include "secrecap/channel_model.hpp"

namespace secrecap::analytic {

using channel::ChannelParams;

/// An epsilon-outage (or ergodic) secrecy rate in bits per channel use, or an
/// explicit marker that no rate satisfies the constraint. An outage target at
/// or below the rate-zero outage floor has no root, and silently clamping
/// would fabricate rates, hence the first-class Infeasible state.
struct RateResult {
  enum class Status { Achievable, Infeasible };

  Status status = Status::Infeasible;
  double rate_bits = 0.0;  // meaningful only when status == Achievable

  static RateResult achievable(double rate) { return {Status::Achievable, rate}; }
  static RateResult infeasible() { return {Status::Infeasible, 0.0}; }
  bool is_achievable() const { return status == Status::Achievable; }
};

/// Outage-probability query: target secrecy rate (bits/channel use), channel
/// means, and the state product N = q_t*q_r (1 for the single-antenna scheme).
struct OutageQuery {
  double rate;
  ChannelParams params;
  int n_states;
};

/// Secrecy capacity at fixed instantaneous SNRs:
/// {log2(1+gamma_m) - log2(1+gamma_w)}^+.
double awgn_secrecy_capacity(double gamma_m, double gamma_w);

/// Outage probability of the single-antenna scheme in quasi-static Rayleigh
/// fading, decomposed over the main-beats-eavesdropper event:
///   P(gamma_M > gamma_W) = gm/(gm+gw),
///   P(Cs < R | gamma_M > gamma_W) = 1 - ((gm+gw)/(gm+2^R gw)) exp(-(2^R-1)/gm),
///   P(Cs < R | gamma_M <= gamma_W) = 1.
/// Requires q.n_states == 1. Nondecreasing in the rate; P_out(0) = gw/(gm+gw).
double conventional_outage(const OutageQuery& q);

/// Epsilon-outage secrecy capacity of the single-antenna scheme in closed
/// form. For epsilon above the rate-zero floor gw/(gm+gw) the outage
/// condition (1-eps)(1 + (gw/gm) 2^R) = exp(-(2^R-1)/gm) is solved by the
/// principal Lambert W branch:
///   2^R = gm*(W0(exp(1/gm + 1/gw)/(gw(1-eps))) - 1/gw),
/// and the rate is the log2 of that quantity (clamped to zero when rounding
/// puts it at or below 1). At or below the floor: Infeasible.
RateResult conventional_eps_capacity(double epsilon, const ChannelParams& params);

/// Mean capacity of an exponential-SNR channel, E{log2(1+gamma)} =
/// exp(1/g)E1(1/g)/ln 2 bits; strictly increasing in the mean SNR.
double ergodic_capacity(double gamma_bar);

/// Ergodic secrecy capacity of per-symbol state switching:
/// {ergodic_capacity(gm) - ergodic_capacity(gw)}^+.
double switching_secrecy_capacity(const ChannelParams& params);

/// P(max of n_states main draws > eavesdropper draw). Alternating binomial
/// sum for n_states <= 30; the exact Beta-function form
/// 1 - Gamma(N+1)Gamma(c+1)/Gamma(N+c+1), c = gm/gw, for larger N.
/// At N=1 this reduces to gm/(gm+gw).
double selection_prob_exceed(const ChannelParams& params, int n_states);

/// Outage probability of best-state selection on main-channel knowledge only:
/// the alternating-sum probability that the selected state's secrecy capacity
/// falls in (0, rate), plus the whole mass of the max-below-eavesdropper
/// event. At n_states=1 equals conventional_outage exactly; n_states <= 30
/// (std::range_error beyond, per the binomial stability bound).
double selection_outage(const OutageQuery& q);

/// Epsilon-outage secrecy capacity of main-CSI state selection, obtained by
/// bracketed root solving of selection_outage(R) = epsilon over [0, 64] bits
/// (|dR| <= 1e-9). Infeasible at or below the rate-zero floor
/// 1 - selection_prob_exceed; bracket exhaustion (malformed parameters)
/// propagates as std::runtime_error.
RateResult selection_eps_capacity(double epsilon, const ChannelParams& params,
                                  int n_states);

/// Upper end of the root-solver bracket, in bits/channel use. Generously
/// above any rate reachable from SNRs this tool accepts.
inline constexpr double kMaxRateBits = 64.0;

}  // namespace secrecap::analytic
