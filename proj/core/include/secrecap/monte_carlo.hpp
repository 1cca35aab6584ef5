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

#include <cstdint>
#include <vector>

#include "secrecap/analytic_schemes.hpp"
#include "secrecap/channel_model.hpp"

namespace secrecap::mc {

enum class Scheme { Conventional, Switching, PartialCsi, FullCsi };

/// One seeded simulation: scheme, channel means, antenna geometry, trial
/// count, and shard count. Every trial owns its own RNG substream keyed by
/// the global trial index, so results are bit-identical for any shard count
/// or thread schedule; shards only partition the trial range into contiguous
/// 4096-trial blocks (the last shard may come up short when the counts do
/// not divide evenly). symbols_per_codeword (m) applies to Switching only.
struct SimulationSpec {
  Scheme scheme = Scheme::Conventional;
  channel::ChannelParams params;
  channel::AntennaConfig config;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  unsigned shards = 1;
  unsigned symbols_per_codeword = 1;

  void validate() const;
};

/// Empirical outage probability with its exact binomial standard error
/// sqrt(p(1-p)/trials); p_hat*trials is always an integer count.
struct OutageEstimate {
  double p_hat = 0.0;
  double std_err = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

/// Empirical epsilon-outage rate: an order statistic of the sampled secrecy
/// capacities, plus a distribution-free 95% confidence half-width from the
/// binomial order-statistic method. Infeasible when the quantile lands on
/// the zero atom.
struct QuantileEstimate {
  analytic::RateResult result;
  double ci_half_width = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

/// Mean of per-codeword averages with the standard error of that mean.
struct ErgodicEstimate {
  double estimate = 0.0;
  double std_err = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

/// Per-block secrecy-capacity sample for the block-structured schemes.
///   Conventional: uses main[0][0] and eve[0] only.
///   PartialCsi:   the globally best main entry; the eavesdropper sees the
///                 draw of the transmit state that contains it (state choice
///                 is made on main-channel knowledge alone).
///   FullCsi:      sup over all (i, j) of {log2(1+main[i][j]) - log2(1+eve[i])}^+.
/// Switching has no per-block sample (std::invalid_argument); block dimensions
/// must match spec.config.
double sample_secrecy_capacity(const SimulationSpec& spec,
                               const channel::ChannelBlock& block);

/// All per-trial secrecy-capacity samples, in trial order. Deterministic for
/// a fixed spec; estimate_outage and estimate_eps_quantile see exactly these
/// values. max_threads = 0 picks the hardware concurrency.
std::vector<double> sample_capacities(const SimulationSpec& spec,
                                      unsigned max_threads = 0);

/// Fraction of trials with sampled capacity strictly below `rate` (strict,
/// so rate = 0 is outage-free against nonnegative samples). Bit-identical
/// across shard counts and thread schedules.
OutageEstimate estimate_outage(const SimulationSpec& spec, double rate,
                               unsigned max_threads = 0);

/// ceil(epsilon*trials)-th order statistic of the sampled capacities.
/// Requires trials >= 10/epsilon (std::invalid_argument otherwise: the
/// quantile would be unresolvable).
QuantileEstimate estimate_eps_quantile(const SimulationSpec& spec, double epsilon,
                                       unsigned max_threads = 0);

/// Mean over trials of (1/m) sum log2(1+gamma) with fresh main-channel draws
/// per symbol; converges to ergodic_capacity(gamma_bar_m) as m*trials grows.
/// Requires m <= q_t*q_r (a codeword cannot visit more distinct states).
ErgodicEstimate estimate_ergodic(const SimulationSpec& spec,
                                 unsigned max_threads = 0);

/// Ergodic secrecy estimate for the switching scheme: per-codeword averages
/// of both channels on the same trial stream, combined as
/// {mean_main - mean_eve}^+ with std_err of the per-codeword difference.
ErgodicEstimate estimate_switching_secrecy(const SimulationSpec& spec,
                                           unsigned max_threads = 0);

}  // namespace secrecap::mc
