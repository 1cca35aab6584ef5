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

#include <cstddef>
#include <vector>

#include "secrecap/rng.hpp"

namespace secrecap::channel {

/// Mean linear SNRs of the main (legitimate) and eavesdropper channels.
/// Both must be finite and strictly positive; dB conversion is a CLI-layer
/// concern and never happens below it.
struct ChannelParams {
  double gamma_bar_m;
  double gamma_bar_w;

  ChannelParams(double mean_snr_main, double mean_snr_eve);
};

/// Radiation-state counts of the transmit and receive antennas.
/// The state product q_t*q_r is capped at 1024 (sampling bound).
struct AntennaConfig {
  int q_t;
  int q_r;

  AntennaConfig(int transmit_states, int receive_states);
  int n_states() const { return q_t * q_r; }
};

/// One codeword's worth of channel draws: q_t x q_r main-channel SNRs
/// (row-major, row = transmit state) and q_t eavesdropper SNRs, one per
/// transmit state.
struct ChannelBlock {
  int q_t = 0;
  int q_r = 0;
  std::vector<double> main;  // q_t*q_r entries, row-major
  std::vector<double> eve;   // q_t entries

  double main_at(int i, int j) const { return main[static_cast<std::size_t>(i) * q_r + j]; }
};

/// Exponential density (1/gamma_bar)*exp(-x/gamma_bar), x >= 0.
double exp_pdf(double x, double gamma_bar);

/// Exponential CDF 1 - exp(-x/gamma_bar), x >= 0.
double exp_cdf(double x, double gamma_bar);

/// CDF of the maximum of n i.i.d. exponential draws: (1 - exp(-x/gamma_bar))^n.
double max_cdf(double x, double gamma_bar, int n);

/// Density of the maximum of n i.i.d. exponential draws in the numerically
/// stable product form n*(1-exp(-x/g))^(n-1)*exp(-x/g)/g. Valid for any n >= 1.
double max_pdf(double x, double gamma_bar, int n);

/// Same density evaluated through the alternating binomial expansion
/// n * sum_{i=0}^{n-1} C(n-1,i) (-1)^i/gamma_bar * exp(-x(i+1)/gamma_bar).
/// The expansion cancels catastrophically as n grows, so it is limited to
/// n <= 30 (std::range_error beyond; use max_pdf instead). Terms are
/// accumulated with compensated summation in extended precision and agree
/// with max_pdf to 1e-9 absolute over the supported range.
double max_pdf_binomial(double x, double gamma_bar, int n);

/// Largest n accepted by the alternating-binomial evaluations here and in
/// the selection-scheme closed forms.
inline constexpr int kMaxBinomialStates = 30;

/// Draws one ChannelBlock: q_t*q_r independent exponential(gamma_bar_m) main
/// SNRs in row-major order, then q_t independent exponential(gamma_bar_w)
/// eavesdropper SNRs, all from the supplied stream. Identical (seed, stream,
/// position) yields identical blocks.
ChannelBlock sample_block(rng::CounterRng& stream, const ChannelParams& params,
                          const AntennaConfig& config);

/// Same draw order, writing into caller-owned storage (main: q_t*q_r
/// doubles, eve: q_t doubles). The Monte Carlo engine uses this to avoid
/// per-trial allocation; both paths produce identical values.
void sample_block_into(rng::CounterRng& stream, const ChannelParams& params,
                       const AntennaConfig& config, double* main, double* eve);

}  // namespace secrecap::channel
