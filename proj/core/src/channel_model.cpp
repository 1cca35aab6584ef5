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

#include "secrecap/channel_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace secrecap::channel {

namespace {

void check_gamma_bar(double gamma_bar) {
  if (!(gamma_bar > 0.0) || !std::isfinite(gamma_bar)) {
    throw std::domain_error("mean SNR must be finite and > 0");
  }
}

void check_nonnegative(double x, const char* who) {
  if (std::isnan(x) || x < 0.0) {
    throw std::domain_error(std::string(who) + ": x must be >= 0");
  }
}

}  // namespace

ChannelParams::ChannelParams(double mean_snr_main, double mean_snr_eve)
    : gamma_bar_m(mean_snr_main), gamma_bar_w(mean_snr_eve) {
  check_gamma_bar(gamma_bar_m);
  check_gamma_bar(gamma_bar_w);
}

AntennaConfig::AntennaConfig(int transmit_states, int receive_states)
    : q_t(transmit_states), q_r(receive_states) {
  if (q_t < 1 || q_r < 1) {
    throw std::domain_error("AntennaConfig: state counts must be >= 1");
  }
  if (static_cast<long long>(q_t) * q_r > 1024) {
    throw std::domain_error("AntennaConfig: q_t*q_r exceeds the sampling bound of 1024");
  }
}

double exp_pdf(double x, double gamma_bar) {
  check_gamma_bar(gamma_bar);
  check_nonnegative(x, "exp_pdf");
  return std::exp(-x / gamma_bar) / gamma_bar;
}

double exp_cdf(double x, double gamma_bar) {
  check_gamma_bar(gamma_bar);
  check_nonnegative(x, "exp_cdf");
  return -std::expm1(-x / gamma_bar);
}

double max_cdf(double x, double gamma_bar, int n) {
  if (n < 1) throw std::domain_error("max_cdf: n must be >= 1");
  return std::pow(exp_cdf(x, gamma_bar), n);
}

double max_pdf(double x, double gamma_bar, int n) {
  if (n < 1) throw std::domain_error("max_pdf: n must be >= 1");
  check_gamma_bar(gamma_bar);
  check_nonnegative(x, "max_pdf");
  const double u = std::exp(-x / gamma_bar);
  const double cdf = -std::expm1(-x / gamma_bar);
  return n * std::pow(cdf, n - 1) * u / gamma_bar;
}

double max_pdf_binomial(double x, double gamma_bar, int n) {
  if (n < 1) throw std::domain_error("max_pdf_binomial: n must be >= 1");
  if (n > kMaxBinomialStates) {
    throw std::range_error("max_pdf_binomial: n > 30 is numerically unstable; use max_pdf");
  }
  check_gamma_bar(gamma_bar);
  check_nonnegative(x, "max_pdf_binomial");

  const long double u = std::exp(static_cast<long double>(-x / gamma_bar));
  long double sum = 0.0L;
  long double comp = 0.0L;  // Kahan carry
  long double binom = 1.0L;  // C(n-1, i)
  long double sign = 1.0L;
  long double u_pow = u;  // u^(i+1)
  for (int i = 0; i < n; ++i) {
    const long double term = sign * binom * u_pow;
    const long double y = term - comp;
    const long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    binom = binom * (n - 1 - i) / (i + 1.0L);
    sign = -sign;
    u_pow *= u;
  }
  const double value = static_cast<double>(sum * n / gamma_bar);
  return value < 0.0 ? 0.0 : value;
}

void sample_block_into(rng::CounterRng& stream, const ChannelParams& params,
                       const AntennaConfig& config, double* main, double* eve) {
  const int total = config.n_states();
  for (int k = 0; k < total; ++k) {
    main[k] = stream.next_exponential(params.gamma_bar_m);
  }
  for (int i = 0; i < config.q_t; ++i) {
    eve[i] = stream.next_exponential(params.gamma_bar_w);
  }
}

ChannelBlock sample_block(rng::CounterRng& stream, const ChannelParams& params,
                          const AntennaConfig& config) {
  ChannelBlock block;
  block.q_t = config.q_t;
  block.q_r = config.q_r;
  block.main.resize(static_cast<std::size_t>(config.n_states()));
  block.eve.resize(static_cast<std::size_t>(config.q_t));
  sample_block_into(stream, params, config, block.main.data(), block.eve.data());
  return block;
}

}  // namespace secrecap::channel
