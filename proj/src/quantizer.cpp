// SPDX-License-Identifier: Apache-2.0
#include "fogndt/quantizer.hpp"

#include <cmath>
#include <stdexcept>

namespace fogndt {

QuantizerConfig make_quantizer(double bits_per_sample, double sample_power) {
  if (!(bits_per_sample > 0.0))
    throw std::invalid_argument("bits_per_sample must be > 0");
  if (!(sample_power >= 0.0))
    throw std::invalid_argument("sample_power must be >= 0");
  QuantizerConfig config;
  config.bits_per_sample = bits_per_sample;
  config.sample_power = sample_power;
  config.noise_variance = sample_power / (std::exp2(bits_per_sample) - 1.0);
  return config;
}

QuantizerConfig quantizer_for_snr(double snr, double csi_quality,
                                  double sample_power) {
  if (!(snr > 1.0)) throw std::invalid_argument("snr must be > 1");
  return make_quantizer(csi_quality * std::log2(snr), sample_power);
}

Eigen::VectorXcd quantize_fronthaul(const Eigen::VectorXcd& samples,
                                    const QuantizerConfig& config,
                                    GaussianRng& rng) {
  const double scale = std::sqrt(config.noise_variance);
  Eigen::VectorXcd out = samples;
  for (int i = 0; i < out.size(); ++i)
    out(i) += scale * rng.complex_unit_gaussian();
  return out;
}

}  // namespace fogndt
