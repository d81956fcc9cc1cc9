// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include "fogndt/rng.hpp"

namespace fogndt {

// Rate-distortion model of the fronthaul quantizer: a signal of the given
// per-sample power carried at bits_per_sample resolution picks up additive
// complex gaussian distortion of variance noise_variance, independent of the
// signal.
struct QuantizerConfig {
  double bits_per_sample = 0.0;
  double sample_power = 0.0;
  double noise_variance = 0.0;
};

// noise_variance = sample_power / (2^bits_per_sample - 1). Requires strictly
// positive bits (zero bits cannot carry the signal at all) and nonnegative
// power.
QuantizerConfig make_quantizer(double bits_per_sample, double sample_power);

// Quantizer operating at the fronthaul rate the cloud actually gets:
// bits_per_sample = csi_quality * log2(snr).
QuantizerConfig quantizer_for_snr(double snr, double csi_quality,
                                  double sample_power);

// Apply the distortion model: independent complex gaussian noise of variance
// noise_variance added per sample.
Eigen::VectorXcd quantize_fronthaul(const Eigen::VectorXcd& samples,
                                    const QuantizerConfig& config,
                                    GaussianRng& rng);

}  // namespace fogndt
