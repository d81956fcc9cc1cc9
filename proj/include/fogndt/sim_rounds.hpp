// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include "fogndt/channel.hpp"
#include "fogndt/params.hpp"
#include "fogndt/rng.hpp"

namespace fogndt {

// Per-user received-power split for one decoding stage. Entry k belongs to
// user k. residual_interference_power holds only in-band power the receiver
// cannot remove at this stage; quantization and thermal terms are kept apart
// so their growth with snr can be fitted separately.
struct LayerPowers {
  Eigen::VectorXd signal_power;
  Eigen::VectorXd residual_interference_power;
  Eigen::VectorXd quantization_power;
  Eigen::VectorXd thermal_noise_power;
};

// Signal-level outcome of one fading realization. Soft transfer has a single
// decoding stage (first_layer; second_layer left empty). The superposition
// scheme decodes the edge layer first with the whole cloud layer in band,
// then the cloud layer after the edge layer is stripped, leaving only the
// misalignment residue. Quantization noise enters through its distortion
// variance rather than a drawn sample, so equal seeds give bit-identical
// decompositions.
struct SinrDecomposition {
  LayerPowers first_layer;
  LayerPowers second_layer;
  double mean_tx_power = 0.0;
  int num_layers = 1;
};

// Cloud precodes on its channel estimate with per-stream power snr/K and
// ships the samples through the rate-limited quantizer. Residual
// interference at user k is the estimation-error leakage of the other
// streams, so a zero innovation makes it exactly zero. Needs at least two
// nodes and csi_quality > 0.
SinrDecomposition soft_transfer_decomposition(const ChannelState& channel,
                                              const SystemParams& params);

// Edge layer zero-forced on the true channel at per-stream power snr/(2K),
// cloud layer precoded on the estimate at snr^csi_quality/(2K) and
// quantized. Layer one sees the whole cloud layer in band; layer two only
// the leakage residue. Needs at least two nodes, csi_quality > 0, and a
// cache fraction strictly inside (0, 1) so both layers exist.
SinrDecomposition nonorthogonal_decomposition(const ChannelState& channel,
                                              const SystemParams& params);

// Draw a fresh fading realization and degraded cloud estimate, then apply
// the corresponding decomposition.
SinrDecomposition simulate_soft_transfer_round(const SystemParams& params,
                                               GaussianRng& rng);
SinrDecomposition simulate_nonorthogonal_round(const SystemParams& params,
                                               GaussianRng& rng);

}  // namespace fogndt
