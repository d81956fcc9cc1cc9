// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include "fogndt/rng.hpp"

namespace fogndt {

// One fading realization together with the cloud's degraded view of it.
// Row k holds user k's coefficients from all edge nodes. The decomposition
// true_channel == cloud_estimate + innovation holds bit-exactly: the pieces
// are constructed first and the sum is stored as the truth.
struct ChannelState {
  Eigen::MatrixXcd true_channel;
  Eigen::MatrixXcd cloud_estimate;
  Eigen::MatrixXcd innovation;
};

// K x K i.i.d. unit-variance Rayleigh fading matrix; entries drawn row-major.
Eigen::MatrixXcd draw_channel(int num_nodes, GaussianRng& rng);

// Cloud-side CSI degradation: estimation error with per-entry variance
// snr^-csi_quality is added entry by entry (row-major), then the true matrix
// is re-expressed as estimate + innovation. snr must exceed 1 and
// csi_quality lie in [0, 1].
ChannelState degrade_csi(const Eigen::MatrixXcd& channel, double snr,
                         double csi_quality, GaussianRng& rng);

}  // namespace fogndt
