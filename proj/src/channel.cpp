// SPDX-License-Identifier: Apache-2.0
#include "fogndt/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace fogndt {

Eigen::MatrixXcd draw_channel(int num_nodes, GaussianRng& rng) {
  if (num_nodes < 1) throw std::invalid_argument("num_nodes must be >= 1");
  Eigen::MatrixXcd h(num_nodes, num_nodes);
  for (int row = 0; row < num_nodes; ++row)
    for (int col = 0; col < num_nodes; ++col)
      h(row, col) = rng.complex_unit_gaussian();
  return h;
}

ChannelState degrade_csi(const Eigen::MatrixXcd& channel, double snr,
                         double csi_quality, GaussianRng& rng) {
  if (channel.rows() != channel.cols() || channel.rows() < 1)
    throw std::invalid_argument("channel matrix must be square");
  if (!(snr > 1.0)) throw std::invalid_argument("snr must be > 1");
  if (!(csi_quality >= 0.0 && csi_quality <= 1.0))
    throw std::invalid_argument("csi_quality must lie in [0, 1]");

  const double error_scale = std::sqrt(std::pow(snr, -csi_quality));
  ChannelState state;
  state.cloud_estimate = channel;
  for (int row = 0; row < channel.rows(); ++row)
    for (int col = 0; col < channel.cols(); ++col)
      state.cloud_estimate(row, col) += error_scale * rng.complex_unit_gaussian();
  state.innovation = channel - state.cloud_estimate;
  // Re-derive the truth so the additive decomposition is exact in floating
  // point, not just up to rounding of the subtraction above.
  state.true_channel = state.cloud_estimate + state.innovation;
  return state;
}

}  // namespace fogndt
