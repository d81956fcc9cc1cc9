// SPDX-License-Identifier: Apache-2.0
#include "fogndt/sim_rounds.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "fogndt/precoder.hpp"
#include "fogndt/quantizer.hpp"

namespace fogndt {
namespace {

void check_simulable(const SystemParams& params) {
  params.validate();
  if (params.num_nodes < 2)
    throw std::invalid_argument("signal-level rounds need num_nodes >= 2");
  if (!(params.csi_quality > 0.0))
    throw std::invalid_argument("signal-level rounds need csi_quality > 0");
}

void check_state(const ChannelState& channel, const SystemParams& params) {
  if (channel.true_channel.rows() != params.num_nodes ||
      channel.true_channel.cols() != params.num_nodes)
    throw std::invalid_argument("channel state does not match num_nodes");
}

LayerPowers make_layer(int num_nodes) {
  LayerPowers layer;
  layer.signal_power = Eigen::VectorXd::Zero(num_nodes);
  layer.residual_interference_power = Eigen::VectorXd::Zero(num_nodes);
  layer.quantization_power = Eigen::VectorXd::Zero(num_nodes);
  layer.thermal_noise_power = Eigen::VectorXd::Ones(num_nodes);
  return layer;
}

}  // namespace

SinrDecomposition soft_transfer_decomposition(const ChannelState& channel,
                                              const SystemParams& params) {
  check_simulable(params);
  check_state(channel, params);
  const int num_nodes = params.num_nodes;
  const double stream_power = params.snr / num_nodes;
  const QuantizerConfig quantizer =
      quantizer_for_snr(params.snr, params.csi_quality, stream_power);

  PrecoderSet cloud =
      zf_precoders(channel.cloud_estimate, CsiBasis::CloudEstimate);
  // gains(k, j): user k's coupling into stream j. Cross couplings under the
  // estimate-based precoder equal the innovation's couplings, because the
  // estimate's own contribution lies in the forced null space; computing
  // them from the innovation keeps that identity at the arithmetic level.
  Eigen::MatrixXcd gains = channel.true_channel * cloud.vectors;
  Eigen::MatrixXcd leakage = channel.innovation * cloud.vectors;

  SinrDecomposition out;
  out.num_layers = 1;
  out.first_layer = make_layer(num_nodes);
  for (int k = 0; k < num_nodes; ++k) {
    out.first_layer.signal_power(k) = std::norm(gains(k, k)) * stream_power;
    double cross = 0.0;
    for (int j = 0; j < num_nodes; ++j)
      if (j != k) cross += std::norm(leakage(k, j));
    out.first_layer.residual_interference_power(k) = cross * stream_power;
    out.first_layer.quantization_power(k) =
        channel.true_channel.row(k).squaredNorm() * quantizer.noise_variance;
  }
  out.mean_tx_power = cloud.vectors.squaredNorm() * stream_power / num_nodes +
                      quantizer.noise_variance;
  return out;
}

SinrDecomposition nonorthogonal_decomposition(const ChannelState& channel,
                                              const SystemParams& params) {
  check_simulable(params);
  check_state(channel, params);
  if (!(params.cache_fraction > 0.0 && params.cache_fraction < 1.0))
    throw std::invalid_argument(
        "superposition rounds need cache_fraction strictly inside (0, 1)");
  const int num_nodes = params.num_nodes;
  const double edge_power = params.snr / (2.0 * num_nodes);
  const double cloud_power =
      std::pow(params.snr, params.csi_quality) / (2.0 * num_nodes);
  const QuantizerConfig quantizer =
      quantizer_for_snr(params.snr, params.csi_quality, cloud_power);

  PrecoderSet edge = zf_precoders(channel.true_channel, CsiBasis::TrueChannel);
  PrecoderSet cloud =
      zf_precoders(channel.cloud_estimate, CsiBasis::CloudEstimate);
  Eigen::MatrixXcd edge_gains = channel.true_channel * edge.vectors;
  Eigen::MatrixXcd cloud_gains = channel.true_channel * cloud.vectors;
  Eigen::MatrixXcd cloud_leakage = channel.innovation * cloud.vectors;

  SinrDecomposition out;
  out.num_layers = 2;
  out.first_layer = make_layer(num_nodes);
  out.second_layer = make_layer(num_nodes);
  for (int k = 0; k < num_nodes; ++k) {
    double quantization =
        channel.true_channel.row(k).squaredNorm() * quantizer.noise_variance;
    double cross = 0.0;
    for (int j = 0; j < num_nodes; ++j)
      if (j != k) cross += std::norm(cloud_leakage(k, j));

    // Stage one: cached-content stream. The other edge streams are nulled on
    // the true channel (identically absent here), so the in-band
    // interference is the whole cloud layer.
    out.first_layer.signal_power(k) = std::norm(edge_gains(k, k)) * edge_power;
    out.first_layer.residual_interference_power(k) =
        std::norm(cloud_gains(k, k)) * cloud_power + cross * cloud_power;
    out.first_layer.quantization_power(k) = quantization;

    // Stage two: cloud stream after the cached layer is stripped. Only the
    // estimation-error leakage of the other cloud streams survives.
    out.second_layer.signal_power(k) = std::norm(cloud_gains(k, k)) * cloud_power;
    out.second_layer.residual_interference_power(k) = cross * cloud_power;
    out.second_layer.quantization_power(k) = quantization;
  }
  out.mean_tx_power = (edge.vectors.squaredNorm() * edge_power +
                       cloud.vectors.squaredNorm() * cloud_power) /
                          num_nodes +
                      quantizer.noise_variance;
  return out;
}

SinrDecomposition simulate_soft_transfer_round(const SystemParams& params,
                                               GaussianRng& rng) {
  check_simulable(params);
  Eigen::MatrixXcd h = draw_channel(params.num_nodes, rng);
  ChannelState state = degrade_csi(h, params.snr, params.csi_quality, rng);
  return soft_transfer_decomposition(state, params);
}

SinrDecomposition simulate_nonorthogonal_round(const SystemParams& params,
                                               GaussianRng& rng) {
  check_simulable(params);
  Eigen::MatrixXcd h = draw_channel(params.num_nodes, rng);
  ChannelState state = degrade_csi(h, params.snr, params.csi_quality, rng);
  return nonorthogonal_decomposition(state, params);
}

}  // namespace fogndt
