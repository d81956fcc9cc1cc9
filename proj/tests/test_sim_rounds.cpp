// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "fogndt/sim_rounds.hpp"

using namespace fogndt;

namespace {

SystemParams sim_params(int k, double alpha, double snr, double mu = 0.5) {
  SystemParams p;
  p.num_nodes = k;
  p.cache_fraction = mu;
  p.csi_quality = alpha;
  p.snr = snr;
  return p;
}

ChannelState perfect_csi_state(int k, std::uint64_t seed) {
  GaussianRng rng(seed);
  ChannelState state;
  state.true_channel = draw_channel(k, rng);
  state.cloud_estimate = state.true_channel;
  state.innovation = Eigen::MatrixXcd::Zero(k, k);
  return state;
}

bool layers_equal(const LayerPowers& a, const LayerPowers& b) {
  return (a.signal_power.array() == b.signal_power.array()).all() &&
         (a.residual_interference_power.array() ==
          b.residual_interference_power.array())
             .all() &&
         (a.quantization_power.array() == b.quantization_power.array()).all() &&
         (a.thermal_noise_power.array() == b.thermal_noise_power.array()).all();
}

}  // namespace

TEST_CASE("perfect csi removes soft-transfer interference exactly") {
  ChannelState state = perfect_csi_state(3, 61);
  SinrDecomposition d =
      soft_transfer_decomposition(state, sim_params(3, 0.5, 4096.0));
  CHECK_EQ(d.num_layers, 1);
  CHECK_EQ(d.second_layer.signal_power.size(), 0);
  for (int k = 0; k < 3; ++k) {
    CHECK_EQ(d.first_layer.residual_interference_power(k), 0.0);
    CHECK_GT(d.first_layer.signal_power(k), 0.0);
    CHECK_GT(d.first_layer.quantization_power(k), 0.0);
    CHECK_EQ(d.first_layer.thermal_noise_power(k), 1.0);
  }
  CHECK_GT(d.mean_tx_power, 0.0);
}

TEST_CASE("perfect csi silences the stripped cloud layer exactly") {
  ChannelState state = perfect_csi_state(3, 67);
  SinrDecomposition d =
      nonorthogonal_decomposition(state, sim_params(3, 0.5, 4096.0));
  CHECK_EQ(d.num_layers, 2);
  for (int k = 0; k < 3; ++k) {
    CHECK_EQ(d.second_layer.residual_interference_power(k), 0.0);
    // The edge layer still sees the whole cloud layer in band.
    CHECK_GT(d.first_layer.residual_interference_power(k), 0.0);
    CHECK_GT(d.first_layer.signal_power(k), 0.0);
    CHECK_GT(d.second_layer.signal_power(k), 0.0);
    CHECK_EQ(d.first_layer.thermal_noise_power(k), 1.0);
    CHECK_EQ(d.second_layer.thermal_noise_power(k), 1.0);
  }
}

TEST_CASE("simulated rounds are deterministic in the seed") {
  SystemParams p = sim_params(3, 2.0 / 3.0, 1 << 16);

  GaussianRng a(71), b(71), c(72);
  SinrDecomposition da = simulate_soft_transfer_round(p, a);
  SinrDecomposition db = simulate_soft_transfer_round(p, b);
  SinrDecomposition dc = simulate_soft_transfer_round(p, c);
  CHECK(layers_equal(da.first_layer, db.first_layer));
  CHECK_EQ(da.mean_tx_power, db.mean_tx_power);
  CHECK_FALSE(da.mean_tx_power == dc.mean_tx_power);

  GaussianRng e(73), f(73);
  SinrDecomposition de = simulate_nonorthogonal_round(p, e);
  SinrDecomposition df = simulate_nonorthogonal_round(p, f);
  CHECK(layers_equal(de.first_layer, df.first_layer));
  CHECK(layers_equal(de.second_layer, df.second_layer));
}

TEST_CASE("all simulated powers are nonnegative") {
  SystemParams p = sim_params(4, 0.4, 2048.0);
  GaussianRng rng(79);
  for (int round = 0; round < 50; ++round) {
    SinrDecomposition d = simulate_nonorthogonal_round(p, rng);
    for (int k = 0; k < 4; ++k) {
      CHECK_GE(d.first_layer.signal_power(k), 0.0);
      CHECK_GE(d.first_layer.residual_interference_power(k), 0.0);
      CHECK_GE(d.first_layer.quantization_power(k), 0.0);
      CHECK_GE(d.second_layer.residual_interference_power(k), 0.0);
      CHECK_GE(d.second_layer.quantization_power(k), 0.0);
    }
  }
}

TEST_CASE("simulation preconditions are enforced") {
  GaussianRng rng(83);
  CHECK_THROWS_AS(simulate_soft_transfer_round(sim_params(1, 0.5, 100.0), rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(simulate_soft_transfer_round(sim_params(2, 0.0, 100.0), rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(simulate_soft_transfer_round(sim_params(2, 0.5, 1.0), rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      simulate_nonorthogonal_round(sim_params(2, 0.5, 100.0, 0.0), rng),
      std::invalid_argument);
  CHECK_THROWS_AS(
      simulate_nonorthogonal_round(sim_params(2, 0.5, 100.0, 1.0), rng),
      std::invalid_argument);

  ChannelState state = perfect_csi_state(2, 89);
  CHECK_THROWS_AS(soft_transfer_decomposition(state, sim_params(3, 0.5, 100.0)),
                  std::invalid_argument);
}
