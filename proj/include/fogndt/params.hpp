// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace fogndt {

// Operating point of a cache-aided cloud/edge downlink: K single-antenna edge
// nodes serving K users, each node caching a fraction mu of the library,
// fronthaul carrying r bits per edge symbol, and cloud CSI whose error decays
// as snr^-csi_quality.
struct SystemParams {
  int num_nodes = 2;          // K >= 1
  double cache_fraction = 0.5;   // mu in [0, 1]
  double fronthaul_rate = 2.0;   // r >= 0, in bits per edge channel use / log P
  double csi_quality = 2.0 / 3.0;  // alpha in [0, 1]
  double snr = 1024.0;           // P > 1, linear scale

  void validate() const {
    if (num_nodes < 1) throw std::invalid_argument("num_nodes must be >= 1");
    if (!(cache_fraction >= 0.0 && cache_fraction <= 1.0))
      throw std::invalid_argument("cache_fraction must lie in [0, 1]");
    if (!(fronthaul_rate >= 0.0))
      throw std::invalid_argument("fronthaul_rate must be >= 0");
    if (!(csi_quality >= 0.0 && csi_quality <= 1.0))
      throw std::invalid_argument("csi_quality must lie in [0, 1]");
    if (!(snr > 1.0)) throw std::invalid_argument("snr must be > 1");
  }
};

}  // namespace fogndt
