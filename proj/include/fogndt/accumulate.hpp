// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "fogndt/params.hpp"

namespace fogndt {

enum class Scheme { SoftTransfer = 0, NonOrthogonal = 1 };

// Power components averaged over rounds and users for one decoding stage.
// sinr is the ratio of mean signal to mean effective noise, not the mean of
// per-round ratios; that matches how the scaling fits consume it.
struct SchemeMeans {
  double signal = 0.0;
  double interference = 0.0;
  double quantization = 0.0;
  double thermal = 0.0;
  double effective_noise = 0.0;
  double sinr = 0.0;
};

// Monte-Carlo aggregate of `rounds` independent fading realizations.
struct RoundStats {
  SchemeMeans first_layer;
  SchemeMeans second_layer;
  double mean_tx_power = 0.0;
  int num_layers = 1;
  int rounds = 0;
};

// Both entry points produce bit-identical results for the same arguments:
// every round seeds its own generator via split_seed(seed, scheme, round),
// rounds are summed into fixed 256-round blocks, and the block partials are
// reduced in block order. The parallel version distributes blocks across
// OpenMP threads; the serial version is the reference the tests compare
// against.
RoundStats accumulate_rounds_serial(Scheme scheme, const SystemParams& params,
                                    int rounds, std::uint64_t seed);
RoundStats accumulate_rounds_parallel(Scheme scheme, const SystemParams& params,
                                      int rounds, std::uint64_t seed);

}  // namespace fogndt
