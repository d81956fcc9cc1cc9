// SPDX-License-Identifier: Apache-2.0
#include "fogndt/accumulate.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <vector>

#include "fogndt/rng.hpp"
#include "fogndt/sim_rounds.hpp"

namespace fogndt {
namespace {

constexpr int kBlockRounds = 256;

struct PartialSums {
  double signal1 = 0.0, interference1 = 0.0, quantization1 = 0.0, thermal1 = 0.0;
  double signal2 = 0.0, interference2 = 0.0, quantization2 = 0.0, thermal2 = 0.0;
  double tx_power = 0.0;
};

PartialSums run_block(Scheme scheme, const SystemParams& params, int begin,
                      int end, std::uint64_t seed) {
  PartialSums sums;
  for (int round = begin; round < end; ++round) {
    GaussianRng rng(split_seed(seed, static_cast<std::uint64_t>(scheme),
                               static_cast<std::uint64_t>(round)));
    SinrDecomposition d = scheme == Scheme::SoftTransfer
                              ? simulate_soft_transfer_round(params, rng)
                              : simulate_nonorthogonal_round(params, rng);
    sums.signal1 += d.first_layer.signal_power.sum();
    sums.interference1 += d.first_layer.residual_interference_power.sum();
    sums.quantization1 += d.first_layer.quantization_power.sum();
    sums.thermal1 += d.first_layer.thermal_noise_power.sum();
    if (d.num_layers > 1) {
      sums.signal2 += d.second_layer.signal_power.sum();
      sums.interference2 += d.second_layer.residual_interference_power.sum();
      sums.quantization2 += d.second_layer.quantization_power.sum();
      sums.thermal2 += d.second_layer.thermal_noise_power.sum();
    }
    sums.tx_power += d.mean_tx_power;
  }
  return sums;
}

SchemeMeans finalize_layer(double signal, double interference,
                           double quantization, double thermal, double count) {
  SchemeMeans m;
  m.signal = signal / count;
  m.interference = interference / count;
  m.quantization = quantization / count;
  m.thermal = thermal / count;
  m.effective_noise = m.interference + m.quantization + m.thermal;
  m.sinr = m.signal / m.effective_noise;
  return m;
}

RoundStats reduce_blocks(Scheme scheme, const SystemParams& params, int rounds,
                         const std::vector<PartialSums>& partials) {
  PartialSums total;
  for (const PartialSums& p : partials) {
    total.signal1 += p.signal1;
    total.interference1 += p.interference1;
    total.quantization1 += p.quantization1;
    total.thermal1 += p.thermal1;
    total.signal2 += p.signal2;
    total.interference2 += p.interference2;
    total.quantization2 += p.quantization2;
    total.thermal2 += p.thermal2;
    total.tx_power += p.tx_power;
  }
  RoundStats stats;
  stats.rounds = rounds;
  stats.num_layers = scheme == Scheme::NonOrthogonal ? 2 : 1;
  const double count = static_cast<double>(rounds) * params.num_nodes;
  stats.first_layer = finalize_layer(total.signal1, total.interference1,
                                     total.quantization1, total.thermal1, count);
  if (stats.num_layers > 1)
    stats.second_layer =
        finalize_layer(total.signal2, total.interference2, total.quantization2,
                       total.thermal2, count);
  stats.mean_tx_power = total.tx_power / rounds;
  return stats;
}

int block_count(int rounds) { return (rounds + kBlockRounds - 1) / kBlockRounds; }

}  // namespace

RoundStats accumulate_rounds_serial(Scheme scheme, const SystemParams& params,
                                    int rounds, std::uint64_t seed) {
  params.validate();
  if (rounds < 1) throw std::invalid_argument("rounds must be >= 1");
  const int blocks = block_count(rounds);
  std::vector<PartialSums> partials(blocks);
  for (int b = 0; b < blocks; ++b) {
    int begin = b * kBlockRounds;
    int end = std::min(rounds, begin + kBlockRounds);
    partials[b] = run_block(scheme, params, begin, end, seed);
  }
  return reduce_blocks(scheme, params, rounds, partials);
}

RoundStats accumulate_rounds_parallel(Scheme scheme, const SystemParams& params,
                                      int rounds, std::uint64_t seed) {
  params.validate();
  if (rounds < 1) throw std::invalid_argument("rounds must be >= 1");
  const int blocks = block_count(rounds);
  std::vector<PartialSums> partials(blocks);
  // An exception must not unwind out of the parallel region; capture the
  // first one and rethrow after the join.
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (int b = 0; b < blocks; ++b) {
    try {
      int begin = b * kBlockRounds;
      int end = std::min(rounds, begin + kBlockRounds);
      partials[b] = run_block(scheme, params, begin, end, seed);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return reduce_blocks(scheme, params, rounds, partials);
}

}  // namespace fogndt
