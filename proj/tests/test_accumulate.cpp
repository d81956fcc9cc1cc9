// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "fogndt/accumulate.hpp"

using namespace fogndt;

namespace {

bool means_identical(const SchemeMeans& a, const SchemeMeans& b) {
  return a.signal == b.signal && a.interference == b.interference &&
         a.quantization == b.quantization && a.thermal == b.thermal &&
         a.effective_noise == b.effective_noise && a.sinr == b.sinr;
}

bool stats_identical(const RoundStats& a, const RoundStats& b) {
  return means_identical(a.first_layer, b.first_layer) &&
         means_identical(a.second_layer, b.second_layer) &&
         a.mean_tx_power == b.mean_tx_power && a.num_layers == b.num_layers &&
         a.rounds == b.rounds;
}

SystemParams accum_params(int k) {
  SystemParams p;
  p.num_nodes = k;
  p.snr = 1 << 14;
  return p;
}

}  // namespace

TEST_CASE("serial and parallel accumulation agree bit for bit") {
  for (Scheme scheme : {Scheme::SoftTransfer, Scheme::NonOrthogonal}) {
    for (int k : {2, 3}) {
      for (int rounds : {1, 255, 256, 257, 1000}) {
        RoundStats serial =
            accumulate_rounds_serial(scheme, accum_params(k), rounds, 97);
        RoundStats parallel =
            accumulate_rounds_parallel(scheme, accum_params(k), rounds, 97);
        CHECK(stats_identical(serial, parallel));
      }
    }
  }
}

TEST_CASE("the seed fully determines the aggregate") {
  RoundStats a =
      accumulate_rounds_parallel(Scheme::SoftTransfer, accum_params(2), 600, 5);
  RoundStats b =
      accumulate_rounds_parallel(Scheme::SoftTransfer, accum_params(2), 600, 5);
  RoundStats c =
      accumulate_rounds_parallel(Scheme::SoftTransfer, accum_params(2), 600, 6);
  CHECK(stats_identical(a, b));
  CHECK_FALSE(a.first_layer.signal == c.first_layer.signal);
}

TEST_CASE("the two schemes draw from distinct random streams") {
  RoundStats soft =
      accumulate_rounds_serial(Scheme::SoftTransfer, accum_params(2), 100, 7);
  RoundStats super =
      accumulate_rounds_serial(Scheme::NonOrthogonal, accum_params(2), 100, 7);
  CHECK_FALSE(soft.first_layer.signal == super.first_layer.signal);
  CHECK_EQ(soft.num_layers, 1);
  CHECK_EQ(super.num_layers, 2);
}

TEST_CASE("aggregate means compose consistently") {
  RoundStats stats = accumulate_rounds_parallel(Scheme::NonOrthogonal,
                                                accum_params(3), 500, 11);
  CHECK_EQ(stats.rounds, 500);
  for (const SchemeMeans* layer : {&stats.first_layer, &stats.second_layer}) {
    double recomposed = layer->interference + layer->quantization + layer->thermal;
    CHECK_EQ(layer->effective_noise,
             doctest::Approx(recomposed).epsilon(1e-12));
    CHECK_EQ(layer->sinr,
             doctest::Approx(layer->signal / layer->effective_noise)
                 .epsilon(1e-12));
    CHECK_EQ(layer->thermal, doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("accumulation rejects bad arguments") {
  CHECK_THROWS_AS(
      accumulate_rounds_serial(Scheme::SoftTransfer, accum_params(2), 0, 1),
      std::invalid_argument);
  CHECK_THROWS_AS(
      accumulate_rounds_parallel(Scheme::SoftTransfer, accum_params(1), 10, 1),
      std::invalid_argument);
  SystemParams p = accum_params(2);
  p.cache_fraction = 1.0;
  CHECK_THROWS_AS(
      accumulate_rounds_parallel(Scheme::NonOrthogonal, p, 10, 1),
      std::invalid_argument);
}
