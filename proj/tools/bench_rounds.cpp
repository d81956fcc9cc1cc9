// SPDX-License-Identifier: Apache-2.0
//
// Times the serial reference accumulator against the OpenMP one and checks
// that they agree bit for bit. Usage: bench_rounds [rounds], default 20000.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "fogndt/accumulate.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double run_timed(fogndt::RoundStats (*fn)(fogndt::Scheme,
                                          const fogndt::SystemParams&, int,
                                          std::uint64_t),
                 fogndt::Scheme scheme, const fogndt::SystemParams& params,
                 int rounds, fogndt::RoundStats* out) {
  auto start = std::chrono::steady_clock::now();
  *out = fn(scheme, params, rounds, 1234);
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

bool bits_equal(const fogndt::SchemeMeans& a, const fogndt::SchemeMeans& b) {
  return std::memcmp(&a, &b, sizeof a) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  int rounds = argc > 1 ? std::atoi(argv[1]) : 20000;
  if (rounds < 1) {
    std::fprintf(stderr, "usage: bench_rounds [rounds >= 1]\n");
    return 1;
  }

#ifdef _OPENMP
  std::printf("openmp: %d thread(s)\n", omp_get_max_threads());
#else
  std::printf("openmp: not compiled in\n");
#endif
  std::printf("%d rounds per cell\n\n", rounds);
  std::printf("%-16s %2s %12s %12s %8s %10s\n", "scheme", "K", "serial ms",
              "parallel ms", "speedup", "bit-match");

  bool all_match = true;
  for (fogndt::Scheme scheme :
       {fogndt::Scheme::SoftTransfer, fogndt::Scheme::NonOrthogonal}) {
    for (int k : {2, 3}) {
      fogndt::SystemParams params;
      params.num_nodes = k;
      params.snr = 1 << 20;
      fogndt::RoundStats serial, parallel;
      double serial_ms = run_timed(fogndt::accumulate_rounds_serial, scheme,
                                   params, rounds, &serial);
      double parallel_ms = run_timed(fogndt::accumulate_rounds_parallel,
                                     scheme, params, rounds, &parallel);
      bool match = bits_equal(serial.first_layer, parallel.first_layer) &&
                   bits_equal(serial.second_layer, parallel.second_layer) &&
                   serial.mean_tx_power == parallel.mean_tx_power;
      all_match = all_match && match;
      std::printf("%-16s %2d %12.1f %12.1f %7.2fx %10s\n",
                  scheme == fogndt::Scheme::SoftTransfer ? "soft-transfer"
                                                         : "nonorthogonal",
                  k, serial_ms, parallel_ms, serial_ms / parallel_ms,
                  match ? "yes" : "NO");
    }
  }
  if (!all_match) {
    std::fprintf(stderr, "\nserial and parallel results differ\n");
    return 1;
  }
  return 0;
}
