// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace fogndt {

// Draws for one simulation round. Wraps the standard 64-bit Mersenne twister
// so every consumer pulls variates through the same two entry points and a
// given seed replays the identical stream on any platform with the same
// libstdc++ normal_distribution.
class GaussianRng {
 public:
  explicit GaussianRng(std::uint64_t seed) : engine_(seed) {}

  double real_unit_gaussian() { return normal_(engine_); }

  // Circularly symmetric complex gaussian with unit total variance
  // (each component carries variance 1/2).
  std::complex<double> complex_unit_gaussian() {
    double re = normal_(engine_);
    double im = normal_(engine_);
    return {re * kHalfScale, im * kHalfScale};
  }

 private:
  static constexpr double kHalfScale = 0.70710678118654752440;  // 1/sqrt(2)
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace detail

// Deterministic seed for substream `index` of logical stream `stream` under
// one master seed. This is the only seed-splitting rule in the project:
// every round seeds its own engine through it, so results depend only on
// (master, stream, index) and never on thread count or iteration order.
inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream,
                                std::uint64_t index) {
  std::uint64_t a = detail::splitmix64(master ^ 0x8f1bbcdcbfa53e0bULL * (stream + 1));
  return detail::splitmix64(a ^ 0xd1b54a32d192ed03ULL * (index + 1));
}

}  // namespace fogndt
