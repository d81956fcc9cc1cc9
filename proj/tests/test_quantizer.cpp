// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "fogndt/quantizer.hpp"

using namespace fogndt;

TEST_CASE("distortion follows the rate-distortion formula") {
  CHECK_EQ(make_quantizer(1.0, 3.0).noise_variance, 3.0);
  CHECK_EQ(make_quantizer(2.0, 3.0).noise_variance, 1.0);
  CHECK_EQ(make_quantizer(10.0, 0.0).noise_variance, 0.0);
}

TEST_CASE("zero-rate and negative-power quantizers are rejected") {
  CHECK_THROWS_AS(make_quantizer(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_quantizer(-1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_quantizer(1.0, -1.0), std::invalid_argument);
}

TEST_CASE("snr-matched quantizer lands at the predicted distortion scale") {
  const double snr = std::exp2(40.0);
  QuantizerConfig config = quantizer_for_snr(snr, 0.5, snr);
  CHECK_EQ(config.bits_per_sample, doctest::Approx(20.0).epsilon(1e-12));
  double predicted = std::pow(snr, 0.5);
  CHECK_GE(config.noise_variance, 0.9 * predicted);
  CHECK_LE(config.noise_variance, 1.1 * predicted);

  CHECK_THROWS_AS(quantizer_for_snr(1.0, 0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(quantizer_for_snr(1024.0, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("a deep quantizer is transparent to within rounding dust") {
  GaussianRng rng(41);
  Eigen::VectorXcd samples(256);
  for (int i = 0; i < samples.size(); ++i)
    samples(i) = 4.0 * rng.complex_unit_gaussian();

  QuantizerConfig config = make_quantizer(60.0, 16.0);
  Eigen::VectorXcd quantized = quantize_fronthaul(samples, config, rng);
  double error_power = (quantized - samples).squaredNorm();
  CHECK_LE(error_power / samples.squaredNorm(), 1e-15);
}

TEST_CASE("quantization noise is reproducible and has the right power") {
  Eigen::VectorXcd samples = Eigen::VectorXcd::Zero(20000);
  QuantizerConfig config = make_quantizer(2.0, 9.0);  // variance 3

  GaussianRng a(51), b(51);
  Eigen::VectorXcd qa = quantize_fronthaul(samples, config, a);
  Eigen::VectorXcd qb = quantize_fronthaul(samples, config, b);
  CHECK((qa.array() == qb.array()).all());

  double measured = qa.squaredNorm() / qa.size();
  CHECK_EQ(measured, doctest::Approx(3.0).epsilon(0.03));
}
