// SPDX-License-Identifier: Apache-2.0
#include "fogndt/scaling.hpp"

#include <cmath>
#include <stdexcept>

#include "fogndt/errors.hpp"
#include "fogndt/extended_real.hpp"
#include "fogndt/ndt_calculus.hpp"
#include "fogndt/rng.hpp"

namespace fogndt {
namespace {

ExponentFit least_squares(const std::vector<double>& x,
                          const std::vector<double>& y) {
  const size_t n = x.size();
  double mean_x = 0.0, mean_y = 0.0;
  for (size_t i = 0; i < n; ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= n;
  mean_y /= n;

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double dx = x[i] - mean_x;
    double dy = y[i] - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }

  ExponentFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  if (syy == 0.0) {
    fit.r_squared = 1.0;  // flat data, flat fit
  } else {
    double residual = 0.0;
    for (size_t i = 0; i < n; ++i) {
      double e = y[i] - (fit.intercept + fit.slope * x[i]);
      residual += e * e;
    }
    double r2 = 1.0 - residual / syy;
    fit.r_squared = std::min(1.0, std::max(0.0, r2));
  }
  return fit;
}

void check_grid(const std::vector<double>& p_grid, size_t other_size) {
  if (p_grid.size() < 3)
    throw std::invalid_argument("need at least three snr grid points");
  if (p_grid.size() != other_size)
    throw std::invalid_argument("snr grid and measurement lengths differ");
  for (size_t i = 0; i < p_grid.size(); ++i) {
    if (!(p_grid[i] > 0.0))
      throw std::invalid_argument("snr values must be positive");
    if (i > 0 && !(p_grid[i] > p_grid[i - 1]))
      throw std::invalid_argument("snr grid must be strictly increasing");
  }
}

}  // namespace

ExponentFit estimate_exponent(const std::vector<double>& p_grid,
                              const std::vector<double>& measurements) {
  check_grid(p_grid, measurements.size());
  std::vector<double> x(p_grid.size()), y(p_grid.size());
  for (size_t i = 0; i < p_grid.size(); ++i) {
    if (!(measurements[i] > 0.0))
      throw std::invalid_argument("measurements must be positive");
    x[i] = std::log(p_grid[i]);
    y[i] = std::log(measurements[i]);
  }
  ExponentFit fit = least_squares(x, y);
  fit.p_grid = p_grid;
  return fit;
}

ExponentFit estimate_prelog(const std::vector<double>& p_grid,
                            const std::vector<double>& sinr_values) {
  check_grid(p_grid, sinr_values.size());
  std::vector<double> x(p_grid.size()), y(p_grid.size());
  for (size_t i = 0; i < p_grid.size(); ++i) {
    if (!(sinr_values[i] >= 0.0))
      throw std::invalid_argument("sinr values must be nonnegative");
    x[i] = std::log2(p_grid[i]);
    y[i] = std::log2(1.0 + sinr_values[i]);
  }
  ExponentFit fit = least_squares(x, y);
  fit.p_grid = p_grid;
  return fit;
}

LatencyAccount account_nonorthogonal_latency(const SystemParams& params) {
  params.validate();
  const double mu = params.cache_fraction;
  const double alpha = params.csi_quality;

  LatencyAccount account;
  account.t_f = ndt_div(1.0 - mu, params.fronthaul_rate);
  account.t_e1 = ndt_div(mu, 1.0 - alpha);
  account.t_e2 = ndt_div(1.0 - mu, alpha);

  if (alpha == 0.0 && mu < 1.0) {
    // No usable cloud CSI while uncached content is outstanding: the cloud
    // stream never completes.
    account.regime = LatencyRegime::Infeasible;
    account.t_f = kInfiniteNdt;
    account.t_e2 = kInfiniteNdt;
    account.t_e = kInfiniteNdt;
    account.total = kInfiniteNdt;
  } else if (mu < 1.0 && mu <= 1.0 - alpha) {
    // Cloud stream outlasts the cached one; the edge phase ends with it.
    // (mu = 1 always lands in the other regime: there is nothing for the
    // cloud stream to carry.)
    account.regime = LatencyRegime::CloudLimited;
    account.t_e = account.t_e2;
    account.total = account.t_f + account.t_e;
  } else {
    // Cached stream is the long pole. While the cloud stream drains, a
    // t_e2/t_e1 share of the cached content goes out underneath it; the
    // leftover is sent afterwards interference-free at one normalized unit
    // per library unit.
    account.regime = LatencyRegime::EdgeLimited;
    double drained = account.t_e2 / account.t_e1;
    account.t_e1_prime = mu * (1.0 - drained);
    account.t_e = account.t_e2 + account.t_e1_prime;
    account.total = account.t_f + account.t_e;
  }

  NdtBreakdown reference = nonorthogonal_ndt(params);
  bool both_infinite =
      !std::isfinite(account.total) && !std::isfinite(reference.total);
  if (!both_infinite) {
    double scale = std::max(1.0, std::abs(reference.total));
    if (!(std::abs(account.total - reference.total) <= 1e-12 * scale))
      throw NumericalError(
          "latency walk disagrees with the closed-form delivery time");
  }
  return account;
}

VerifyReport verify_scheme(Scheme scheme, const SystemParams& base_params,
                           const std::vector<double>& p_grid, int n_rounds,
                           std::uint64_t seed, double tolerance) {
  check_grid(p_grid, p_grid.size());
  if (p_grid.size() < 4)
    throw std::invalid_argument("verification needs at least 4 snr grid points");
  if (n_rounds < 1) throw std::invalid_argument("n_rounds must be >= 1");
  if (!(tolerance >= 0.0))
    throw std::invalid_argument("tolerance must be >= 0");
  for (double snr : p_grid)
    if (!(snr > 1.0))
      throw std::invalid_argument("snr grid values must be > 1");

  const size_t n = p_grid.size();
  std::vector<double> signal1(n), interference1(n), quantization1(n),
      noise1(n), sinr1(n), noise2(n), sinr2(n), tx_power(n);
  for (size_t i = 0; i < n; ++i) {
    SystemParams params = base_params;
    params.snr = p_grid[i];
    RoundStats stats = accumulate_rounds_parallel(
        scheme, params, n_rounds,
        split_seed(seed, 0x5eed0000ULL + static_cast<std::uint64_t>(scheme), i));
    signal1[i] = stats.first_layer.signal;
    interference1[i] = stats.first_layer.interference;
    quantization1[i] = stats.first_layer.quantization;
    noise1[i] = stats.first_layer.effective_noise;
    sinr1[i] = stats.first_layer.sinr;
    noise2[i] = stats.second_layer.effective_noise;
    sinr2[i] = stats.second_layer.sinr;
    tx_power[i] = stats.mean_tx_power;
  }

  const double alpha = base_params.csi_quality;
  VerifyReport report;
  report.scheme = scheme;
  auto add_claim = [&](const std::string& name, double theory,
                       const ExponentFit& fit) {
    ClaimResult claim;
    claim.name = name;
    claim.theory = theory;
    claim.measured = fit.slope;
    claim.r_squared = fit.r_squared;
    claim.pass = std::abs(fit.slope - theory) <= tolerance;
    report.claims.push_back(claim);
  };

  if (scheme == Scheme::SoftTransfer) {
    add_claim("soft_transfer.signal_exponent", 1.0,
              estimate_exponent(p_grid, signal1));
    add_claim("soft_transfer.interference_exponent", 1.0 - alpha,
              estimate_exponent(p_grid, interference1));
    add_claim("soft_transfer.quantization_exponent", 1.0 - alpha,
              estimate_exponent(p_grid, quantization1));
    add_claim("soft_transfer.effective_noise_exponent", 1.0 - alpha,
              estimate_exponent(p_grid, noise1));
    add_claim("soft_transfer.rate_prelog", alpha,
              estimate_prelog(p_grid, sinr1));
    add_claim("soft_transfer.tx_power_exponent", 1.0,
              estimate_exponent(p_grid, tx_power));
  } else {
    add_claim("nonorthogonal.edge_rate_prelog", 1.0 - alpha,
              estimate_prelog(p_grid, sinr1));
    add_claim("nonorthogonal.cloud_rate_prelog", alpha,
              estimate_prelog(p_grid, sinr2));
    add_claim("nonorthogonal.edge_noise_exponent", alpha,
              estimate_exponent(p_grid, noise1));
    add_claim("nonorthogonal.cloud_noise_exponent", 0.0,
              estimate_exponent(p_grid, noise2));
    add_claim("nonorthogonal.tx_power_exponent", 1.0,
              estimate_exponent(p_grid, tx_power));
  }

  report.all_pass = true;
  for (const ClaimResult& claim : report.claims)
    if (!claim.pass) report.all_pass = false;
  return report;
}

}  // namespace fogndt
