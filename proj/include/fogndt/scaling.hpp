// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fogndt/accumulate.hpp"
#include "fogndt/params.hpp"

namespace fogndt {

// Least-squares fit in a log domain. slope is the estimated exponent,
// intercept the value at log x = 0, r_squared the usual coefficient of
// determination (1 for perfectly flat data), p_grid the snr grid the fit
// was computed from.
struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::vector<double> p_grid;
};

// Fit measurements ~ c * snr^slope via ln-ln regression. Needs at least
// three strictly increasing positive snr points and positive measurements.
ExponentFit estimate_exponent(const std::vector<double>& p_grid,
                              const std::vector<double>& measurements);

// Fit the rate curve log2(1 + sinr) ~ slope * log2(snr) + c; the slope
// estimates the rate prelog. sinr entries must be nonnegative.
ExponentFit estimate_prelog(const std::vector<double>& p_grid,
                            const std::vector<double>& sinr_values);

// Which stream keeps the superposed edge phase busy until the end.
enum class LatencyRegime { CloudLimited, EdgeLimited, Infeasible };

// Explicit walk of the superposition schedule in normalized time units.
// t_f: fronthaul burst; t_e1 / t_e2: stand-alone durations of the cached and
// cloud streams; t_e1_prime: leftover cached content sent at full rate after
// the cloud stream drains (zero when the cloud stream finishes last); t_e:
// the resulting edge phase length; total = t_f + t_e.
struct LatencyAccount {
  LatencyRegime regime = LatencyRegime::Infeasible;
  double t_f = 0.0;
  double t_e1 = 0.0;
  double t_e2 = 0.0;
  double t_e1_prime = 0.0;
  double t_e = 0.0;
  double total = 0.0;
};

// Compose the schedule step by step and cross-check the resulting total
// against nonorthogonal_ndt at run time; a disagreement beyond rounding
// noise throws NumericalError. csi_quality = 0 with uncached content yields
// the infeasible marker rather than an error.
LatencyAccount account_nonorthogonal_latency(const SystemParams& params);

// One high-snr scaling claim checked against simulation.
struct ClaimResult {
  std::string name;
  double theory = 0.0;
  double measured = 0.0;
  double r_squared = 0.0;
  bool pass = false;
};

struct VerifyReport {
  Scheme scheme = Scheme::SoftTransfer;
  std::vector<ClaimResult> claims;
  bool all_pass = false;
};

// Run the Monte-Carlo accumulator across the snr grid and fit every scaling
// claim the scheme makes: power-law exponents of the received components and
// of the per-node transmit power, and the rate prelogs. A claim passes when
// its fitted slope lands within tolerance of the high-snr theory value.
VerifyReport verify_scheme(Scheme scheme, const SystemParams& base_params,
                           const std::vector<double>& p_grid, int n_rounds,
                           std::uint64_t seed, double tolerance);

}  // namespace fogndt
