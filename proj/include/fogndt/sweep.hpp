// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "fogndt/errors.hpp"
#include "fogndt/ndt_calculus.hpp"
#include "fogndt/scaling.hpp"

namespace fogndt {

inline constexpr const char* kToolName = "fogndt";
inline constexpr const char* kToolVersion = "0.1.0";

enum class RunMode { NdtSweep, SimVerify };
enum class SweepVariable { Mu, Alpha, R };

// Order follows the curve names lexicographically; output rows sort by name.
enum class CurveKind {
  CloudHard,
  CloudSoft,
  Combined,
  EdgeIa,
  EdgeZf,
  NonOrthogonal,
  Orthogonal,
};

const char* run_mode_name(RunMode mode);
const char* sweep_variable_name(SweepVariable variable);
const char* curve_kind_name(CurveKind curve);

// One run, fully described. Defaults reproduce the standard verification
// setup; a sweep additionally needs the swept variable and the fixed system
// parameters spelled out. provided_keys records which keys were given
// explicitly (file or override) so finalize_config can tell a default from
// an omission; it does not take part in equality.
struct SweepConfig {
  RunMode mode = RunMode::NdtSweep;
  int num_nodes = 2;                  // key K
  double cache_fraction = 0.5;        // key mu
  double fronthaul_rate = 2.0;        // key r
  double csi_quality = 2.0 / 3.0;     // key alpha
  SweepVariable sweep = SweepVariable::Mu;
  double grid_start = 0.0;
  double grid_stop = 1.0;
  int grid_count = 101;
  std::vector<CurveKind> curves = {CurveKind::Combined, CurveKind::NonOrthogonal,
                                   CurveKind::Orthogonal};
  std::uint64_t seed = 0;
  int rounds = 10000;
  double p_exp_start = 10.0;  // log2 of the lowest snr grid point
  double p_exp_stop = 40.0;
  int p_count = 7;
  double tolerance = 0.05;
  std::string out_path;

  std::set<std::string> provided_keys;

  bool provided(const std::string& key) const {
    return provided_keys.count(key) > 0;
  }
};

bool operator==(const SweepConfig& a, const SweepConfig& b);

// Parse the flat key-value document (one `key = value` per line, `#` starts
// a comment) without checking required keys, so a command line can still
// fill the gaps. Unknown keys and out-of-domain values throw ConfigError
// with the offending line number.
SweepConfig parse_config_text(const std::string& text);

// Apply one `key = value` override on top of an existing config (the --set
// path); same key set and domain checks as the file grammar.
void apply_override(SweepConfig& config, const std::string& key,
                    const std::string& value);

// Check required keys and cross-field constraints for the configured mode.
// Throws ConfigError naming the offending field (line 0: not tied to a
// single config line).
void finalize_config(const SweepConfig& config);

// Full parse: text -> validated config. Defaults are filled for everything
// the mode does not require explicitly.
SweepConfig parse_config(const std::string& text);

// Canonical echo of every field, one key per line, in a fixed order.
// Parsing the result reproduces the config exactly.
std::string serialize_config(const SweepConfig& config);

struct SweepRow {
  double value = 0.0;
  CurveKind curve = CurveKind::Orthogonal;
  NdtBreakdown breakdown;
};

// Evaluate the configured curves on the sweep grid (endpoints inclusive,
// curve breakpoints force-included) and return rows sorted by (sweep value,
// curve name). Pure formula evaluation; the seed plays no role here.
std::vector<SweepRow> run_ndt_sweep(const SweepConfig& config);

struct SimVerifyResult {
  std::vector<ClaimResult> claims;
  bool all_pass = false;
};

// Verify both simulated schemes' scaling claims on the configured snr grid.
// A scheme whose simulation fails outright contributes a single failed
// claim naming the error instead of aborting the run.
SimVerifyResult run_sim_verify(const SweepConfig& config);

// CSV writers. Infinite values use the literal token "inf".
std::string write_ndt_csv(const SweepConfig& config,
                          const std::vector<SweepRow>& rows);
std::string write_verify_csv(const SimVerifyResult& result);

// Sidecar run manifest: tool version plus the canonical config echo. No
// timestamps, so reruns produce identical bytes.
std::string write_manifest(const SweepConfig& config);

const char* default_out_path(RunMode mode);

}  // namespace fogndt
