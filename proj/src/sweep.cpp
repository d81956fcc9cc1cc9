// SPDX-License-Identifier: Apache-2.0
#include "fogndt/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace fogndt {
namespace {

std::string trim(const std::string& s) {
  size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  size_t end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw ConfigError(line, message);
}

double parse_double(const std::string& value, const std::string& key, int line) {
  double out = 0.0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  auto [ptr, ec] = std::from_chars(begin, end, out, std::chars_format::general);
  if (ec != std::errc{} || ptr != end || !std::isfinite(out))
    fail(line, key + " expects a finite number, got '" + value + "'");
  return out;
}

long long parse_int(const std::string& value, const std::string& key, int line) {
  long long out = 0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc{} || ptr != end)
    fail(line, key + " expects an integer, got '" + value + "'");
  return out;
}

std::uint64_t parse_u64(const std::string& value, const std::string& key,
                        int line) {
  std::uint64_t out = 0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc{} || ptr != end)
    fail(line, key + " expects an unsigned 64-bit integer, got '" + value + "'");
  return out;
}

const struct {
  CurveKind kind;
  const char* name;
} kCurveNames[] = {
    {CurveKind::CloudHard, "cloud-hard"}, {CurveKind::CloudSoft, "cloud-soft"},
    {CurveKind::Combined, "combined"},    {CurveKind::EdgeIa, "edge-ia"},
    {CurveKind::EdgeZf, "edge-zf"},       {CurveKind::NonOrthogonal, "nonorthogonal"},
    {CurveKind::Orthogonal, "orthogonal"},
};

std::vector<CurveKind> parse_curves(const std::string& value, int line) {
  std::vector<CurveKind> curves;
  std::stringstream stream(value);
  std::string item;
  while (std::getline(stream, item, ',')) {
    item = trim(item);
    if (item.empty()) fail(line, "curves contains an empty entry");
    bool found = false;
    for (const auto& entry : kCurveNames) {
      if (item == entry.name) {
        curves.push_back(entry.kind);
        found = true;
        break;
      }
    }
    if (!found) fail(line, "unknown curve name '" + item + "'");
  }
  if (curves.empty()) fail(line, "curves must name at least one curve");
  std::sort(curves.begin(), curves.end());
  curves.erase(std::unique(curves.begin(), curves.end()), curves.end());
  return curves;
}

// One setter shared by the file grammar and --set overrides, so both paths
// enforce identical domains and produce identical messages.
void set_key(SweepConfig& config, const std::string& key,
             const std::string& value, int line) {
  if (key == "mode") {
    if (value == "ndt-sweep")
      config.mode = RunMode::NdtSweep;
    else if (value == "sim-verify")
      config.mode = RunMode::SimVerify;
    else
      fail(line, "mode must be ndt-sweep or sim-verify, got '" + value + "'");
  } else if (key == "K") {
    long long k = parse_int(value, key, line);
    if (k < 1 || k > 1000) fail(line, "K must lie in [1, 1000]");
    config.num_nodes = static_cast<int>(k);
  } else if (key == "mu") {
    double mu = parse_double(value, key, line);
    if (!(mu >= 0.0 && mu <= 1.0)) fail(line, "mu must lie in [0, 1]");
    config.cache_fraction = mu;
  } else if (key == "r") {
    double r = parse_double(value, key, line);
    if (!(r >= 0.0)) fail(line, "r must be >= 0");
    config.fronthaul_rate = r;
  } else if (key == "alpha") {
    double alpha = parse_double(value, key, line);
    if (!(alpha >= 0.0 && alpha <= 1.0)) fail(line, "alpha must lie in [0, 1]");
    config.csi_quality = alpha;
  } else if (key == "sweep") {
    if (value == "mu")
      config.sweep = SweepVariable::Mu;
    else if (value == "alpha")
      config.sweep = SweepVariable::Alpha;
    else if (value == "r")
      config.sweep = SweepVariable::R;
    else
      fail(line, "sweep must be mu, alpha, or r, got '" + value + "'");
  } else if (key == "grid_start") {
    config.grid_start = parse_double(value, key, line);
  } else if (key == "grid_stop") {
    config.grid_stop = parse_double(value, key, line);
  } else if (key == "grid_count") {
    long long n = parse_int(value, key, line);
    if (n < 2 || n > 10000000) fail(line, "grid_count must lie in [2, 10^7]");
    config.grid_count = static_cast<int>(n);
  } else if (key == "curves") {
    config.curves = parse_curves(value, line);
  } else if (key == "seed") {
    config.seed = parse_u64(value, key, line);
  } else if (key == "rounds") {
    long long n = parse_int(value, key, line);
    if (n < 1 || n > 1000000000) fail(line, "rounds must lie in [1, 10^9]");
    config.rounds = static_cast<int>(n);
  } else if (key == "p_exp_start") {
    config.p_exp_start = parse_double(value, key, line);
  } else if (key == "p_exp_stop") {
    config.p_exp_stop = parse_double(value, key, line);
  } else if (key == "p_count") {
    long long n = parse_int(value, key, line);
    if (n < 4 || n > 1000) fail(line, "p_count must lie in [4, 1000]");
    config.p_count = static_cast<int>(n);
  } else if (key == "tolerance") {
    double tol = parse_double(value, key, line);
    if (!(tol >= 0.0)) fail(line, "tolerance must be >= 0");
    config.tolerance = tol;
  } else if (key == "out") {
    if (value.empty()) fail(line, "out expects a path");
    config.out_path = value;
  } else {
    fail(line, "unknown key '" + key + "'");
  }
  config.provided_keys.insert(key);
}

std::vector<double> linspace(double start, double stop, int count) {
  std::vector<double> grid(count);
  for (int i = 0; i < count; ++i)
    grid[i] = (i + 1 == count)
                  ? stop
                  : start + (stop - start) * i / (count - 1);
  return grid;
}

NdtBreakdown eval_curve(CurveKind curve, const SystemParams& p) {
  switch (curve) {
    case CurveKind::EdgeZf:
      return NdtBreakdown::of(0.0, edge_zf_ndt());
    case CurveKind::EdgeIa:
      return NdtBreakdown::of(0.0, edge_ia_ndt(p.num_nodes));
    case CurveKind::CloudHard:
      return cloud_hard_breakdown(p.num_nodes, p.fronthaul_rate);
    case CurveKind::CloudSoft:
      return cloud_soft_breakdown(p.fronthaul_rate, p.csi_quality);
    case CurveKind::Orthogonal:
      return orthogonal_ndt(p);
    case CurveKind::NonOrthogonal:
      return nonorthogonal_ndt(p);
    case CurveKind::Combined:
      return combined_ndt_point(p.num_nodes, p.fronthaul_rate, p.csi_quality,
                                p.cache_fraction);
  }
  throw std::logic_error("unhandled curve kind");
}

}  // namespace

const char* run_mode_name(RunMode mode) {
  return mode == RunMode::NdtSweep ? "ndt-sweep" : "sim-verify";
}

const char* sweep_variable_name(SweepVariable variable) {
  switch (variable) {
    case SweepVariable::Mu:
      return "mu";
    case SweepVariable::Alpha:
      return "alpha";
    case SweepVariable::R:
      return "r";
  }
  return "?";
}

const char* curve_kind_name(CurveKind curve) {
  for (const auto& entry : kCurveNames)
    if (entry.kind == curve) return entry.name;
  return "?";
}

bool operator==(const SweepConfig& a, const SweepConfig& b) {
  return a.mode == b.mode && a.num_nodes == b.num_nodes &&
         a.cache_fraction == b.cache_fraction &&
         a.fronthaul_rate == b.fronthaul_rate &&
         a.csi_quality == b.csi_quality && a.sweep == b.sweep &&
         a.grid_start == b.grid_start && a.grid_stop == b.grid_stop &&
         a.grid_count == b.grid_count && a.curves == b.curves &&
         a.seed == b.seed && a.rounds == b.rounds &&
         a.p_exp_start == b.p_exp_start && a.p_exp_stop == b.p_exp_stop &&
         a.p_count == b.p_count && a.tolerance == b.tolerance &&
         a.out_path == b.out_path;
}

SweepConfig parse_config_text(const std::string& text) {
  SweepConfig config;
  std::stringstream stream(text);
  std::string raw;
  int line = 0;
  while (std::getline(stream, raw)) {
    ++line;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string content = trim(raw);
    if (content.empty()) continue;
    size_t eq = content.find('=');
    if (eq == std::string::npos)
      fail(line, "expected 'key = value', got '" + content + "'");
    std::string key = trim(content.substr(0, eq));
    std::string value = trim(content.substr(eq + 1));
    if (key.empty()) fail(line, "missing key before '='");
    set_key(config, key, value, line);
  }
  return config;
}

void apply_override(SweepConfig& config, const std::string& key,
                    const std::string& value) {
  set_key(config, trim(key), trim(value), 0);
}

void finalize_config(const SweepConfig& config) {
  if (!config.provided("mode")) fail(0, "missing required key: mode");
  if (config.curves.empty()) fail(0, "curves must name at least one curve");

  if (config.mode == RunMode::NdtSweep) {
    if (!config.provided("sweep")) fail(0, "missing required key: sweep");
    if (!config.provided("K")) fail(0, "missing required key: K");
    std::vector<std::string> fixed;
    switch (config.sweep) {
      case SweepVariable::Mu:
        fixed = {"r", "alpha"};
        break;
      case SweepVariable::Alpha:
        fixed = {"mu", "r"};
        break;
      case SweepVariable::R:
        fixed = {"mu", "alpha"};
        break;
    }
    for (const std::string& key : fixed)
      if (!config.provided(key))
        fail(0, "missing required key: " + key + " (fixed while sweeping " +
                    sweep_variable_name(config.sweep) + ")");
    if (config.sweep == SweepVariable::R) {
      if (!config.provided("grid_start") || !config.provided("grid_stop"))
        fail(0, "missing required key: grid_start and grid_stop (an r sweep has no default range)");
      if (!(config.grid_start >= 0.0)) fail(0, "grid_start must be >= 0 for an r sweep");
    } else {
      if (!(config.grid_start >= 0.0 && config.grid_stop <= 1.0))
        fail(0, std::string("grid range for a ") +
                    sweep_variable_name(config.sweep) +
                    " sweep must lie within [0, 1]");
    }
    if (!(config.grid_start < config.grid_stop))
      fail(0, "grid_start must be below grid_stop");
  } else {
    if (config.num_nodes < 2) fail(0, "K must be >= 2 for sim-verify");
    if (!(config.p_exp_start > 0.0))
      fail(0, "p_exp_start must be > 0 so every snr grid point exceeds 1");
    if (!(config.p_exp_stop > config.p_exp_start))
      fail(0, "p_exp_stop must be above p_exp_start");
  }
}

SweepConfig parse_config(const std::string& text) {
  SweepConfig config = parse_config_text(text);
  finalize_config(config);
  return config;
}

std::string serialize_config(const SweepConfig& config) {
  std::string out;
  auto emit = [&out](const std::string& key, const std::string& value) {
    out += key;
    out += " = ";
    out += value;
    out += "\n";
  };
  emit("mode", run_mode_name(config.mode));
  emit("K", std::to_string(config.num_nodes));
  emit("mu", format_number(config.cache_fraction));
  emit("r", format_number(config.fronthaul_rate));
  emit("alpha", format_number(config.csi_quality));
  emit("sweep", sweep_variable_name(config.sweep));
  emit("grid_start", format_number(config.grid_start));
  emit("grid_stop", format_number(config.grid_stop));
  emit("grid_count", std::to_string(config.grid_count));
  std::string curves;
  for (CurveKind curve : config.curves) {
    if (!curves.empty()) curves += ",";
    curves += curve_kind_name(curve);
  }
  emit("curves", curves);
  emit("seed", std::to_string(config.seed));
  emit("rounds", std::to_string(config.rounds));
  emit("p_exp_start", format_number(config.p_exp_start));
  emit("p_exp_stop", format_number(config.p_exp_stop));
  emit("p_count", std::to_string(config.p_count));
  emit("tolerance", format_number(config.tolerance));
  if (!config.out_path.empty()) emit("out", config.out_path);
  return out;
}

std::vector<SweepRow> run_ndt_sweep(const SweepConfig& config) {
  finalize_config(config);
  if (config.mode != RunMode::NdtSweep)
    throw std::invalid_argument("run_ndt_sweep needs mode ndt-sweep");

  std::vector<double> grid =
      linspace(config.grid_start, config.grid_stop, config.grid_count);
  // Force-include the points where the configured formulas kink so the
  // tabulated curves keep their exact corners at any grid resolution.
  std::vector<double> kinks;
  if (config.sweep == SweepVariable::Mu) {
    kinks.push_back(1.0 / config.num_nodes);
    kinks.push_back(1.0 - config.csi_quality);
  } else if (config.sweep == SweepVariable::Alpha) {
    kinks.push_back(1.0 - config.cache_fraction);
  }
  for (double kink : kinks)
    if (kink > config.grid_start && kink < config.grid_stop)
      grid.push_back(kink);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<SweepRow> rows;
  rows.reserve(grid.size() * config.curves.size());
  for (double value : grid) {
    SystemParams p;
    p.num_nodes = config.num_nodes;
    p.cache_fraction = config.cache_fraction;
    p.fronthaul_rate = config.fronthaul_rate;
    p.csi_quality = config.csi_quality;
    switch (config.sweep) {
      case SweepVariable::Mu:
        p.cache_fraction = value;
        break;
      case SweepVariable::Alpha:
        p.csi_quality = value;
        break;
      case SweepVariable::R:
        p.fronthaul_rate = value;
        break;
    }
    for (CurveKind curve : config.curves)
      rows.push_back(SweepRow{value, curve, eval_curve(curve, p)});
  }
  return rows;
}

SimVerifyResult run_sim_verify(const SweepConfig& config) {
  finalize_config(config);
  if (config.mode != RunMode::SimVerify)
    throw std::invalid_argument("run_sim_verify needs mode sim-verify");

  std::vector<double> exponents =
      linspace(config.p_exp_start, config.p_exp_stop, config.p_count);
  std::vector<double> p_grid(exponents.size());
  for (size_t i = 0; i < exponents.size(); ++i)
    p_grid[i] = std::exp2(exponents[i]);

  SystemParams base;
  base.num_nodes = config.num_nodes;
  base.cache_fraction = config.cache_fraction;
  base.fronthaul_rate = config.fronthaul_rate;
  base.csi_quality = config.csi_quality;
  base.snr = p_grid.front();

  SimVerifyResult result;
  for (Scheme scheme : {Scheme::SoftTransfer, Scheme::NonOrthogonal}) {
    const char* prefix =
        scheme == Scheme::SoftTransfer ? "soft_transfer" : "nonorthogonal";
    try {
      VerifyReport report = verify_scheme(scheme, base, p_grid, config.rounds,
                                          config.seed, config.tolerance);
      result.claims.insert(result.claims.end(), report.claims.begin(),
                           report.claims.end());
    } catch (const std::exception& error) {
      // A scheme that cannot simulate at all still yields a row, so the
      // other scheme's claims are checked and the failure is visible.
      ClaimResult claim;
      claim.name = std::string(prefix) + ".simulation_error";
      claim.theory = 0.0;
      claim.measured = std::numeric_limits<double>::quiet_NaN();
      claim.r_squared = 0.0;
      claim.pass = false;
      result.claims.push_back(claim);
    }
  }
  result.all_pass = true;
  for (const ClaimResult& claim : result.claims)
    if (!claim.pass) result.all_pass = false;
  return result;
}

std::string write_ndt_csv(const SweepConfig& config,
                          const std::vector<SweepRow>& rows) {
  std::string out = "sweep_var,value,curve,delta_f,delta_e,delta\n";
  const char* token = sweep_variable_name(config.sweep);
  for (const SweepRow& row : rows) {
    out += token;
    out += ",";
    out += format_number(row.value);
    out += ",";
    out += curve_kind_name(row.curve);
    out += ",";
    out += format_number(row.breakdown.fronthaul);
    out += ",";
    out += format_number(row.breakdown.edge);
    out += ",";
    out += format_number(row.breakdown.total);
    out += "\n";
  }
  return out;
}

std::string write_verify_csv(const SimVerifyResult& result) {
  std::string out = "claim,theory,measured,r2,pass\n";
  for (const ClaimResult& claim : result.claims) {
    out += claim.name;
    out += ",";
    out += format_number(claim.theory);
    out += ",";
    out += format_number(claim.measured);
    out += ",";
    out += format_number(claim.r_squared);
    out += ",";
    out += claim.pass ? "pass" : "fail";
    out += "\n";
  }
  return out;
}

std::string write_manifest(const SweepConfig& config) {
  std::string out = "# ";
  out += kToolName;
  out += " ";
  out += kToolVersion;
  out += " run manifest\n";
  out += serialize_config(config);
  return out;
}

const char* default_out_path(RunMode mode) {
  return mode == RunMode::NdtSweep ? "ndt_sweep.csv" : "sim_verify.csv";
}

}  // namespace fogndt
