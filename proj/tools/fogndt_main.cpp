// SPDX-License-Identifier: Apache-2.0
//
// Command-line harness. Two subcommands:
//
//   fogndt ndt-sweep  --config cfg [--out path] [--set key=value]...
//   fogndt sim-verify --config cfg [--out path] [--seed n] [--set key=value]...
//
// Precedence: config file, then --set overrides in order, then the dedicated
// flags (--seed, --out); the subcommand fixes the mode regardless of any mode
// key. Exit codes: 0 success, 1 configuration error, 2 verification failure,
// 3 numerical or i/o error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fogndt/errors.hpp"
#include "fogndt/sweep.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fogndt::ConfigError(0, "cannot read config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
}

struct CliOptions {
  std::string config_path;
  std::string out_path;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::vector<std::string> overrides;
};

fogndt::SweepConfig build_config(const CliOptions& options,
                                 fogndt::RunMode mode) {
  fogndt::SweepConfig config;
  if (!options.config_path.empty())
    config = fogndt::parse_config_text(read_file(options.config_path));
  for (const std::string& entry : options.overrides) {
    size_t eq = entry.find('=');
    if (eq == std::string::npos)
      throw fogndt::ConfigError(0, "--set expects key=value, got '" + entry + "'");
    fogndt::apply_override(config, entry.substr(0, eq), entry.substr(eq + 1));
  }
  if (options.seed_given) {
    config.seed = options.seed;
    config.provided_keys.insert("seed");
  }
  if (!options.out_path.empty()) {
    config.out_path = options.out_path;
    config.provided_keys.insert("out");
  }
  // The subcommand names the run; a mode key in the file or overrides cannot
  // redirect it.
  config.mode = mode;
  config.provided_keys.insert("mode");
  if (config.out_path.empty())
    config.out_path = fogndt::default_out_path(config.mode);
  fogndt::finalize_config(config);
  return config;
}

int run_sweep_command(const CliOptions& options) {
  fogndt::SweepConfig config = build_config(options, fogndt::RunMode::NdtSweep);
  std::vector<fogndt::SweepRow> rows = fogndt::run_ndt_sweep(config);
  write_file(config.out_path, fogndt::write_ndt_csv(config, rows));
  write_file(config.out_path + ".manifest", fogndt::write_manifest(config));
  std::printf("wrote %zu rows to %s\n", rows.size(), config.out_path.c_str());
  return 0;
}

int run_verify_command(const CliOptions& options) {
  fogndt::SweepConfig config = build_config(options, fogndt::RunMode::SimVerify);
  fogndt::SimVerifyResult result = fogndt::run_sim_verify(config);
  write_file(config.out_path, fogndt::write_verify_csv(result));
  write_file(config.out_path + ".manifest", fogndt::write_manifest(config));
  for (const fogndt::ClaimResult& claim : result.claims)
    std::printf("%-45s theory %8.4f  measured %8.4f  %s\n", claim.name.c_str(),
                claim.theory, claim.measured, claim.pass ? "pass" : "FAIL");
  std::printf("%zu claims, %s\n", result.claims.size(),
              result.all_pass ? "all pass" : "failures present");
  return result.all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"delivery-time curves and scaling-law checks for a cache-aided cloud/edge downlink"};
  app.require_subcommand(1);

  CliOptions options;
  auto add_common = [&options](CLI::App* sub) {
    sub->add_option("--config", options.config_path,
                    "configuration file (key = value lines, # comments)");
    sub->add_option("--out", options.out_path, "output CSV path");
    sub->add_option("--seed", options.seed, "master seed")
        ->each([&options](const std::string&) { options.seed_given = true; });
    sub->add_option("--set", options.overrides,
                    "override one key=value (repeatable)");
  };

  CLI::App* sweep_cmd = app.add_subcommand(
      "ndt-sweep", "tabulate delivery-time curves over a parameter grid");
  CLI::App* verify_cmd = app.add_subcommand(
      "sim-verify", "check high-snr scaling claims by simulation");
  add_common(sweep_cmd);
  add_common(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return 1;
  }

  try {
    if (sweep_cmd->parsed()) return run_sweep_command(options);
    return run_verify_command(options);
  } catch (const fogndt::ConfigError& error) {
    std::fprintf(stderr, "config error: %s\n", error.what());
    return 1;
  } catch (const std::exception& error) {
    std::fprintf(stderr, "error: %s\n", error.what());
    return 3;
  }
}
