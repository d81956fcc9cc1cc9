// SPDX-License-Identifier: Apache-2.0
//
// Black-box checks of the CLI exit-code contract: 0 success, 1 config
// error, 2 verification failure. argv[1] names the binary under test.
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

int run_silenced(const std::string& command) {
  const int status = std::system((command + " > /dev/null 2> /dev/null").c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

int failures = 0;

void expect(bool ok, const char* what) {
  std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", what);
  if (!ok) ++failures;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-cli>\n", argv[0]);
    return 1;
  }
  const std::string cli = std::string("\"") + argv[1] + "\"";

  const fs::path dir =
      fs::temp_directory_path() / ("fogndt_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string out = (dir / "table.csv").string();

  expect(run_silenced(cli + " ndt-sweep --config " +
                      (dir / "does_not_exist.cfg").string()) == 1,
         "missing config file exits 1");

  const fs::path bad = dir / "bad.cfg";
  std::ofstream(bad) << "K = 2\nr = 2\nalpha = 1.5\nsweep = mu\n";
  expect(run_silenced(cli + " ndt-sweep --config " + bad.string()) == 1,
         "out-of-range config value exits 1");

  expect(run_silenced(cli + " ndt-sweep --no-such-flag") == 1,
         "unknown flag exits 1");

  expect(run_silenced(cli + " ndt-sweep --set K=2 --set r=2 --set alpha=0.5 "
                            "--set sweep=mu --set grid_count=5 --out \"" +
                      out + "\"") == 0,
         "valid sweep exits 0");
  expect(fs::exists(out), "sweep wrote the csv");
  expect(fs::exists(out + ".manifest"), "sweep wrote the manifest");

  expect(run_silenced(cli + " sim-verify --set rounds=1 --set tolerance=0 "
                            "--set p_exp_start=10 --set p_exp_stop=22 "
                            "--set p_count=4 --seed 7 --out \"" +
                      (dir / "verify.csv").string() + "\"") == 2,
         "hopeless verification exits 2");

  std::error_code ignored;
  fs::remove_all(dir, ignored);

  if (failures > 0) std::printf("%d cli checks failed\n", failures);
  return failures == 0 ? 0 : 1;
}
