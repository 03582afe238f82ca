// Copyright 2026 The photonwf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// photonwf run <config> [--out DIR] [--seed N] [--quiet]
// photonwf check <config>
// photonwf presets <dir>
//
// Exit status: 0 success, 1 some checks failed, 2 configuration or I/O error.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "photonwf/pwf.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitConfig = 2;

int report_error(pwf_status status) {
  std::cerr << "photonwf: " << pwf_status_name(status) << ": " << pwf_last_error() << "\n";
  return kExitConfig;
}

void print_failed_checks(const std::string& report) {
  std::istringstream in(report);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("failed_check = ", 0) == 0) std::cerr << "  failed: " << line.substr(15) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Photon wavefunction toolkit: scenario runner"};
  app.set_version_flag("--version", pwf_version());
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool quiet = false;
  auto* run = app.add_subcommand("run", "run a scenario and write report.txt plus CSV files");
  run->add_option("config", config_path, "configuration file")->required();
  auto* out_opt = run->add_option("--out", out_dir, "output directory (overrides output_dir)");
  auto* seed_opt = run->add_option("--seed", seed, "random seed (overrides seed)");
  run->add_flag("--quiet", quiet, "do not print the report");

  std::string check_path;
  auto* check = app.add_subcommand("check", "validate a configuration without running it");
  check->add_option("config", check_path, "configuration file")->required();

  std::string preset_dir;
  auto* presets = app.add_subcommand("presets", "write one example configuration per scenario");
  presets->add_option("dir", preset_dir, "target directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (*run) {
    pwf_run_options options{};
    if (*out_opt) options.output_dir = out_dir.c_str();
    if (*seed_opt) {
      options.override_seed = 1;
      options.seed = seed;
    }
    char* report = nullptr;
    size_t failed = 0;
    const pwf_status status = pwf_run(config_path.c_str(), &options, &report, &failed);
    const std::string text = report ? report : "";
    pwf_string_free(report);
    if (status != PWF_OK && status != PWF_ERR_INVARIANT) return report_error(status);
    if (!quiet) std::cout << text;
    if (status == PWF_ERR_INVARIANT) {
      std::cerr << "photonwf: " << failed << " check(s) failed\n";
      print_failed_checks(text);
      return kExitInvariant;
    }
    return kExitOk;
  }

  if (*check) {
    char* summary = nullptr;
    const pwf_status status = pwf_config_check(check_path.c_str(), &summary);
    if (status != PWF_OK) return report_error(status);
    std::cout << summary << "configuration ok\n";
    pwf_string_free(summary);
    return kExitOk;
  }

  size_t count = 0;
  const pwf_status status = pwf_presets_write(preset_dir.c_str(), &count);
  if (status != PWF_OK) return report_error(status);
  std::cout << "wrote " << count << " presets to " << preset_dir << "\n";
  return kExitOk;
}
