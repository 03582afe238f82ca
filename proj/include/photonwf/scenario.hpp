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
#pragma once

// Scenario runner behind the command-line tool: configuration model,
// validation, execution and preset generation.

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "photonwf/fock.hpp"
#include "photonwf/lattice.hpp"
#include "photonwf/sources.hpp"

namespace photonwf {

enum class ScenarioKind { Monochromatic, GaussianPulse, Bichromatic, FockDemo, InvariantSuite };

std::string_view scenario_name(ScenarioKind kind);
std::optional<ScenarioKind> scenario_from_name(std::string_view name);
inline constexpr std::array<ScenarioKind, 5> kAllScenarios = {
    ScenarioKind::Monochromatic, ScenarioKind::GaussianPulse, ScenarioKind::Bichromatic,
    ScenarioKind::FockDemo, ScenarioKind::InvariantSuite};

struct PulseParams {
  Vec3 k_center = Vec3::Zero();
  double bandwidth = 0.0;  // fraction of |k_center|; unused by monochromatic
  HelicityMix mix;
  double energy_quanta = 1.0;  // classical energy in units of hbar c |k_center|
};

struct BichromaticParams {
  Vec3 k1 = Vec3::Zero();
  Vec3 k2 = Vec3::Zero();
  double e1 = 1.0;
  double e2 = 1.0;
  HelicityMix mix;
};

struct FockParams {
  std::vector<Mode> modes;
  int max_occupation = 3;
  std::vector<std::size_t> prepare;  // creation operators applied to |0>, in order
  std::optional<VolumeRegion> volume;
  std::optional<SurfaceRegion> surface;
};

struct ScenarioConfig {
  std::string source;
  ScenarioKind scenario = ScenarioKind::InvariantSuite;
  std::array<int, 3> n{16, 16, 16};
  std::array<double, 3> dr{1.0, 1.0, 1.0};
  std::optional<std::array<double, 3>> origin;  // default: box centred on 0
  PhysicalConstants constants;
  std::string constants_label = "natural";
  std::optional<PulseParams> pulse;
  std::optional<BichromaticParams> bichromatic;
  std::optional<FockParams> fock;
  double sample_time = 0.0;
  std::filesystem::path output_dir = "photonwf-out";
  std::uint64_t seed = 0;

  Grid3D grid() const;
};

/// Throws Error(Config) with line-level diagnostics.
ScenarioConfig parse_config(std::string_view text, const std::string& source);
ScenarioConfig load_config(const std::filesystem::path& path);

/// Derived grid / k-grid / mode summary printed by `check`.
std::string check_summary(const ScenarioConfig& config);

struct CheckResult {
  std::string name;
  double measured = 0.0;
  std::string criterion;  // e.g. "<= 1e-12"
  bool passed = false;
};

struct RunResult {
  std::string report;
  std::vector<CheckResult> checks;
  std::vector<std::filesystem::path> files;
  std::size_t failed() const;
};

/// Executes the scenario and writes report.txt plus the CSV outputs into
/// config.output_dir.
RunResult run_scenario(const ScenarioConfig& config);

std::string preset_text(ScenarioKind kind);
/// Writes one runnable configuration per scenario; returns the paths.
std::vector<std::filesystem::path> write_presets(const std::filesystem::path& dir);

}  // namespace photonwf
