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
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "photonwf/config.hpp"
#include "photonwf/scenario.hpp"

using namespace photonwf;
namespace fs = std::filesystem;

namespace {

std::string config_error(const std::string& text) {
  try {
    parse_config(text, "test.cfg");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Config);
    return e.what();
  }
  FAIL("expected a configuration error");
  return {};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("photonwf-test-" + name);
  fs::remove_all(dir);
  return dir;
}

const char* kPulse = R"(scenario = gaussian_pulse
grid.n = [16, 16, 16]
grid.dr = [1, 1, 1]
k_units = dk
pulse.k_center = [4, 0, 0]
pulse.bandwidth = 0.0625
)";

}  // namespace

TEST_SUITE("config") {

TEST_CASE("document grammar") {
  const auto doc = ConfigDocument::parse(
      "# comment\n\n a.b = [1, 2]  # trailing\nname = hello\nflag = true\ntext = \"x # y\"\n", "t");
  CHECK(doc.find("a.b")->value.size() == 2);
  CHECK(doc.find("a.b")->line == 3);
  CHECK(doc.find("name")->value == "hello");
  CHECK(doc.find("flag")->value == true);
  CHECK(doc.find("text")->value == "x # y");
  CHECK(doc.find("missing") == nullptr);
}

TEST_CASE("document errors carry line numbers") {
  auto message = [](const char* text) {
    try {
      ConfigDocument::parse(text, "t.cfg");
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(contains(message("a = 1\nno equals sign\n"), "t.cfg:2:"));
  CHECK(contains(message("a = 1\na = 2\n"), "duplicate"));
  CHECK(contains(message("Bad.Key = 1\n"), "invalid key"));
  CHECK(contains(message("a = [1, \n"), "t.cfg:1:"));
  CHECK(contains(message("a =\n"), "missing value"));
}

TEST_CASE("valid pulse configuration") {
  const ScenarioConfig cfg = parse_config(kPulse, "pulse.cfg");
  CHECK(cfg.scenario == ScenarioKind::GaussianPulse);
  REQUIRE(cfg.pulse);
  CHECK(cfg.pulse->k_center[0] == doctest::Approx(4 * 2 * kPi / 16));
  CHECK(cfg.pulse->mix.plus == cplx(1.0));
  CHECK(cfg.constants_label == "natural");
  const std::string summary = check_summary(cfg);
  CHECK(contains(summary, "gaussian_pulse"));
  CHECK(contains(summary, "grid index=(4, 0, 0)"));
}

TEST_CASE("missing k_center names the field") {
  const std::string msg = config_error("scenario = gaussian_pulse\ngrid.n = [16,16,16]\ngrid.dr = [1,1,1]\npulse.bandwidth = 0.1\n");
  CHECK(contains(msg, "pulse.k_center"));
}

TEST_CASE("non-power-of-two grid is rejected") {
  const std::string msg = config_error("scenario = invariant_suite\ngrid.n = [12,16,16]\ngrid.dr = [1,1,1]\n");
  CHECK(contains(msg, "test.cfg:2:"));
}

TEST_CASE("other configuration errors") {
  CHECK(contains(config_error("scenario = nope\n"), "unknown scenario"));
  CHECK(contains(config_error(std::string(kPulse) + "pulse.colour = 3\n"), "pulse.colour"));
  CHECK(contains(config_error(std::string(kPulse) + "pulse.helicity_mix = [0, 0]\n"), "all zero"));
  CHECK(contains(config_error(std::string(kPulse) + "constants = imperial\n"), "natural or SI"));
  CHECK(contains(config_error(std::string(kPulse) + "constants.hbar = 1\n"), "constants.c"));
  CHECK(contains(config_error(std::string(kPulse) + "constants.hbar = 1\nconstants.c = 1\nconstants.eps0 = 2\nconstants.mu0 = 1\n"),
                 "eps0"));
  CHECK(contains(config_error("scenario = monochromatic\ngrid.n = [16,16,16]\ngrid.dr = [1,1,1]\npulse.k_center = [0.5, 0, 0]\n"),
                 "k-grid"));
  CHECK(contains(config_error("scenario = fock_demo\ngrid.n = [16,16,16]\ngrid.dr = [1,1,1]\nk_units = dk\n"
                              "fock.modes = [[1,0,0,2]]\nfock.prepare = [0]\n"),
                 "helicity"));
  CHECK(contains(config_error("scenario = fock_demo\ngrid.n = [16,16,16]\ngrid.dr = [1,1,1]\nk_units = dk\n"
                              "fock.modes = [[1,0,0,1]]\nfock.prepare = [1]\n"),
                 "mode indices"));
  CHECK(contains(config_error("scenario = fock_demo\ngrid.n = [16,16,16]\ngrid.dr = [1,1,1]\nk_units = dk\n"
                              "fock.modes = [[1,0,0,1]]\nfock.prepare = [0]\nfock.surface.axis = 0\n"
                              "fock.surface.position = 0\nfock.surface.window = [2, 1]\n"),
                 "t2 >= t1"));
}

TEST_CASE("explicit SI constants") {
  const auto si = PhysicalConstants::si();
  std::ostringstream text;
  text.precision(17);
  text << kPulse << "constants.hbar = " << si.hbar << "\nconstants.c = " << si.c
       << "\nconstants.eps0 = " << si.eps0 << "\nconstants.mu0 = " << si.mu0 << "\n";
  const ScenarioConfig cfg = parse_config(text.str(), "si.cfg");
  CHECK(cfg.constants_label == "explicit");
  CHECK(cfg.constants.c == si.c);
}

TEST_CASE("presets") {
  const fs::path dir = scratch("presets");
  const auto files = write_presets(dir);
  CHECK(files.size() == 5);
  std::vector<std::string> first;
  for (const auto& f : files) {
    first.push_back(slurp(f));
    const ScenarioConfig cfg = load_config(f);
    CHECK(cfg.n == std::array<int, 3>{16, 16, 16});
  }
  const auto again = write_presets(dir);
  for (std::size_t i = 0; i < again.size(); ++i) CHECK(slurp(again[i]) == first[i]);

  // a regular file where the directory should be
  const fs::path blocker = scratch("blocker");
  std::ofstream(blocker) << "x";
  try {
    write_presets(blocker / "sub");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Io);
  }
  fs::remove_all(dir);
  fs::remove(blocker);
}

TEST_CASE("missing file is an I/O error") {
  try {
    load_config("/nonexistent/photonwf.cfg");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Io);
  }
}

TEST_CASE("runs are deterministic and write every artifact") {
  for (ScenarioKind kind : {ScenarioKind::Bichromatic, ScenarioKind::InvariantSuite}) {
    ScenarioConfig cfg = parse_config(preset_text(kind), "preset");
    cfg.output_dir = scratch("run-a");
    const RunResult a = run_scenario(cfg);
    CHECK(a.failed() == 0);
    cfg.output_dir = scratch("run-b");
    const RunResult b = run_scenario(cfg);
    REQUIRE(a.files.size() == 4);
    for (std::size_t i = 0; i < a.files.size(); ++i) {
      CHECK(a.files[i].filename() == b.files[i].filename());
      CHECK(slurp(a.files[i]) == slurp(b.files[i]));
    }
    const std::string density = slurp(a.files[2]);
    CHECK(density.rfind("ix,iy,iz,x,y,z,rho,u,jx,jy,jz\n", 0) == 0);
    // every check line states its measured value
    std::istringstream lines(a.report);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.rfind("check ", 0) == 0) CHECK(contains(line, "measured="));
    }
    fs::remove_all(scratch("run-a"));
    fs::remove_all(scratch("run-b"));
  }
}

}  // TEST_SUITE
