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
#include "photonwf/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "photonwf/config.hpp"
#include "photonwf/maxwell.hpp"
#include "photonwf/photon.hpp"

namespace photonwf {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Gaussian packet used by the invariant suite: sigma = 0.25 dk around 4 dk.
// Wide enough for a measurable central-difference error, narrow enough to
// stay well below the continuity tolerance.
constexpr double kSuitePacketCentre = 4.0;
constexpr double kSuitePacketSigma = 0.25;
constexpr double kProbeCrossings = 1e-3;

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}
std::string full(double v) { return fmt("%.17g", v); }
std::string sci(double v) { return fmt("%.3e", v); }

// ---------------------------------------------------------------------------
// configuration

double as_number(const ConfigDocument& doc, const ConfigEntry& e, const std::string& key) {
  if (!e.value.is_number()) doc.fail(e, "'" + key + "' must be a number");
  const double v = e.value.get<double>();
  if (!std::isfinite(v)) doc.fail(e, "'" + key + "' must be finite");
  return v;
}

std::vector<double> as_numbers(const ConfigDocument& doc, const ConfigEntry& e,
                               const std::string& key, std::size_t count) {
  if (!e.value.is_array() || e.value.size() != count) {
    doc.fail(e, "'" + key + "' must be an array of " + std::to_string(count) + " numbers");
  }
  std::vector<double> out;
  for (const auto& x : e.value) {
    if (!x.is_number()) doc.fail(e, "'" + key + "' must contain only numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

cplx as_complex(const ConfigDocument& doc, const ConfigEntry& e, const json& v,
                const std::string& key) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  doc.fail(e, "'" + key + "' entries must be numbers or [re, im] pairs");
}

HelicityMix read_mix(const ConfigDocument& doc, const std::string& key) {
  HelicityMix mix;
  if (const ConfigEntry* e = doc.find(key)) {
    if (!e->value.is_array() || e->value.size() != 2) {
      doc.fail(*e, "'" + key + "' must be [c_plus, c_minus]");
    }
    mix.plus = as_complex(doc, *e, e->value[0], key);
    mix.minus = as_complex(doc, *e, e->value[1], key);
    if (mix.plus == 0.0 && mix.minus == 0.0) doc.fail(*e, "'" + key + "' must not be all zero");
  }
  return mix;
}

struct KReader {
  const ConfigDocument& doc;
  bool grid_units;
  std::array<double, 3> dk;

  Vec3 operator()(const std::string& key, const std::string& why) const {
    const ConfigEntry& e = doc.require(key, why);
    const auto v = as_numbers(doc, e, key, 3);
    return convert(v.data());
  }
  Vec3 convert(const double* v) const {
    Vec3 k(v[0], v[1], v[2]);
    if (grid_units) k = Vec3(v[0] * dk[0], v[1] * dk[1], v[2] * dk[2]);
    return k;
  }
};

}  // namespace

std::string_view scenario_name(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::Monochromatic: return "monochromatic";
    case ScenarioKind::GaussianPulse: return "gaussian_pulse";
    case ScenarioKind::Bichromatic: return "bichromatic";
    case ScenarioKind::FockDemo: return "fock_demo";
    case ScenarioKind::InvariantSuite: return "invariant_suite";
  }
  return "unknown";
}

std::optional<ScenarioKind> scenario_from_name(std::string_view name) {
  for (ScenarioKind k : kAllScenarios) {
    if (scenario_name(k) == name) return k;
  }
  return std::nullopt;
}

Grid3D ScenarioConfig::grid() const {
  if (origin) return Grid3D::make(n, dr, *origin);
  return Grid3D::centred(n, dr);
}

ScenarioConfig parse_config(std::string_view text, const std::string& source) {
  const ConfigDocument doc = ConfigDocument::parse(text, source);
  ScenarioConfig cfg;
  cfg.source = source;

  const ConfigEntry& sc = doc.require("scenario", "every configuration names its scenario");
  if (!sc.value.is_string()) doc.fail(sc, "'scenario' must be a name");
  const auto kind = scenario_from_name(sc.value.get<std::string>());
  if (!kind) {
    doc.fail(sc, "unknown scenario '" + sc.value.get<std::string>() +
                     "' (expected monochromatic, gaussian_pulse, bichromatic, fock_demo or "
                     "invariant_suite)");
  }
  cfg.scenario = *kind;

  const ConfigEntry& ne = doc.require("grid.n", "points per axis");
  const auto nv = as_numbers(doc, ne, "grid.n", 3);
  const ConfigEntry& de = doc.require("grid.dr", "spacing per axis");
  const auto dv = as_numbers(doc, de, "grid.dr", 3);
  for (int a = 0; a < 3; ++a) {
    if (nv[a] != std::floor(nv[a]) || nv[a] < 1 || nv[a] > 4096) {
      doc.fail(ne, "'grid.n' must contain positive integers");
    }
    cfg.n[a] = static_cast<int>(nv[a]);
    cfg.dr[a] = dv[a];
  }
  if (const ConfigEntry* oe = doc.find("grid.origin")) {
    const auto ov = as_numbers(doc, *oe, "grid.origin", 3);
    cfg.origin = std::array<double, 3>{ov[0], ov[1], ov[2]};
  }
  try {
    (void)cfg.grid();
  } catch (const Error& err) {
    doc.fail(ne, err.what());
  }
  const Grid3D grid = cfg.grid();

  // constants = natural | SI, or explicit constants.{hbar,c,eps0,mu0}
  const ConfigEntry* ce = doc.find("constants");
  const std::array<std::string, 4> names{"hbar", "c", "eps0", "mu0"};
  std::array<const ConfigEntry*, 4> explicit_values{};
  bool any_explicit = false;
  for (std::size_t i = 0; i < 4; ++i) {
    explicit_values[i] = doc.find("constants." + names[i]);
    any_explicit = any_explicit || explicit_values[i] != nullptr;
  }
  if (ce && any_explicit) doc.fail(*ce, "give either 'constants' or explicit constants.* values, not both");
  if (ce) {
    const std::string label = ce->value.is_string() ? ce->value.get<std::string>() : "";
    if (label == "natural") {
      cfg.constants = PhysicalConstants::natural();
    } else if (label == "SI" || label == "si") {
      cfg.constants = PhysicalConstants::si();
      cfg.constants_label = "SI";
    } else {
      doc.fail(*ce, "'constants' must be natural or SI");
    }
  } else if (any_explicit) {
    double* slots[4] = {&cfg.constants.hbar, &cfg.constants.c, &cfg.constants.eps0,
                        &cfg.constants.mu0};
    for (std::size_t i = 0; i < 4; ++i) {
      if (!explicit_values[i]) doc.fail("missing required key 'constants." + names[i] + "'");
      *slots[i] = as_number(doc, *explicit_values[i], "constants." + names[i]);
    }
    cfg.constants_label = "explicit";
    try {
      cfg.constants.validate();
    } catch (const Error& err) {
      doc.fail(*explicit_values[0], err.what());
    }
  }

  bool grid_units = false;
  if (const ConfigEntry* ue = doc.find("k_units")) {
    const std::string u = ue->value.is_string() ? ue->value.get<std::string>() : "";
    if (u == "dk") {
      grid_units = true;
    } else if (u != "physical") {
      doc.fail(*ue, "'k_units' must be dk or physical");
    }
  }
  const KReader read_k{doc, grid_units, {grid.dk(0), grid.dk(1), grid.dk(2)}};

  if (const ConfigEntry* e = doc.find("output_dir")) {
    if (!e->value.is_string()) doc.fail(*e, "'output_dir' must be a string");
    cfg.output_dir = e->value.get<std::string>();
  }
  if (const ConfigEntry* e = doc.find("seed")) {
    if (!e->value.is_number_unsigned()) doc.fail(*e, "'seed' must be a non-negative integer");
    cfg.seed = e->value.get<std::uint64_t>();
  }
  if (const ConfigEntry* e = doc.find("sample_time")) cfg.sample_time = as_number(doc, *e, "sample_time");

  const std::string scenario(scenario_name(cfg.scenario));
  switch (cfg.scenario) {
    case ScenarioKind::Monochromatic:
    case ScenarioKind::GaussianPulse: {
      PulseParams p;
      p.k_center = read_k("pulse.k_center", "required by scenario " + scenario);
      if (!(p.k_center.norm() > 0.0)) {
        doc.fail(*doc.find("pulse.k_center"), "'pulse.k_center' must be nonzero");
      }
      if (cfg.scenario == ScenarioKind::GaussianPulse) {
        const ConfigEntry& be = doc.require("pulse.bandwidth", "required by scenario " + scenario);
        p.bandwidth = as_number(doc, be, "pulse.bandwidth");
        if (!(p.bandwidth > 0.0)) doc.fail(be, "'pulse.bandwidth' must be positive");
      } else if (!grid.on_grid(p.k_center)) {
        doc.fail(*doc.find("pulse.k_center"),
                 "'pulse.k_center' must be a k-grid sample for a monochromatic field");
      }
      p.mix = read_mix(doc, "pulse.helicity_mix");
      if (const ConfigEntry* e = doc.find("pulse.energy")) {
        p.energy_quanta = as_number(doc, *e, "pulse.energy");
        if (!(p.energy_quanta > 0.0)) doc.fail(*e, "'pulse.energy' must be positive");
      }
      cfg.pulse = p;
      break;
    }
    case ScenarioKind::Bichromatic: {
      BichromaticParams b;
      const std::string why = "required by scenario bichromatic";
      b.k1 = read_k("bichromatic.k1", why);
      b.k2 = read_k("bichromatic.k2", why);
      const ConfigEntry& e1 = doc.require("bichromatic.e1", why);
      const ConfigEntry& e2 = doc.require("bichromatic.e2", why);
      b.e1 = as_number(doc, e1, "bichromatic.e1");
      b.e2 = as_number(doc, e2, "bichromatic.e2");
      if (!(b.e1 > 0.0)) doc.fail(e1, "'bichromatic.e1' must be positive");
      if (!(b.e2 > 0.0)) doc.fail(e2, "'bichromatic.e2' must be positive");
      for (const char* key : {"bichromatic.k1", "bichromatic.k2"}) {
        const ConfigEntry& e = *doc.find(key);
        const Vec3 k = std::string(key) == "bichromatic.k1" ? b.k1 : b.k2;
        if (!(k.norm() > 0.0) || !grid.on_grid(k)) {
          doc.fail(e, std::string("'") + key + "' must be a nonzero k-grid sample");
        }
      }
      if (b.k1 == b.k2) doc.fail(*doc.find("bichromatic.k2"), "the two modes must differ");
      b.mix = read_mix(doc, "bichromatic.helicity_mix");
      cfg.bichromatic = b;
      break;
    }
    case ScenarioKind::FockDemo: {
      FockParams f;
      const ConfigEntry& me = doc.require("fock.modes", "required by scenario fock_demo");
      if (!me.value.is_array() || me.value.empty()) {
        doc.fail(me, "'fock.modes' must be a non-empty array of [kx, ky, kz, helicity]");
      }
      for (const auto& row : me.value) {
        if (!row.is_array() || row.size() != 4) {
          doc.fail(me, "each entry of 'fock.modes' must be [kx, ky, kz, helicity]");
        }
        double v[4];
        for (int i = 0; i < 4; ++i) {
          if (!row[i].is_number()) doc.fail(me, "'fock.modes' entries must be numbers");
          v[i] = row[i].get<double>();
        }
        if (v[3] != 1.0 && v[3] != -1.0) doc.fail(me, "mode helicity must be +1 or -1");
        Mode m{read_k.convert(v), v[3] > 0 ? Helicity::Plus : Helicity::Minus};
        if (!grid.on_grid(m.k)) doc.fail(me, "fock mode wavevectors must be k-grid samples");
        f.modes.push_back(m);
      }
      if (const ConfigEntry* e = doc.find("fock.max_occupation")) {
        if (!e->value.is_number_integer() || e->value.get<int>() < 1) {
          doc.fail(*e, "'fock.max_occupation' must be a positive integer");
        }
        f.max_occupation = e->value.get<int>();
      }
      try {
        ModeSet check(f.modes, f.max_occupation);
      } catch (const Error& err) {
        doc.fail(me, err.what());
      }
      const ConfigEntry& pe = doc.require("fock.prepare", "required by scenario fock_demo");
      if (!pe.value.is_array()) doc.fail(pe, "'fock.prepare' must be an array of mode indices");
      for (const auto& idx : pe.value) {
        if (!idx.is_number_unsigned() || idx.get<std::size_t>() >= f.modes.size()) {
          doc.fail(pe, "'fock.prepare' entries must be valid mode indices");
        }
        f.prepare.push_back(idx.get<std::size_t>());
      }
      if (const ConfigEntry* e = doc.find("fock.volume")) {
        if (!e->value.is_array() || e->value.size() != 2) {
          doc.fail(*e, "'fock.volume' must be [[lo_x, lo_y, lo_z], [hi_x, hi_y, hi_z]]");
        }
        VolumeRegion v;
        for (int a = 0; a < 3; ++a) {
          if (!e->value[0].is_array() || !e->value[1].is_array() || e->value[0].size() != 3 ||
              e->value[1].size() != 3) {
            doc.fail(*e, "'fock.volume' must be [[lo_x, lo_y, lo_z], [hi_x, hi_y, hi_z]]");
          }
          v.lo[a] = e->value[0][a].get<double>();
          v.hi[a] = e->value[1][a].get<double>();
        }
        f.volume = v;
      }
      const ConfigEntry* sa = doc.find("fock.surface.axis");
      const ConfigEntry* sp = doc.find("fock.surface.position");
      const ConfigEntry* sn = doc.find("fock.surface.normal");
      const ConfigEntry* sw = doc.find("fock.surface.window");
      if (sa || sp || sn || sw) {
        SurfaceRegion s;
        if (!sa || !sp || !sw) doc.fail("fock.surface needs axis, position and window");
        if (!sa->value.is_number_integer()) doc.fail(*sa, "'fock.surface.axis' must be 0, 1 or 2");
        s.axis = sa->value.get<int>();
        if (s.axis < 0 || s.axis > 2) doc.fail(*sa, "'fock.surface.axis' must be 0, 1 or 2");
        s.position = as_number(doc, *sp, "fock.surface.position");
        if (sn) {
          const double sgn = as_number(doc, *sn, "fock.surface.normal");
          if (sgn != 1.0 && sgn != -1.0) doc.fail(*sn, "'fock.surface.normal' must be +1 or -1");
          s.normal_sign = static_cast<int>(sgn);
        }
        const auto w = as_numbers(doc, *sw, "fock.surface.window", 2);
        s.t1 = w[0];
        s.t2 = w[1];
        if (s.t2 < s.t1) doc.fail(*sw, "'fock.surface.window' must satisfy t2 >= t1");
        f.surface = s;
      }
      cfg.fock = f;
      break;
    }
    case ScenarioKind::InvariantSuite:
      break;
  }

  doc.reject_unused();
  return cfg;
}

ScenarioConfig load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in || fs::is_directory(path)) {
    throw Error(ErrorKind::Io, path.string() + ": cannot open configuration file");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path.string());
}

std::string check_summary(const ScenarioConfig& cfg) {
  const Grid3D g = cfg.grid();
  const PhysicalConstants& k = cfg.constants;
  std::ostringstream out;
  out << "source      : " << cfg.source << "\n";
  out << "scenario    : " << scenario_name(cfg.scenario) << "\n";
  out << "grid.n      : " << g.n()[0] << " x " << g.n()[1] << " x " << g.n()[2] << " ("
      << g.size() << " points)\n";
  out << "grid.dr     : " << full(g.dr()[0]) << ", " << full(g.dr()[1]) << ", " << full(g.dr()[2]) << "\n";
  out << "grid.origin : " << full(g.origin()[0]) << ", " << full(g.origin()[1]) << ", "
      << full(g.origin()[2]) << "\n";
  out << "box length  : " << full(g.length(0)) << ", " << full(g.length(1)) << ", "
      << full(g.length(2)) << "\n";
  out << "dk          : " << full(g.dk(0)) << ", " << full(g.dk(1)) << ", " << full(g.dk(2)) << "\n";
  out << "k nyquist   : " << full(g.k_axis(0, g.n()[0] / 2)) << ", "
      << full(g.k_axis(1, g.n()[1] / 2)) << ", " << full(g.k_axis(2, g.n()[2] / 2)) << "\n";
  out << "constants   : " << cfg.constants_label << " (hbar=" << full(k.hbar) << " c=" << full(k.c)
      << " eps0=" << full(k.eps0) << " mu0=" << full(k.mu0) << ")\n";
  out << "output_dir  : " << cfg.output_dir.string() << "\n";
  out << "seed        : " << cfg.seed << "\n";

  auto describe = [&](const std::string& label, const Vec3& kv) {
    out << label << ": k=(" << full(kv[0]) << ", " << full(kv[1]) << ", " << full(kv[2])
        << ") |k|=" << full(kv.norm()) << " omega=" << full(k.c * kv.norm());
    if (g.on_grid(kv)) {
      const auto idx = g.unravel(g.k_index(kv));
      out << " grid index=(" << idx[0] << ", " << idx[1] << ", " << idx[2] << ")";
    } else {
      out << " (off-grid)";
    }
    out << "\n";
  };
  if (cfg.pulse) {
    describe("pulse mode  ", cfg.pulse->k_center);
    if (cfg.pulse->bandwidth > 0.0) {
      out << "bandwidth   : " << full(cfg.pulse->bandwidth) << " (sigma_k="
          << full(cfg.pulse->bandwidth * cfg.pulse->k_center.norm()) << ")\n";
    }
  }
  if (cfg.bichromatic) {
    describe("mode 1      ", cfg.bichromatic->k1);
    describe("mode 2      ", cfg.bichromatic->k2);
  }
  if (cfg.fock) {
    for (std::size_t i = 0; i < cfg.fock->modes.size(); ++i) {
      describe("fock mode " + std::to_string(i) + (cfg.fock->modes[i].helicity == Helicity::Plus ? "+" : "-"),
               cfg.fock->modes[i].k);
    }
    out << "max occ.    : " << cfg.fock->max_occupation << "\n";
  }
  return out.str();
}

std::size_t RunResult::failed() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

namespace {

// ---------------------------------------------------------------------------
// report assembly

class Report {
 public:
  void section(const std::string& title) { text_ << "\n[" << title << "]\n"; }
  void fact(const std::string& key, const std::string& value) {
    text_ << key << " = " << value << "\n";
  }
  void fact(const std::string& key, double value) { fact(key, full(value)); }

  void at_most(const std::string& name, double measured, double tol) {
    add(name, measured, "<= " + sci(tol), measured <= tol);
  }
  void at_least(const std::string& name, double measured, double threshold) {
    add(name, measured, ">= " + sci(threshold), measured >= threshold);
  }
  void within(const std::string& name, double measured, double lo, double hi) {
    add(name, measured, "in [" + fmt("%g", lo) + ", " + fmt("%g", hi) + "]",
        measured >= lo && measured <= hi);
  }
  void exactly_zero(const std::string& name, double measured) {
    add(name, measured, "== 0", measured == 0.0);
  }

  RunResult finish() {
    std::ostringstream out;
    out << text_.str();
    std::size_t failed = 0;
    for (const auto& c : checks_) failed += c.passed ? 0 : 1;
    out << "\n[summary]\nchecks = " << checks_.size() << "\nfailed = " << failed << "\n";
    for (const auto& c : checks_) {
      if (!c.passed) out << "failed_check = " << c.name << "\n";
    }
    RunResult r;
    r.report = out.str();
    r.checks = checks_;
    return r;
  }

 private:
  void add(const std::string& name, double measured, const std::string& criterion, bool ok) {
    text_ << "check " << name << ": measured=" << sci(measured) << " tolerance " << criterion
          << " -> " << (ok ? "PASS" : "FAIL") << "\n";
    checks_.push_back({name, measured, criterion, ok});
  }

  std::ostringstream text_;
  std::vector<CheckResult> checks_;
};

class CsvFile {
 public:
  CsvFile(const fs::path& path, const std::string& header) : path_(path), out_(path) {
    if (!out_) throw Error(ErrorKind::Io, "cannot write " + path.string());
    out_ << header << "\n";
  }
  template <typename... Values>
  void row(const Values&... values) {
    bool first = true;
    ((out_ << (first ? "" : ",") << cell(values), first = false), ...);
    out_ << "\n";
  }
  const fs::path& path() const { return path_; }

 private:
  static std::string cell(double v) { return full(v); }
  static std::string cell(int v) { return std::to_string(v); }
  static std::string cell(std::size_t v) { return std::to_string(v); }

  fs::path path_;
  std::ofstream out_;
};

void prepare_output_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw Error(ErrorKind::Io, "cannot create output directory " + dir.string());
  }
}

fs::path write_spectrum_csv(const fs::path& dir, const SpectralCoefficients& coeffs,
                            const PhysicalConstants& consts) {
  const Grid3D& g = coeffs.grid;
  const SpectralField phi = synthesize(coeffs);
  const PhotonSpectrum ns = photon_number_spectrum(phi, consts);
  CsvFile csv(dir / "spectrum.csv",
              "k_index,kx,ky,kz,abs_c_plus,abs_c_minus,energy_density,photon_density");
  for (std::size_t m = 0; m < g.size(); ++m) {
    const Vec3 k = g.wavevector(m);
    csv.row(m, k[0], k[1], k[2], std::abs(coeffs.c_plus[m]), std::abs(coeffs.c_minus[m]),
            phi.values[m].squaredNorm(), ns.n[m]);
  }
  return csv.path();
}

fs::path write_density_csv(const fs::path& dir, const SpectralCoefficients& coeffs,
                           const PhotonWavefunction& photon, double t,
                           const PhysicalConstants& consts) {
  const Grid3D& g = coeffs.grid;
  const PositionSynthesis ps = synthesize_position(photon, t);
  const FieldState field = to_spatial(synthesize(evolve(coeffs, t - coeffs.time, consts)));
  CsvFile csv(dir / "density.csv", "ix,iy,iz,x,y,z,rho,u,jx,jy,jz");
  for (std::size_t n = 0; n < g.size(); ++n) {
    const auto i = g.unravel(n);
    const Vec3 r = g.position(n);
    const Vec3& j = ps.densities.jprob[n];
    csv.row(i[0], i[1], i[2], r[0], r[1], r[2], ps.densities.rho[n],
            field.values[n].squaredNorm(), j[0], j[1], j[2]);
  }
  return csv.path();
}

fs::path write_comparison_csv(const fs::path& dir, const Grid3D& g, const DensityComparison& cmp) {
  CsvFile csv(dir / "comparison.csv", "x,y,z,rho_photon,u_over_hbar_omega_bar,relative_deviation");
  for (std::size_t n = 0; n < g.size(); ++n) {
    const Vec3 r = g.position(n);
    csv.row(r[0], r[1], r[2], cmp.rho_photon[n], cmp.u_over_hbar_omega_bar[n],
            cmp.relative_deviation[n]);
  }
  return csv.path();
}

double continuity_ratio(const SpectralCoefficients& coeffs, double dt,
                        const PhysicalConstants& consts, double* coarse) {
  const double r1 = continuity_residual(coeffs, dt, consts);
  const double r2 = continuity_residual(coeffs, 0.5 * dt, consts);
  if (coarse) *coarse = r1;
  return r2 > 0.0 ? r1 / r2 : 0.0;
}

double max_norm_deviation(const PhotonWavefunction& photon, const std::vector<double>& times) {
  double worst = 0.0;
  for (double t : times) {
    worst = std::max(worst, std::abs(synthesize_position(photon, t).densities.total - 1.0));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// field scenarios

RunResult run_field_scenario(const ScenarioConfig& cfg, Report& rep) {
  const Grid3D g = cfg.grid();
  const PhysicalConstants& k = cfg.constants;
  const double crossing = g.max_length() / k.c;
  const double dt_probe = kProbeCrossings * crossing;

  SpectralCoefficients coeffs = SpectralCoefficients::zeros(g);
  std::optional<double> expected_photons;
  double photon_tol = 0.0;

  rep.section("field");
  if (cfg.scenario == ScenarioKind::Bichromatic) {
    const auto& b = *cfg.bichromatic;
    const auto c1 = with_energy(plane_wave(g, b.k1, b.mix), b.e1);
    const auto c2 = with_energy(plane_wave(g, b.k2, b.mix), b.e2);
    coeffs = c1;
    for (std::size_t m = 0; m < g.size(); ++m) {
      coeffs.c_plus[m] += c2.c_plus[m];
      coeffs.c_minus[m] += c2.c_minus[m];
    }
    const double w1 = k.c * b.k1.norm();
    const double w2 = k.c * b.k2.norm();
    rep.fact("omega_1", w1);
    rep.fact("omega_2", w2);
    rep.fact("energy_1", b.e1);
    rep.fact("energy_2", b.e2);
    expected_photons = b.e1 / (k.hbar * w1) + b.e2 / (k.hbar * w2);
    photon_tol = 1e-10;
  } else {
    const auto& p = *cfg.pulse;
    const double quantum = k.photon_energy(p.k_center.norm());
    const SpectralCoefficients shape = cfg.scenario == ScenarioKind::Monochromatic
                                           ? plane_wave(g, p.k_center, p.mix)
                                           : gaussian_packet(g, p.k_center, p.bandwidth, p.mix);
    coeffs = with_energy(shape, p.energy_quanta * quantum);
    rep.fact("k_center", "(" + full(p.k_center[0]) + ", " + full(p.k_center[1]) + ", " +
                             full(p.k_center[2]) + ")");
    rep.fact("omega_center", k.c * p.k_center.norm());
    rep.fact("energy_target", p.energy_quanta * quantum);
    if (cfg.scenario == ScenarioKind::Monochromatic) {
      expected_photons = p.energy_quanta;
      photon_tol = 1e-8;
    } else {
      rep.fact("bandwidth", p.bandwidth);
    }
  }

  const SpectralField spectrum = synthesize(coeffs);
  const FieldState field = to_spatial(spectrum);
  const FluxField flux = observables(field, k);
  const double energy_spectral = spectral_norm2(spectrum);
  rep.fact("energy_position_space", flux.total_energy);
  rep.fact("energy_spectral", energy_spectral);

  const PhotonWavefunction photon = scale_to_photon(spectrum, k);
  const PhotonSpectrum ns = photon_number_spectrum(spectrum, k);
  rep.fact("photon_number", photon.photon_number);
  rep.fact("photon_number_spectral_sum", ns.total);
  if (!photon.warning.empty()) rep.fact("warning", photon.warning);

  rep.section("checks");
  rep.at_most("parseval_energy", std::abs(flux.total_energy - energy_spectral) / energy_spectral, 1e-10);
  rep.at_most("transversality", transversality_residual(spectrum), 1e-12);
  rep.at_most("forward_subspace_residual", photon.forward_residual, 1e-12);
  rep.at_most("photon_number_consistency", std::abs(photon.photon_number - ns.total) / ns.total, 1e-10);
  if (expected_photons) {
    rep.fact("photon_number_expected", *expected_photons);
    rep.at_most("photon_number", std::abs(photon.photon_number - *expected_photons) / *expected_photons,
                photon_tol);
  }

  const std::vector<double> times{0.0, cfg.sample_time, 0.5 * crossing};
  rep.fact("norm_sample_times", full(times[0]) + ", " + full(times[1]) + ", " + full(times[2]));
  rep.at_most("photon_normalisation", max_norm_deviation(photon, times), 1e-10);

  const double later = flux.total_energy;
  const double evolved = classical_energy(evolve(coeffs, 0.5 * crossing, k));
  rep.at_most("energy_conservation", std::abs(evolved - later) / later, 1e-12);
  rep.at_most("poynting_imaginary_part", flux.max_imag_ratio, 1e-12);
  rep.at_most("current_form_identity", probability_current_consistency(photon, cfg.sample_time), 1e-12);

  double classical_r = 0.0;
  double photon_r = 0.0;
  const double classical_ratio = continuity_ratio(coeffs, dt_probe, k, &classical_r);
  const double photon_ratio = continuity_ratio(photon.coeffs, dt_probe, k, &photon_r);
  rep.fact("dt_probe", dt_probe);
  switch (cfg.scenario) {
    case ScenarioKind::Monochromatic:
      rep.at_most("continuity_classical", classical_r, 1e-10);
      rep.at_most("continuity_photon", photon_r, 1e-10);
      break;
    case ScenarioKind::GaussianPulse:
      rep.at_most("continuity_classical", classical_r, 1e-6);
      rep.at_most("continuity_photon", photon_r, 1e-6);
      rep.within("continuity_convergence_classical", classical_ratio, 3.5, 4.5);
      rep.within("continuity_convergence_photon", photon_ratio, 3.5, 4.5);
      break;
    default:
      // A two-frequency beat has an O(1) third time derivative, so only the
      // convergence order is asserted.
      rep.fact("continuity_classical", classical_r);
      rep.fact("continuity_photon", photon_r);
      rep.within("continuity_convergence_classical", classical_ratio, 3.5, 4.5);
      rep.within("continuity_convergence_photon", photon_ratio, 3.5, 4.5);
      break;
  }

  const DensityComparison cmp = density_comparison(spectrum, k);
  rep.section("photon_vs_energy_density");
  rep.fact("monochromatic", cmp.monochromatic ? "true" : "false");
  rep.fact("mean_omega", cmp.mean_omega);
  rep.fact("mean_omega_definition", "energy-weighted");
  rep.fact("energy_over_hbar_mean_omega", cmp.energy / (k.hbar * cmp.mean_omega));
  rep.fact("photon_number", cmp.photon_number);
  rep.fact("relative_deviation_floor", kDeviationFloor);
  rep.at_most("spectral_ratio_deviation", cmp.max_ratio_deviation, 1e-12);
  if (cfg.scenario == ScenarioKind::Monochromatic) {
    rep.at_most("density_deviation", cmp.max_relative_deviation, 1e-10);
  } else if (cfg.scenario == ScenarioKind::Bichromatic) {
    rep.at_least("density_deviation", cmp.max_relative_deviation, 0.1);
  } else {
    rep.fact("density_deviation", cmp.max_relative_deviation);
  }

  RunResult result = rep.finish();
  prepare_output_dir(cfg.output_dir);
  result.files.push_back(write_spectrum_csv(cfg.output_dir, coeffs, k));
  result.files.push_back(write_density_csv(cfg.output_dir, coeffs, photon, cfg.sample_time, k));
  result.files.push_back(write_comparison_csv(cfg.output_dir, g, cmp));
  return result;
}

// ---------------------------------------------------------------------------
// Fock scenario

double commutator_defect(const FockState& state, std::size_t mode) {
  const FockState aad = annihilate(create(state, mode), mode);
  const FockState ada = create(annihilate(state, mode), mode);
  return aad.plus(ada, -1.0).plus(state, -1.0).norm2();
}

bool has_headroom(const FockState& state) {
  const int cap = state.modes().max_occupation();
  for (const auto& [occ, amp] : state.amplitudes()) {
    for (int n : occ) {
      if (n >= cap) return false;
    }
  }
  return true;
}

RunResult run_fock_scenario(const ScenarioConfig& cfg, Report& rep) {
  const Grid3D g = cfg.grid();
  const PhysicalConstants& k = cfg.constants;
  const FockParams& f = *cfg.fock;
  const ModeSet modes(f.modes, f.max_occupation);

  FockState state = FockState::vacuum(modes);
  for (std::size_t idx : f.prepare) state = create(state, idx);
  if (state.is_zero()) throw Error(ErrorKind::Config, "fock.prepare truncates to the zero state");
  const double loss = state.truncation_loss();
  state = state.normalized();

  rep.section("fock");
  rep.fact("modes", static_cast<double>(modes.size()));
  rep.fact("max_occupation", static_cast<double>(modes.max_occupation()));
  rep.fact("truncation_loss", loss);
  for (std::size_t m = 0; m < modes.size(); ++m) {
    rep.fact("number_mode_" + std::to_string(m), number_expectation(state, m));
  }
  const double total = total_number(state);
  const double energy = hamiltonian_expectation(state, k);
  rep.fact("total_number", total);
  rep.fact("hamiltonian", energy);

  VolumeRegion volume;
  for (int a = 0; a < 3; ++a) {
    volume.lo[a] = g.origin()[a];
    volume.hi[a] = g.origin()[a] + g.length(a);
  }
  const double whole = coarse_number_in_volume(state, volume, g, k);
  if (f.volume) {
    volume = *f.volume;
  } else {
    volume.hi[0] = g.origin()[0] + 0.5 * g.length(0);
  }
  const double part = coarse_number_in_volume(state, volume, g, k);
  rep.fact("volume_lo", "(" + full(volume.lo[0]) + ", " + full(volume.lo[1]) + ", " + full(volume.lo[2]) + ")");
  rep.fact("volume_hi", "(" + full(volume.hi[0]) + ", " + full(volume.hi[1]) + ", " + full(volume.hi[2]) + ")");
  rep.fact("number_in_volume", part);

  SurfaceRegion surface;
  if (f.surface) {
    surface = *f.surface;
  } else {
    surface.axis = 0;
    surface.position = g.origin()[0] + 0.5 * g.length(0);
    surface.t1 = 0.0;
    surface.t2 = g.length(0) / k.c;
  }
  rep.fact("surface_axis", static_cast<double>(surface.axis));
  rep.fact("surface_position", surface.position);
  rep.fact("surface_window", full(surface.t1) + ", " + full(surface.t2));
  rep.fact("flux_through_surface", coarse_flux_through_surface(state, surface, g, k));

  rep.section("checks");
  rep.at_most("whole_box_number", std::abs(whole - total), 1e-10);
  rep.exactly_zero("vacuum_energy", hamiltonian_expectation(FockState::vacuum(modes), k));
  rep.at_least("hamiltonian_nonnegative", energy, 0.0);
  if (has_headroom(state)) {
    double worst = 0.0;
    for (std::size_t m = 0; m < modes.size(); ++m) worst = std::max(worst, commutator_defect(state, m));
    rep.at_most("canonical_commutator", worst, 1e-24);
  } else {
    rep.fact("canonical_commutator", "skipped (state touches max_occupation)");
  }
  return rep.finish();
}

// ---------------------------------------------------------------------------
// invariant suite

Vec3 random_direction(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vec3 v;
  do {
    v = Vec3(normal(rng), normal(rng), normal(rng));
  } while (v.norm() < 1e-3);
  return v.normalized();
}

RunResult run_invariant_suite(const ScenarioConfig& cfg, Report& rep) {
  const Grid3D g = cfg.grid();
  const PhysicalConstants& k = cfg.constants;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const double crossing = g.max_length() / k.c;
  const double dt_probe = kProbeCrossings * crossing;

  rep.section("suite");
  rep.fact("generator", "mt19937_64");
  rep.fact("seed", std::to_string(cfg.seed));

  // helicity basis on random and near-axis wavevectors
  {
    double unit = 0.0, ortho = 0.0, trans = 0.0, eigen = 0.0, cross_id = 0.0;
    const cplx i(0.0, 1.0);
    for (int s = 0; s < 1200; ++s) {
      Vec3 kv;
      if (s < 1000) {
        kv = random_direction(rng) * (0.1 + 10.0 * uniform(rng));
      } else {
        // kx^2 + ky^2 from 1e-12 |k|^2 upwards
        const double eps = std::pow(10.0, -6.0 + 5.0 * uniform(rng));
        const double phi = 2.0 * kPi * uniform(rng);
        kv = Vec3(eps * std::cos(phi), eps * std::sin(phi), s % 2 ? 1.0 : -1.0);
      }
      const HelicityVectors h = transverse_basis(kv);
      const Vec3 khat = kv.normalized();
      const CVec3 kc = khat.cast<cplx>();
      unit = std::max({unit, std::abs(h.f_plus.norm() - 1.0), std::abs(h.f_minus.norm() - 1.0)});
      ortho = std::max(ortho, std::abs(h.f_plus.dot(h.f_minus)));
      trans = std::max({trans, std::abs(kc.dot(h.f_plus)), std::abs(kc.dot(h.f_minus))});
      const auto [ep, em] = helicity_eigencheck(kv, h);
      eigen = std::max({eigen, ep, em});
      cross_id = std::max({cross_id, (i * h.f_plus + cross(kc, h.f_plus)).norm(),
                        (-i * h.f_minus + cross(kc, h.f_minus)).norm()});
    }
    rep.at_most("basis_unit_norm", unit, 1e-12);
    rep.at_most("basis_orthogonality", ortho, 1e-12);
    rep.at_most("basis_transversality", trans, 1e-12);
    rep.at_most("basis_helicity_eigenvalue", eigen, 1e-12);
    rep.at_most("basis_cross_identity", cross_id, 1e-12);
  }

  // Hamiltonian eigenvalue on every grid mode
  {
    double worst = 0.0;
    for (Helicity hel : {Helicity::Plus, Helicity::Minus}) {
      SpectralField basis = SpectralField::zeros(g);
      for (std::size_t m = 1; m < g.size(); ++m) basis.values[m] = transverse_basis(g.wavevector(m)).psi(hel);
      const SpectralField out = apply_hamiltonian(basis, k);
      for (std::size_t m = 1; m < g.size(); ++m) {
        const double e = k.photon_energy(g.wavevector(m).norm());
        worst = std::max(worst, (out.values[m] - e * basis.values[m]).norm() / (e * basis.values[m].norm()));
      }
    }
    rep.at_most("hamiltonian_eigenvalue", worst, 1e-12);
  }

  // Fourier contract and projection on a random forward field
  const SpectralCoefficients random = random_forward(g, rng);
  {
    const SpectralField spec = synthesize(random);
    const FieldState field = to_spatial(spec);
    const SpectralField back = to_spectral(field);
    const FieldState again = to_spatial(back);
    double diff = 0.0, scale = 0.0;
    for (std::size_t p = 0; p < g.size(); ++p) {
      diff = std::max(diff, (again.values[p] - field.values[p]).norm());
      scale = std::max(scale, field.values[p].norm());
    }
    rep.at_most("fourier_round_trip", diff / scale, 1e-12);
    const double e_r = spatial_norm2(field);
    const double e_k = spectral_norm2(spec);
    rep.at_most("parseval", std::abs(e_r - e_k) / e_k, 1e-10);
    rep.at_most("transversality", transversality_residual(back), 1e-10);

    const Projection proj = project(spec);
    double coeff_diff = 0.0, coeff_scale = 0.0;
    for (std::size_t m = 0; m < g.size(); ++m) {
      coeff_diff = std::max({coeff_diff, std::abs(proj.coeffs.c_plus[m] - random.c_plus[m]),
                             std::abs(proj.coeffs.c_minus[m] - random.c_minus[m])});
      coeff_scale = std::max({coeff_scale, std::abs(random.c_plus[m]), std::abs(random.c_minus[m])});
    }
    rep.at_most("project_synthesize", coeff_diff / coeff_scale, 1e-12);
    rep.at_most("projection_residual", proj.residual / coeff_scale, 1e-12);

    const FluxField flux = observables(field, k);
    rep.at_most("poynting_imaginary_part", flux.max_imag_ratio, 1e-12);
    const double evolved = classical_energy(evolve(random, 0.37 * crossing, k));
    rep.at_most("energy_conservation", std::abs(evolved - flux.total_energy) / flux.total_energy, 1e-12);

    const PhotonWavefunction photon = scale_to_photon(spec, k);
    rep.at_most("current_form_identity", probability_current_consistency(photon, 0.0), 1e-12);
    rep.at_most("photon_normalisation",
                max_norm_deviation(photon, {0.0, 0.25 * crossing, 0.5 * crossing}), 1e-10);
  }

  // continuity on a Gaussian packet
  const Vec3 k0(kSuitePacketCentre * g.dk(0), 0.0, 0.0);
  const SpectralCoefficients packet =
      gaussian_packet(g, k0, kSuitePacketSigma / kSuitePacketCentre, HelicityMix{});
  const PhotonWavefunction packet_photon = scale_to_photon(synthesize(packet), k);
  {
    double r_c = 0.0, r_p = 0.0;
    const double ratio_c = continuity_ratio(packet, dt_probe, k, &r_c);
    const double ratio_p = continuity_ratio(packet_photon.coeffs, dt_probe, k, &r_p);
    rep.fact("dt_probe", dt_probe);
    rep.at_most("continuity_classical", r_c, 1e-6);
    rep.at_most("continuity_photon", r_p, 1e-6);
    rep.within("continuity_convergence_classical", ratio_c, 3.5, 4.5);
    rep.within("continuity_convergence_photon", ratio_p, 3.5, 4.5);
  }

  // one photon's worth of classical energy
  {
    const Vec3 kp(kSuitePacketCentre * g.dk(0), 0.0, 0.0);
    const auto mono = with_energy(plane_wave(g, kp, HelicityMix{}), k.photon_energy(kp.norm()));
    const PhotonWavefunction ph = scale_to_photon(synthesize(mono), k);
    rep.at_most("single_photon_number", std::abs(ph.photon_number - 1.0), 1e-8);
  }

  // Fock space
  {
    const ModeSet modes({{Vec3(g.dk(0), 0, 0), Helicity::Plus}, {Vec3(0, g.dk(1), 0), Helicity::Minus}}, 3);
    FockState state = FockState::zero(modes);
    std::normal_distribution<double> normal;
    for (int a = 0; a <= 2; ++a) {
      for (int b = 0; b <= 2; ++b) state.add({a, b}, cplx(normal(rng), normal(rng)));
    }
    state = state.normalized();
    double worst = 0.0;
    for (std::size_t m = 0; m < modes.size(); ++m) worst = std::max(worst, commutator_defect(state, m));
    rep.at_most("canonical_commutator", worst, 1e-24);
    VolumeRegion box;
    for (int a = 0; a < 3; ++a) {
      box.lo[a] = g.origin()[a];
      box.hi[a] = g.origin()[a] + g.length(a);
    }
    rep.at_most("whole_box_number",
                std::abs(coarse_number_in_volume(state, box, g, k) - total_number(state)), 1e-10);
    rep.exactly_zero("vacuum_energy", hamiltonian_expectation(FockState::vacuum(modes), k));
  }

  RunResult result = rep.finish();
  prepare_output_dir(cfg.output_dir);
  result.files.push_back(write_spectrum_csv(cfg.output_dir, packet, k));
  result.files.push_back(write_density_csv(cfg.output_dir, packet, packet_photon, cfg.sample_time, k));
  result.files.push_back(
      write_comparison_csv(cfg.output_dir, g, density_comparison(synthesize(packet), k)));
  return result;
}

}  // namespace

RunResult run_scenario(const ScenarioConfig& cfg) {
  cfg.constants.validate();
  Report rep;
  rep.section("run");
  rep.fact("scenario", std::string(scenario_name(cfg.scenario)));
  rep.fact("config", cfg.source);
  rep.fact("seed", std::to_string(cfg.seed));
  rep.fact("constants", cfg.constants_label);
  rep.fact("grid_n", std::to_string(cfg.n[0]) + "," + std::to_string(cfg.n[1]) + "," +
                         std::to_string(cfg.n[2]));
  rep.fact("sample_time", cfg.sample_time);

  RunResult result;
  switch (cfg.scenario) {
    case ScenarioKind::Monochromatic:
    case ScenarioKind::GaussianPulse:
    case ScenarioKind::Bichromatic:
      result = run_field_scenario(cfg, rep);
      break;
    case ScenarioKind::FockDemo:
      result = run_fock_scenario(cfg, rep);
      prepare_output_dir(cfg.output_dir);
      break;
    case ScenarioKind::InvariantSuite:
      result = run_invariant_suite(cfg, rep);
      break;
  }

  const fs::path report_path = cfg.output_dir / "report.txt";
  std::ofstream out(report_path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + report_path.string());
  out << result.report;
  result.files.insert(result.files.begin(), report_path);
  return result;
}

std::string preset_text(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::Monochromatic:
      return R"(# Single circularly polarised plane wave carrying one photon's worth of energy.
scenario = monochromatic
grid.n = [16, 16, 16]
grid.dr = [1.0, 1.0, 1.0]
constants = natural
k_units = dk
pulse.k_center = [4, 0, 0]
pulse.helicity_mix = [[1, 0], [0, 0]]
pulse.energy = 1.0          # in units of hbar * c * |k_center|
sample_time = 2.0
output_dir = "out/monochromatic"
seed = 1
)";
    case ScenarioKind::GaussianPulse:
      return R"(# Gaussian wave packet, sigma_k = 0.0625 * |k_center| = 0.25 dk.
scenario = gaussian_pulse
grid.n = [16, 16, 16]
grid.dr = [1.0, 1.0, 1.0]
constants = natural
k_units = dk
pulse.k_center = [4, 0, 0]
pulse.bandwidth = 0.0625
pulse.helicity_mix = [[1, 0], [0, 0]]
pulse.energy = 1.0
sample_time = 4.0
output_dir = "out/gaussian_pulse"
seed = 2
)";
    case ScenarioKind::Bichromatic:
      return R"(# Two plane waves, omega_1 = 1 and omega_2 = 2 (natural units), equal energies.
# dr = 6 pi / 16 makes dk = 1/3, so k1 = 3 dk and k2 = 6 dk.
scenario = bichromatic
grid.n = [16, 16, 16]
grid.dr = [1.1780972450961724, 1.1780972450961724, 1.1780972450961724]
constants = natural
k_units = dk
bichromatic.k1 = [3, 0, 0]
bichromatic.e1 = 1.0
bichromatic.k2 = [6, 0, 0]
bichromatic.e2 = 1.0
bichromatic.helicity_mix = [[1, 0], [0, 0]]
sample_time = 0.0
output_dir = "out/bichromatic"
seed = 3
)";
    case ScenarioKind::FockDemo:
      return R"(# Two photons in mode 0 and one in mode 1; coarse-grained counters.
scenario = fock_demo
grid.n = [16, 16, 16]
grid.dr = [1.0, 1.0, 1.0]
constants = natural
k_units = dk
fock.modes = [[4, 0, 0, 1], [0, 4, 0, -1]]
fock.max_occupation = 3
fock.prepare = [0, 0, 1]
fock.surface.axis = 0
fock.surface.position = 0.0
fock.surface.normal = 1
fock.surface.window = [0.0, 16.0]
output_dir = "out/fock_demo"
seed = 4
)";
    case ScenarioKind::InvariantSuite:
      return R"(# Full property suite on seeded random fields.
scenario = invariant_suite
grid.n = [16, 16, 16]
grid.dr = [1.0, 1.0, 1.0]
constants = natural
sample_time = 1.0
output_dir = "out/invariant_suite"
seed = 42
)";
  }
  return {};
}

std::vector<fs::path> write_presets(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw Error(ErrorKind::Io, "cannot create directory " + dir.string());
  std::vector<fs::path> out;
  for (ScenarioKind kind : kAllScenarios) {
    const fs::path path = dir / (std::string(scenario_name(kind)) + ".cfg");
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw Error(ErrorKind::Io, "cannot write " + path.string());
    f << preset_text(kind);
    f.close();
    if (!f) throw Error(ErrorKind::Io, "cannot write " + path.string());
    out.push_back(path);
  }
  return out;
}

}  // namespace photonwf
