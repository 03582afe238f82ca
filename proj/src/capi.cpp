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
#include "photonwf/pwf.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <random>
#include <string>

#include "photonwf/fock.hpp"
#include "photonwf/maxwell.hpp"
#include "photonwf/photon.hpp"
#include "photonwf/scenario.hpp"
#include "photonwf/sources.hpp"

struct pwf_grid {
  photonwf::Grid3D grid;
};
struct pwf_field {
  photonwf::SpectralCoefficients coeffs;
};
struct pwf_photon {
  photonwf::PhotonWavefunction photon;
};
struct pwf_fock {
  photonwf::FockState state;
};

namespace {

using namespace photonwf;

thread_local std::string g_last_error;

pwf_status fail(pwf_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

pwf_status from_kind(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Config: return PWF_ERR_CONFIG;
    case ErrorKind::Domain: return PWF_ERR_DOMAIN;
    case ErrorKind::Index: return PWF_ERR_INDEX;
    case ErrorKind::Io: return PWF_ERR_IO;
    case ErrorKind::Numeric: return PWF_ERR_DOMAIN;
  }
  return PWF_ERR_INTERNAL;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
pwf_status guard(Fn&& fn) {
  try {
    fn();
    return PWF_OK;
  } catch (const Error& e) {
    return fail(from_kind(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PWF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PWF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PWF_ERR_INTERNAL, "unknown error");
  }
}

#define PWF_REQUIRE(cond)                                                      \
  do {                                                                         \
    if (!(cond)) return fail(PWF_ERR_INVALID_ARGUMENT, "invalid argument: " #cond); \
  } while (0)

PhysicalConstants consts_of(const pwf_constants* c) {
  if (!c) return PhysicalConstants::natural();
  PhysicalConstants k{c->hbar, c->c, c->eps0, c->mu0};
  k.validate();
  return k;
}

HelicityMix mix_of(const double* mix) {
  if (!mix) return HelicityMix{};
  return HelicityMix{cplx(mix[0], mix[1]), cplx(mix[2], mix[3])};
}

Vec3 vec_of(const double* v) { return Vec3(v[0], v[1], v[2]); }

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* pwf_version(void) { return "0.1.0"; }

const char* pwf_last_error(void) { return g_last_error.c_str(); }

const char* pwf_status_name(pwf_status status) {
  switch (status) {
    case PWF_OK: return "ok";
    case PWF_ERR_CONFIG: return "config error";
    case PWF_ERR_INVARIANT: return "invariant failure";
    case PWF_ERR_DOMAIN: return "domain error";
    case PWF_ERR_INDEX: return "index error";
    case PWF_ERR_IO: return "io error";
    case PWF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PWF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void pwf_constants_natural(pwf_constants* out) {
  if (!out) return;
  const auto k = PhysicalConstants::natural();
  *out = {k.hbar, k.c, k.eps0, k.mu0};
}

void pwf_constants_si(pwf_constants* out) {
  if (!out) return;
  const auto k = PhysicalConstants::si();
  *out = {k.hbar, k.c, k.eps0, k.mu0};
}

// ---- grid

pwf_status pwf_grid_create(const int n[3], const double dr[3], pwf_grid** out) {
  PWF_REQUIRE(n && dr && out);
  *out = nullptr;
  return guard([&] {
    *out = new pwf_grid{Grid3D::centred({n[0], n[1], n[2]}, {dr[0], dr[1], dr[2]})};
  });
}

void pwf_grid_destroy(pwf_grid* grid) { delete grid; }

pwf_status pwf_grid_size(const pwf_grid* grid, size_t* out) {
  PWF_REQUIRE(grid && out);
  *out = grid->grid.size();
  return PWF_OK;
}

pwf_status pwf_grid_dk(const pwf_grid* grid, double dk[3]) {
  PWF_REQUIRE(grid && dk);
  for (int a = 0; a < 3; ++a) dk[a] = grid->grid.dk(a);
  return PWF_OK;
}

pwf_status pwf_grid_position(const pwf_grid* grid, size_t index, double r[3]) {
  PWF_REQUIRE(grid && r);
  if (index >= grid->grid.size()) return fail(PWF_ERR_INDEX, "grid index out of range");
  const Vec3 p = grid->grid.position(index);
  for (int a = 0; a < 3; ++a) r[a] = p[a];
  return PWF_OK;
}

// ---- fields

pwf_status pwf_field_plane_wave(const pwf_grid* grid, const double k[3], const double mix[4],
                                pwf_field** out) {
  PWF_REQUIRE(grid && k && out);
  *out = nullptr;
  return guard([&] { *out = new pwf_field{plane_wave(grid->grid, vec_of(k), mix_of(mix))}; });
}

pwf_status pwf_field_gaussian(const pwf_grid* grid, const double k0[3], double bandwidth,
                              const double mix[4], pwf_field** out) {
  PWF_REQUIRE(grid && k0 && out);
  *out = nullptr;
  return guard([&] {
    *out = new pwf_field{gaussian_packet(grid->grid, vec_of(k0), bandwidth, mix_of(mix))};
  });
}

pwf_status pwf_field_random(const pwf_grid* grid, uint64_t seed, pwf_field** out) {
  PWF_REQUIRE(grid && out);
  *out = nullptr;
  return guard([&] {
    std::mt19937_64 rng(seed);
    *out = new pwf_field{random_forward(grid->grid, rng)};
  });
}

void pwf_field_destroy(pwf_field* field) { delete field; }

pwf_status pwf_field_add(pwf_field* dst, const pwf_field* src) {
  PWF_REQUIRE(dst && src);
  if (!(dst->coeffs.grid == src->coeffs.grid)) return fail(PWF_ERR_DOMAIN, "fields live on different grids");
  for (std::size_t m = 0; m < dst->coeffs.grid.size(); ++m) {
    dst->coeffs.c_plus[m] += src->coeffs.c_plus[m];
    dst->coeffs.c_minus[m] += src->coeffs.c_minus[m];
  }
  return PWF_OK;
}

pwf_status pwf_field_set_energy(pwf_field* field, double energy) {
  PWF_REQUIRE(field);
  return guard([&] { field->coeffs = with_energy(field->coeffs, energy); });
}

pwf_status pwf_field_energy(const pwf_field* field, double* out) {
  PWF_REQUIRE(field && out);
  return guard([&] { *out = classical_energy(field->coeffs); });
}

pwf_status pwf_field_evolve(pwf_field* field, double dt, const pwf_constants* consts) {
  PWF_REQUIRE(field);
  return guard([&] { field->coeffs = evolve(field->coeffs, dt, consts_of(consts)); });
}

pwf_status pwf_field_continuity_residual(const pwf_field* field, double dt,
                                         const pwf_constants* consts, double* out) {
  PWF_REQUIRE(field && out);
  return guard([&] { *out = continuity_residual(field->coeffs, dt, consts_of(consts)); });
}

pwf_status pwf_field_energy_density(const pwf_field* field, double* u, size_t len) {
  PWF_REQUIRE(field && u && len == field->coeffs.grid.size());
  return guard([&] {
    const FieldState state = to_spatial(synthesize(field->coeffs));
    for (std::size_t p = 0; p < len; ++p) u[p] = state.values[p].squaredNorm();
  });
}

// ---- photon

pwf_status pwf_photon_from_field(const pwf_field* field, const pwf_constants* consts,
                                 pwf_photon** out) {
  PWF_REQUIRE(field && out);
  *out = nullptr;
  return guard([&] {
    *out = new pwf_photon{scale_to_photon(synthesize(field->coeffs), consts_of(consts))};
  });
}

void pwf_photon_destroy(pwf_photon* photon) { delete photon; }

pwf_status pwf_photon_number(const pwf_photon* photon, double* out) {
  PWF_REQUIRE(photon && out);
  *out = photon->photon.photon_number;
  return PWF_OK;
}

pwf_status pwf_photon_norm(const pwf_photon* photon, double t, double* out) {
  PWF_REQUIRE(photon && out);
  return guard([&] { *out = synthesize_position(photon->photon, t).densities.total; });
}

pwf_status pwf_photon_density(const pwf_photon* photon, double t, double* rho, size_t len) {
  PWF_REQUIRE(photon && rho && len == photon->photon.coeffs.grid.size());
  return guard([&] {
    const PositionSynthesis ps = synthesize_position(photon->photon, t);
    std::copy(ps.densities.rho.begin(), ps.densities.rho.end(), rho);
  });
}

// ---- Fock

pwf_status pwf_fock_create(const double* k, const int* helicity, size_t count, int max_occupation,
                           pwf_fock** out) {
  PWF_REQUIRE(k && helicity && count > 0 && out);
  *out = nullptr;
  return guard([&] {
    std::vector<Mode> modes;
    for (std::size_t i = 0; i < count; ++i) {
      if (helicity[i] != 1 && helicity[i] != -1) {
        throw Error(ErrorKind::Config, "helicity must be +1 or -1");
      }
      modes.push_back({vec_of(k + 3 * i), helicity[i] > 0 ? Helicity::Plus : Helicity::Minus});
    }
    *out = new pwf_fock{FockState::vacuum(ModeSet(modes, max_occupation))};
  });
}

void pwf_fock_destroy(pwf_fock* state) { delete state; }

pwf_status pwf_fock_apply_create(pwf_fock* state, size_t mode) {
  PWF_REQUIRE(state);
  return guard([&] { state->state = create(state->state, mode); });
}

pwf_status pwf_fock_apply_annihilate(pwf_fock* state, size_t mode) {
  PWF_REQUIRE(state);
  return guard([&] { state->state = annihilate(state->state, mode); });
}

pwf_status pwf_fock_normalize(pwf_fock* state) {
  PWF_REQUIRE(state);
  return guard([&] { state->state = state->state.normalized(); });
}

pwf_status pwf_fock_truncation_loss(const pwf_fock* state, double* out) {
  PWF_REQUIRE(state && out);
  *out = state->state.truncation_loss();
  return PWF_OK;
}

pwf_status pwf_fock_number(const pwf_fock* state, size_t mode, double* out) {
  PWF_REQUIRE(state && out);
  return guard([&] { *out = number_expectation(state->state, mode); });
}

pwf_status pwf_fock_energy(const pwf_fock* state, const pwf_constants* consts, double* out) {
  PWF_REQUIRE(state && out);
  return guard([&] { *out = hamiltonian_expectation(state->state, consts_of(consts)); });
}

pwf_status pwf_fock_number_in_volume(const pwf_fock* state, const pwf_grid* grid,
                                     const double lo[3], const double hi[3],
                                     const pwf_constants* consts, double t, double* out) {
  PWF_REQUIRE(state && grid && lo && hi && out);
  return guard([&] {
    VolumeRegion region;
    for (int a = 0; a < 3; ++a) {
      region.lo[a] = lo[a];
      region.hi[a] = hi[a];
    }
    *out = coarse_number_in_volume(state->state, region, grid->grid, consts_of(consts), t);
  });
}

pwf_status pwf_fock_flux(const pwf_fock* state, const pwf_grid* grid, int axis, double position,
                         int normal_sign, double t1, double t2, const pwf_constants* consts,
                         double* out) {
  PWF_REQUIRE(state && grid && out);
  return guard([&] {
    const SurfaceRegion region{axis, position, normal_sign, t1, t2};
    *out = coarse_flux_through_surface(state->state, region, grid->grid, consts_of(consts));
  });
}

// ---- scenario runner

pwf_status pwf_config_check(const char* path, char** summary) {
  PWF_REQUIRE(path && summary);
  *summary = nullptr;
  return guard([&] { *summary = copy_string(check_summary(load_config(path))); });
}

pwf_status pwf_run(const char* path, const pwf_run_options* options, char** report,
                   size_t* failed_checks) {
  PWF_REQUIRE(path && report && failed_checks);
  *report = nullptr;
  *failed_checks = 0;
  std::size_t failed = 0;
  const pwf_status status = guard([&] {
    ScenarioConfig cfg = load_config(path);
    if (options && options->output_dir) cfg.output_dir = options->output_dir;
    if (options && options->override_seed) cfg.seed = options->seed;
    const RunResult result = run_scenario(cfg);
    failed = result.failed();
    *report = copy_string(result.report);
  });
  if (status != PWF_OK) return status;
  *failed_checks = failed;
  if (failed > 0) {
    return fail(PWF_ERR_INVARIANT, std::to_string(failed) + " check(s) failed");
  }
  return PWF_OK;
}

pwf_status pwf_presets_write(const char* dir, size_t* count) {
  PWF_REQUIRE(dir);
  return guard([&] {
    const auto files = write_presets(dir);
    if (count) *count = files.size();
  });
}

void pwf_string_free(char* s) { std::free(s); }

}  // extern "C"
