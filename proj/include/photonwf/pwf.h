/* Copyright 2026 The photonwf Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef PHOTONWF_PWF_H
#define PHOTONWF_PWF_H

/*
 * C interface to libphotonwf.
 *
 * Every fallible call returns a pwf_status. On failure a description is
 * available from pwf_last_error() until the next failing call on the same
 * thread. Handles are opaque; each *_create / *_from_* has a matching
 * *_destroy that accepts NULL. Strings returned through char** belong to the
 * caller and are released with pwf_string_free().
 *
 * Constants arguments may be NULL, meaning natural units (hbar = c = 1).
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PWF_BUILDING_LIBRARY)
#    define PWF_API __declspec(dllexport)
#  else
#    define PWF_API __declspec(dllimport)
#  endif
#else
#  define PWF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pwf_status {
  PWF_OK = 0,
  PWF_ERR_CONFIG = 1,           /* malformed or inconsistent configuration */
  PWF_ERR_INVARIANT = 2,        /* a run finished but some checks failed */
  PWF_ERR_DOMAIN = 3,           /* argument outside the mathematical domain */
  PWF_ERR_INDEX = 4,            /* mode / occupation index out of range */
  PWF_ERR_IO = 5,
  PWF_ERR_INVALID_ARGUMENT = 6, /* NULL pointer, bad length, ... */
  PWF_ERR_INTERNAL = 7
} pwf_status;

typedef struct pwf_constants {
  double hbar;
  double c;
  double eps0;
  double mu0;
} pwf_constants;

typedef struct pwf_grid pwf_grid;
typedef struct pwf_field pwf_field;   /* helicity coefficients c+(k), c-(k) */
typedef struct pwf_photon pwf_photon; /* normalised single-photon wavefunction */
typedef struct pwf_fock pwf_fock;     /* truncated multi-mode Fock state */

PWF_API const char* pwf_version(void);
PWF_API const char* pwf_last_error(void);
PWF_API const char* pwf_status_name(pwf_status status);

PWF_API void pwf_constants_natural(pwf_constants* out);
PWF_API void pwf_constants_si(pwf_constants* out);

/* ---- grid --------------------------------------------------------------- */

/* Box centred on the origin. n: powers of two >= 4; dr > 0. */
PWF_API pwf_status pwf_grid_create(const int n[3], const double dr[3], pwf_grid** out);
PWF_API void pwf_grid_destroy(pwf_grid* grid);
PWF_API pwf_status pwf_grid_size(const pwf_grid* grid, size_t* out);
PWF_API pwf_status pwf_grid_dk(const pwf_grid* grid, double dk[3]);
PWF_API pwf_status pwf_grid_position(const pwf_grid* grid, size_t index, double r[3]);

/* ---- classical fields --------------------------------------------------- */

/* mix = {re(c+), im(c+), re(c-), im(c-)}; NULL means pure positive helicity. */
PWF_API pwf_status pwf_field_plane_wave(const pwf_grid* grid, const double k[3],
                                        const double mix[4], pwf_field** out);
/* Gaussian envelope of width bandwidth * |k0| around k0. */
PWF_API pwf_status pwf_field_gaussian(const pwf_grid* grid, const double k0[3], double bandwidth,
                                      const double mix[4], pwf_field** out);
/* Random forward field with normal coefficients below half the Nyquist wavenumber. */
PWF_API pwf_status pwf_field_random(const pwf_grid* grid, uint64_t seed, pwf_field** out);
PWF_API void pwf_field_destroy(pwf_field* field);

PWF_API pwf_status pwf_field_add(pwf_field* dst, const pwf_field* src);
PWF_API pwf_status pwf_field_set_energy(pwf_field* field, double energy);
/* Position-space integral of |E|^2 + |H|^2 over the box. */
PWF_API pwf_status pwf_field_energy(const pwf_field* field, double* out);
PWF_API pwf_status pwf_field_evolve(pwf_field* field, double dt, const pwf_constants* consts);
/* Normalised max |du/dt + div j| with a central difference of step dt. */
PWF_API pwf_status pwf_field_continuity_residual(const pwf_field* field, double dt,
                                                 const pwf_constants* consts, double* out);
/* Row-major (z fastest) samples of the energy density u, len == grid size. */
PWF_API pwf_status pwf_field_energy_density(const pwf_field* field, double* u, size_t len);

/* ---- single photon ------------------------------------------------------ */

PWF_API pwf_status pwf_photon_from_field(const pwf_field* field, const pwf_constants* consts,
                                         pwf_photon** out);
PWF_API void pwf_photon_destroy(pwf_photon* photon);
/* Photon number of the classical field before normalisation. */
PWF_API pwf_status pwf_photon_number(const pwf_photon* photon, double* out);
/* sum rho * cell volume at time t. */
PWF_API pwf_status pwf_photon_norm(const pwf_photon* photon, double t, double* out);
PWF_API pwf_status pwf_photon_density(const pwf_photon* photon, double t, double* rho, size_t len);

/* ---- Fock space --------------------------------------------------------- */

/* k holds 3 * count components, helicity holds count entries of +1 / -1.
 * The state starts as the vacuum. */
PWF_API pwf_status pwf_fock_create(const double* k, const int* helicity, size_t count,
                                   int max_occupation, pwf_fock** out);
PWF_API void pwf_fock_destroy(pwf_fock* state);
PWF_API pwf_status pwf_fock_apply_create(pwf_fock* state, size_t mode);
PWF_API pwf_status pwf_fock_apply_annihilate(pwf_fock* state, size_t mode);
PWF_API pwf_status pwf_fock_normalize(pwf_fock* state);
PWF_API pwf_status pwf_fock_truncation_loss(const pwf_fock* state, double* out);
PWF_API pwf_status pwf_fock_number(const pwf_fock* state, size_t mode, double* out);
PWF_API pwf_status pwf_fock_energy(const pwf_fock* state, const pwf_constants* consts, double* out);
/* Region [lo, hi) in physical coordinates. */
PWF_API pwf_status pwf_fock_number_in_volume(const pwf_fock* state, const pwf_grid* grid,
                                             const double lo[3], const double hi[3],
                                             const pwf_constants* consts, double t, double* out);
PWF_API pwf_status pwf_fock_flux(const pwf_fock* state, const pwf_grid* grid, int axis,
                                 double position, int normal_sign, double t1, double t2,
                                 const pwf_constants* consts, double* out);

/* ---- scenario runner ---------------------------------------------------- */

typedef struct pwf_run_options {
  const char* output_dir; /* NULL keeps the configured directory */
  int override_seed;      /* nonzero: use seed below */
  uint64_t seed;
} pwf_run_options;

/* Validates a configuration file; on success *summary describes the grid and modes. */
PWF_API pwf_status pwf_config_check(const char* path, char** summary);
/* Runs a configuration file. Returns PWF_ERR_INVARIANT when the run completed
 * but checks failed; *report and *failed_checks are filled in either case. */
PWF_API pwf_status pwf_run(const char* path, const pwf_run_options* options, char** report,
                           size_t* failed_checks);
/* Writes one runnable configuration per scenario into dir. */
PWF_API pwf_status pwf_presets_write(const char* dir, size_t* count);
PWF_API void pwf_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* PHOTONWF_PWF_H */
