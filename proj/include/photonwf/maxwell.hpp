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

// Classical vacuum dynamics on helicity coefficients and the field
// observables built from the 6-vector (sqrt(eps0) E, sqrt(mu0) H).

#include <vector>

#include "photonwf/helicity.hpp"
#include "photonwf/lattice.hpp"

namespace photonwf {

struct FluxField {
  Grid3D grid;
  std::vector<double> u;  // Psi^dagger Psi
  std::vector<Vec3> j;    // c (E* x H - H* x E)
  /// max |Im j| / max |j| over the grid (0 for a zero field).
  double max_imag_ratio = 0.0;
  /// sum u d3r
  double total_energy = 0.0;
};

/// c+-(k) <- c+-(k) exp(-i c|k| dt). Exact per mode.
SpectralCoefficients evolve(const SpectralCoefficients& coeffs, double dt,
                            const PhysicalConstants& consts = PhysicalConstants::natural());

/// i hbar c (S.k)(J Phi) per k-sample, S.k acting on each half separately.
SpectralField apply_hamiltonian(const SpectralField& spectrum,
                                const PhysicalConstants& consts);

/// Current density c (E* x H - H* x E) of a single 6-vector, before taking
/// the (vanishing) imaginary part.
CVec3 cross_form_current(const CVec6& psi, double c);
/// The same density written as i c Psi^dagger S (J Psi).
CVec3 spin_form_current(const CVec6& psi, double c);

FluxField observables(const FieldState& field,
                      const PhysicalConstants& consts = PhysicalConstants::natural());

/// Spectral divergence of a real vector field sampled on `grid`.
std::vector<double> spectral_divergence(const Grid3D& grid, const std::vector<Vec3>& field);

/// Max-norm of du/dt + div j at coeffs.time, with du/dt from a central
/// difference over +-dt_probe and div j taken spectrally, normalised by
/// max(u) / (L_max / c).
double continuity_residual(const SpectralCoefficients& coeffs, double dt_probe,
                           const PhysicalConstants& consts = PhysicalConstants::natural());

/// max over k != 0 of (|k.Phi_upper| + |k.Phi_lower|) / |k|, divided by the
/// largest |Phi(k)|.
double transversality_residual(const SpectralField& spectrum);

}  // namespace photonwf
