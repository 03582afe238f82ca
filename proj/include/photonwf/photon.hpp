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

// Single-photon wavefunction obtained from a classical spectrum by dividing
// every spectral component by sqrt(hbar c |k|), and the densities built on it.

#include <string>
#include <vector>

#include "photonwf/helicity.hpp"
#include "photonwf/lattice.hpp"

namespace photonwf {

/// Forward-content residual (relative to max |Phi|) above which
/// scale_to_photon attaches a warning.
inline constexpr double kForwardResidualWarning = 1e-6;

struct PhotonWavefunction {
  /// Momentum-space amplitudes with Phi(k, t) = 2^(-1/2) [c+ psi+ + c- psi-]
  /// and sum (|c+|^2 + |c-|^2) d3k = 1.
  SpectralCoefficients coeffs;
  /// Squared norm of the scaled classical spectrum before renormalisation,
  /// i.e. the photon number carried by the classical field.
  double photon_number = 0.0;
  /// |sum (|c+|^2 + |c-|^2) d3k - 1| after renormalisation.
  double norm_check = 0.0;
  /// Projection residual relative to max |Phi_em(k)|.
  double forward_residual = 0.0;
  double discarded_dc = 0.0;
  std::string warning;
  PhysicalConstants consts;

  /// Phi(k, t) on the lattice.
  SpectralField spectrum(double t) const;
};

PhotonWavefunction scale_to_photon(const SpectralField& spectrum,
                                   const PhysicalConstants& consts);

struct PhotonDensities {
  Grid3D grid;
  std::vector<double> rho;    // Psi^dagger Psi
  std::vector<Vec3> jprob;    // Re(i c Psi^dagger S (J Psi))
  double total = 0.0;         // sum rho d3r
};

struct PositionSynthesis {
  PhotonDensities densities;
  FieldState psi;
};

PositionSynthesis synthesize_position(const PhotonWavefunction& photon, double t);

/// max |spin form - cross-product form| / max |cross-product form| over the grid.
double probability_current_consistency(const PhotonWavefunction& photon, double t);

struct PhotonSpectrum {
  std::vector<double> n;  // Phi^dagger Phi / (hbar c |k|), zero at DC
  double total = 0.0;     // sum n d3k
};

PhotonSpectrum photon_number_spectrum(const SpectralField& spectrum,
                                      const PhysicalConstants& consts);

struct DensityComparison {
  /// All spectral power on a single |k| shell.
  bool monochromatic = false;
  /// max_k |u(k) / (hbar omega n(k)) - 1|, zero by construction.
  double max_ratio_deviation = 0.0;
  /// max over the grid of relative_deviation.
  double max_relative_deviation = 0.0;
  /// Energy-weighted mean angular frequency.
  double mean_omega = 0.0;
  double photon_number = 0.0;
  double energy = 0.0;
  std::vector<double> rho_photon;             // |Psi_scaled|^2, integrates to N
  std::vector<double> u_over_hbar_omega_bar;  // u / (hbar * mean_omega)
  std::vector<double> relative_deviation;
};

/// Relative deviations are measured against max(rho, v, kDeviationFloor * max rho).
inline constexpr double kDeviationFloor = 1e-3;

DensityComparison density_comparison(const SpectralField& spectrum,
                                     const PhysicalConstants& consts);

struct AngularMomentum {
  double total = 0.0;
  double spin = 0.0;     // hbar <S_z> on both halves
  double orbital = 0.0;  // <(r x (hbar/i) grad)_z>
};

AngularMomentum angular_momentum_z(const PhotonWavefunction& photon, double t);

}  // namespace photonwf
