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

// Field builders used by the scenarios and the test suites.

#include <random>

#include "photonwf/helicity.hpp"
#include "photonwf/lattice.hpp"

namespace photonwf {

struct HelicityMix {
  cplx plus{1.0, 0.0};
  cplx minus{0.0, 0.0};
};

/// Single on-grid mode with c+- = amplitude * mix+-. Throws Error(Domain)
/// if `k` is zero or not a k-grid sample.
SpectralCoefficients plane_wave(const Grid3D& grid, const Vec3& k, HelicityMix mix,
                                cplx amplitude = 1.0);

/// Gaussian spectral envelope exp(-|k-k0|^2 / (2 sigma^2)), sigma =
/// bandwidth * |k0|. Each helicity amplitude carries the overlap
/// psi(k)^dagger psi(k0) / 2, so the polarisation of the packet varies
/// smoothly around k0 instead of inheriting the azimuthal phase of the
/// basis gauge.
SpectralCoefficients gaussian_packet(const Grid3D& grid, const Vec3& k0, double bandwidth,
                                     HelicityMix mix);

/// Complex-normal helicity amplitudes on every mode with |k| below
/// `k_fraction` times the smallest per-axis Nyquist wavenumber.
SpectralCoefficients random_forward(const Grid3D& grid, std::mt19937_64& rng,
                                    double k_fraction = 0.5);

/// sum Psi^dagger Psi d3r of the synthesised position-space field.
double classical_energy(const SpectralCoefficients& coeffs);

/// Rescales so that classical_energy(result) == energy.
SpectralCoefficients with_energy(const SpectralCoefficients& coeffs, double energy);

}  // namespace photonwf
