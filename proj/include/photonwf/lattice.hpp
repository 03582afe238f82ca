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

// Physical constants, the periodic 3D sampling grid and the discrete
// position <-> wavevector transform pair.
//
// Transform convention (continuum integrals sampled on the lattice):
//
//   Phi[m] = (2 pi)^(-3/2) * d3r * sum_n Psi[n] exp(-i k_m . r_n)
//   Psi[n] = (2 pi)^(-3/2) * d3k * sum_m Phi[m] exp(+i k_m . r_n)
//
// with r_n = origin + n * dr and k_m on the standard DFT frequency layout.
// Since d3r * d3k = (2 pi)^3 / N the pair is exactly inverse, and
// sum |Psi|^2 d3r = sum |Phi|^2 d3k.

#include <array>
#include <cstddef>
#include <vector>

#include "photonwf/types.hpp"

namespace photonwf {

struct PhysicalConstants {
  double hbar = 1.0;
  double c = 1.0;
  double eps0 = 1.0;
  double mu0 = 1.0;

  static PhysicalConstants natural() { return {}; }
  /// CODATA 2018 SI values.
  static PhysicalConstants si();

  /// Throws Error(Config) unless all values are positive and
  /// eps0 * mu0 * c^2 = 1 to 1e-12 relative.
  void validate() const;

  /// Photon energy hbar * c * |k|.
  double photon_energy(double k_norm) const { return hbar * c * k_norm; }
};

class Grid3D {
 public:
  /// Each n[a] must be a power of two >= 4 and each dr[a] > 0.
  static Grid3D make(std::array<int, 3> n, std::array<double, 3> dr,
                     std::array<double, 3> origin = {0.0, 0.0, 0.0});

  /// Same spacing and size, origin placed so the box is centred on r = 0.
  static Grid3D centred(std::array<int, 3> n, std::array<double, 3> dr);

  const std::array<int, 3>& n() const { return n_; }
  const std::array<double, 3>& dr() const { return dr_; }
  const std::array<double, 3>& origin() const { return origin_; }

  double length(int axis) const { return n_[axis] * dr_[axis]; }
  double dk(int axis) const { return 2.0 * kPi / length(axis); }
  double max_length() const;

  std::size_t size() const {
    return static_cast<std::size_t>(n_[0]) * n_[1] * n_[2];
  }
  double cell_volume() const { return dr_[0] * dr_[1] * dr_[2]; }
  double k_cell_volume() const { return dk(0) * dk(1) * dk(2); }
  double box_volume() const { return length(0) * length(1) * length(2); }

  /// Row-major flat index; z varies fastest.
  std::size_t index(int ix, int iy, int iz) const {
    return (static_cast<std::size_t>(ix) * n_[1] + iy) * n_[2] + iz;
  }
  std::array<int, 3> unravel(std::size_t flat) const;

  /// Signed DFT frequency integer for sample m on an axis: 0..n/2 then
  /// -(n/2-1)..-1. The Nyquist sample keeps the positive sign.
  int frequency(int axis, int m) const {
    return m <= n_[axis] / 2 ? m : m - n_[axis];
  }
  bool is_nyquist(int axis, int m) const { return m == n_[axis] / 2; }
  double k_axis(int axis, int m) const { return frequency(axis, m) * dk(axis); }

  Vec3 position(std::size_t flat) const;
  Vec3 wavevector(std::size_t flat) const;

  /// Flat index of the k-sample equal to `k` (within 1e-9 of a k-cell), or
  /// throws Error(Domain) when `k` is not on the lattice.
  std::size_t k_index(const Vec3& k) const;
  bool on_grid(const Vec3& k) const;

  bool operator==(const Grid3D& other) const = default;

 private:
  Grid3D() = default;
  std::array<int, 3> n_{};
  std::array<double, 3> dr_{};
  std::array<double, 3> origin_{};
};

struct FieldState {
  Grid3D grid;
  std::vector<CVec6> values;  // upper = sqrt(eps0) E, lower = sqrt(mu0) H
  double time = 0.0;

  static FieldState zeros(const Grid3D& grid, double time = 0.0);
  bool finite() const;
};

struct SpectralField {
  Grid3D grid;
  std::vector<CVec6> values;
  double time = 0.0;

  static SpectralField zeros(const Grid3D& grid, double time = 0.0);
  bool finite() const;
};

Grid3D make_grid(std::array<int, 3> n, std::array<double, 3> dr,
                 std::array<double, 3> origin = {0.0, 0.0, 0.0});

SpectralField to_spectral(const FieldState& field);
FieldState to_spatial(const SpectralField& spectrum);

/// Zeroes the k = 0 sample and returns the norm of what was removed.
double discard_dc(SpectralField& spectrum);

/// sum_n |Psi_n|^2 d3r
double spatial_norm2(const FieldState& field);
/// sum_m |Phi_m|^2 d3k
double spectral_norm2(const SpectralField& spectrum);

}  // namespace photonwf
