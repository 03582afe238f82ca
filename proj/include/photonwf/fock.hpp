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

// Truncated bosonic Fock space over a finite list of (k, helicity) modes.
//
// Mode functions are box-normalised plane waves
//   phi_m(r) = psi_m(k_m) exp(i k_m . r) / sqrt(2 V),
// so that the field operator Psi(r, t) = sum_m a_m phi_m(r) exp(-i w_m t)
// integrates over the whole box to the total number operator.

#include <map>
#include <vector>

#include "photonwf/helicity.hpp"
#include "photonwf/lattice.hpp"

namespace photonwf {

struct Mode {
  Vec3 k;
  Helicity helicity = Helicity::Plus;
};

class ModeSet {
 public:
  /// Throws Error(Config) for |k| = 0, duplicate (k, helicity) pairs or
  /// max_occupation < 1.
  ModeSet(std::vector<Mode> modes, int max_occupation);

  std::size_t size() const { return modes_.size(); }
  const Mode& operator[](std::size_t i) const { return modes_.at(i); }
  const std::vector<Mode>& modes() const { return modes_; }
  int max_occupation() const { return max_occupation_; }

  bool operator==(const ModeSet& other) const;

 private:
  std::vector<Mode> modes_;
  int max_occupation_;
};

using Occupation = std::vector<int>;

class FockState {
 public:
  static FockState vacuum(const ModeSet& modes);
  static FockState zero(const ModeSet& modes);
  static FockState basis(const ModeSet& modes, const Occupation& occupation);

  const ModeSet& modes() const { return modes_; }
  const std::map<Occupation, cplx>& amplitudes() const { return amplitudes_; }
  cplx amplitude(const Occupation& occupation) const;

  /// Accumulated squared amplitude of branches dropped at max_occupation.
  double truncation_loss() const { return truncation_loss_; }
  bool is_zero() const { return amplitudes_.empty(); }
  double norm2() const;

  FockState normalized() const;
  FockState scaled(cplx factor) const;
  /// this + weight * other; both must share a mode set.
  FockState plus(const FockState& other, cplx weight = 1.0) const;

  /// Adds `value` to the amplitude of `occupation`, validating bounds.
  void add(const Occupation& occupation, cplx value);

 private:
  explicit FockState(ModeSet modes) : modes_(std::move(modes)) {}

  ModeSet modes_;
  std::map<Occupation, cplx> amplitudes_;
  double truncation_loss_ = 0.0;

  friend FockState create(const FockState&, std::size_t);
  friend FockState annihilate(const FockState&, std::size_t);
};

/// <a|b>
cplx inner(const FockState& a, const FockState& b);

/// a^dagger_mode with amplitude sqrt(n+1); branches past max_occupation are
/// dropped and their weight added to truncation_loss().
FockState create(const FockState& state, std::size_t mode);
/// a_mode with amplitude sqrt(n). a|0> is the zero state.
FockState annihilate(const FockState& state, std::size_t mode);

/// <a^dagger_m a_m> for a normalised state.
double number_expectation(const FockState& state, std::size_t mode);
double total_number(const FockState& state);

/// <H> = sum_m hbar c |k_m| <a^dagger_m a_m>; no zero-point term.
double hamiltonian_expectation(const FockState& state, const PhysicalConstants& consts);

/// G(m, m') = <a^dagger_m a_m'>.
Eigen::MatrixXcd one_body_density(const FockState& state);

/// Axis-aligned box [lo, hi) in physical coordinates.
struct VolumeRegion {
  Vec3 lo;
  Vec3 hi;
};

/// Plane x_axis = position with unit normal sign * e_axis, counted over the
/// time window [t1, t2].
struct SurfaceRegion {
  int axis = 0;
  double position = 0.0;
  int normal_sign = +1;
  double t1 = 0.0;
  double t2 = 0.0;
};

/// <N_V> at time t from the mode expansion. Modes must be k-grid samples.
double coarse_number_in_volume(const FockState& state, const VolumeRegion& region,
                               const Grid3D& grid,
                               const PhysicalConstants& consts = PhysicalConstants::natural(),
                               double t = 0.0);

/// <N_Sigma>: time integral over [t1, t2] of the flux of the probability
/// current through the grid plane nearest to `position`. The time integral
/// is evaluated in closed form per mode pair.
double coarse_flux_through_surface(const FockState& state, const SurfaceRegion& region,
                                   const Grid3D& grid, const PhysicalConstants& consts);

}  // namespace photonwf
