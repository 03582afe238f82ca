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
#include "photonwf/sources.hpp"

#include <algorithm>
#include <cmath>

namespace photonwf {

SpectralCoefficients plane_wave(const Grid3D& grid, const Vec3& k, HelicityMix mix,
                                cplx amplitude) {
  if (k.norm() == 0.0) throw Error(ErrorKind::Domain, "plane_wave: k = 0 carries no photon");
  const std::size_t m = grid.k_index(k);
  SpectralCoefficients out = SpectralCoefficients::zeros(grid);
  out.c_plus[m] = amplitude * mix.plus;
  out.c_minus[m] = amplitude * mix.minus;
  return out;
}

SpectralCoefficients gaussian_packet(const Grid3D& grid, const Vec3& k0, double bandwidth,
                                     HelicityMix mix) {
  const double k0n = k0.norm();
  if (!(k0n > 0.0)) throw Error(ErrorKind::Domain, "gaussian_packet: k_center must be nonzero");
  if (!(bandwidth > 0.0)) throw Error(ErrorKind::Domain, "gaussian_packet: bandwidth must be positive");
  const double sigma = bandwidth * k0n;
  const HelicityVectors centre = transverse_basis(k0);

  SpectralCoefficients out = SpectralCoefficients::zeros(grid);
  for (std::size_t m = 1; m < grid.size(); ++m) {
    const Vec3 k = grid.wavevector(m);
    const double envelope = std::exp(-(k - k0).squaredNorm() / (2.0 * sigma * sigma));
    if (envelope == 0.0) continue;
    const HelicityVectors h = transverse_basis(k);
    out.c_plus[m] = mix.plus * envelope * h.psi_plus.dot(centre.psi_plus) / 2.0;
    out.c_minus[m] = mix.minus * envelope * h.psi_minus.dot(centre.psi_minus) / 2.0;
  }
  return out;
}

SpectralCoefficients random_forward(const Grid3D& grid, std::mt19937_64& rng,
                                    double k_fraction) {
  double nyquist = INFINITY;
  for (int a = 0; a < 3; ++a) nyquist = std::min(nyquist, grid.k_axis(a, grid.n()[a] / 2));
  const double k_max = k_fraction * nyquist;

  std::normal_distribution<double> normal(0.0, 1.0);
  SpectralCoefficients out = SpectralCoefficients::zeros(grid);
  for (std::size_t m = 1; m < grid.size(); ++m) {
    const double re_p = normal(rng);
    const double im_p = normal(rng);
    const double re_m = normal(rng);
    const double im_m = normal(rng);
    if (grid.wavevector(m).norm() > k_max) continue;
    out.c_plus[m] = {re_p, im_p};
    out.c_minus[m] = {re_m, im_m};
  }
  return out;
}

double classical_energy(const SpectralCoefficients& coeffs) {
  return spatial_norm2(to_spatial(synthesize(coeffs)));
}

SpectralCoefficients with_energy(const SpectralCoefficients& coeffs, double energy) {
  const double current = classical_energy(coeffs);
  if (!(current > 0.0)) throw Error(ErrorKind::Domain, "with_energy: field is identically zero");
  const double s = std::sqrt(energy / current);
  SpectralCoefficients out = coeffs;
  for (auto& c : out.c_plus) c *= s;
  for (auto& c : out.c_minus) c *= s;
  return out;
}

}  // namespace photonwf
