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
#include "photonwf/helicity.hpp"

#include <algorithm>
#include <cmath>

namespace photonwf {

const OperatorMatrices& OperatorMatrices::get() {
  static const OperatorMatrices ops = [] {
    const cplx i(0.0, 1.0);
    OperatorMatrices m;
    m.Sx << 0, 0, 0,
            0, 0, -i,
            0, i, 0;
    m.Sy << 0, 0, i,
            0, 0, 0,
            -i, 0, 0;
    m.Sz << 0, -i, 0,
            i, 0, 0,
            0, 0, 0;
    return m;
  }();
  return ops;
}

HelicityVectors transverse_basis(const Vec3& k) {
  const double kn = k.norm();
  if (!(kn > 0.0) || !std::isfinite(kn)) {
    throw Error(ErrorKind::Domain, "transverse_basis: |k| must be positive (no photon at DC)");
  }
  const double rho2 = k[0] * k[0] + k[1] * k[1];
  double cx = 1.0;  // kx / rho
  double cy = 0.0;  // ky / rho
  double sin_t = 0.0;
  double cos_t = k[2] > 0.0 ? 1.0 : -1.0;
  if (rho2 >= kAxisEpsilon * kn * kn) {
    const double rho = std::hypot(k[0], k[1]);
    cx = k[0] / rho;
    cy = k[1] / rho;
    sin_t = rho / kn;
    cos_t = k[2] / kn;
  }

  const cplx i(0.0, 1.0);
  const double s = 1.0 / std::sqrt(2.0);
  HelicityVectors h;
  h.k = k;
  h.f_plus = s * CVec3(-cx * cos_t + i * cy, -cy * cos_t - i * cx, sin_t);
  h.f_minus = s * CVec3(-cx * cos_t - i * cy, -cy * cos_t + i * cx, sin_t);
  h.psi_plus = stack(h.f_plus, -i * h.f_plus);
  h.psi_minus = stack(h.f_minus, i * h.f_minus);
  return h;
}

std::pair<double, double> helicity_eigencheck(const Vec3& k, const HelicityVectors& h) {
  const CMat3 op = OperatorMatrices::get().dot(k / k.norm());
  return {(op * h.f_plus - h.f_plus).norm(), (op * h.f_minus + h.f_minus).norm()};
}

SpectralCoefficients SpectralCoefficients::zeros(const Grid3D& grid, double time) {
  return {grid, std::vector<cplx>(grid.size()), std::vector<cplx>(grid.size()), time};
}

bool SpectralCoefficients::finite() const {
  auto ok = [](const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
  return std::all_of(c_plus.begin(), c_plus.end(), ok) &&
         std::all_of(c_minus.begin(), c_minus.end(), ok);
}

double SpectralCoefficients::norm2() const {
  double sum = 0.0;
  for (std::size_t m = 0; m < c_plus.size(); ++m) {
    sum += std::norm(c_plus[m]) + std::norm(c_minus[m]);
  }
  return sum * grid.k_cell_volume();
}

Projection project(const SpectralField& spectrum) {
  const Grid3D& g = spectrum.grid;
  Projection out{SpectralCoefficients::zeros(g, spectrum.time), 0.0,
                 spectrum.values.at(0).norm()};
  for (std::size_t m = 1; m < g.size(); ++m) {
    const CVec6& phi = spectrum.values[m];
    const HelicityVectors h = transverse_basis(g.wavevector(m));
    // psi^dagger psi = 2 for both helicities
    const cplx cp = h.psi_plus.dot(phi) / 2.0;
    const cplx cm = h.psi_minus.dot(phi) / 2.0;
    out.coeffs.c_plus[m] = cp;
    out.coeffs.c_minus[m] = cm;
    out.residual = std::max(out.residual, (phi - cp * h.psi_plus - cm * h.psi_minus).norm());
  }
  return out;
}

SpectralField synthesize(const SpectralCoefficients& coeffs) {
  const Grid3D& g = coeffs.grid;
  SpectralField out = SpectralField::zeros(g, coeffs.time);
  for (std::size_t m = 1; m < g.size(); ++m) {
    const cplx cp = coeffs.c_plus[m];
    const cplx cm = coeffs.c_minus[m];
    if (cp == 0.0 && cm == 0.0) continue;
    const HelicityVectors h = transverse_basis(g.wavevector(m));
    out.values[m] = cp * h.psi_plus + cm * h.psi_minus;
  }
  return out;
}

}  // namespace photonwf
