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
#include "photonwf/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <sstream>

#include "fft.hpp"

namespace photonwf {
namespace {

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

std::span<cplx> flat_view(std::vector<CVec6>& values) {
  return {values.data()->data(), values.size() * 6};
}

bool all_finite(const std::vector<CVec6>& values) {
  return std::all_of(values.begin(), values.end(), [](const CVec6& v) {
    return v.allFinite();
  });
}

}  // namespace

PhysicalConstants PhysicalConstants::si() {
  PhysicalConstants k;
  k.hbar = 1.054571817e-34;
  k.c = 299792458.0;
  k.mu0 = 1.25663706212e-6;
  // Derived rather than the rounded tabulated value so that the vacuum
  // relation holds to machine precision.
  k.eps0 = 1.0 / (k.mu0 * k.c * k.c);
  return k;
}

void PhysicalConstants::validate() const {
  if (!(hbar > 0.0 && c > 0.0 && eps0 > 0.0 && mu0 > 0.0)) {
    throw Error(ErrorKind::Config, "physical constants must be strictly positive");
  }
  const double vacuum = eps0 * mu0 * c * c;
  if (std::abs(vacuum - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "physical constants violate eps0*mu0*c^2 = 1 (got " << vacuum << ")";
    throw Error(ErrorKind::Config, msg.str());
  }
}

Grid3D Grid3D::make(std::array<int, 3> n, std::array<double, 3> dr,
                    std::array<double, 3> origin) {
  for (int a = 0; a < 3; ++a) {
    if (!is_power_of_two(n[a]) || n[a] < 4) {
      throw Error(ErrorKind::Config, "grid.n[" + std::to_string(a) + "] = " +
                                         std::to_string(n[a]) +
                                         " is not a power of two >= 4");
    }
    if (!(dr[a] > 0.0) || !std::isfinite(dr[a])) {
      throw Error(ErrorKind::Config,
                  "grid.dr[" + std::to_string(a) + "] must be positive and finite");
    }
    if (!std::isfinite(origin[a])) {
      throw Error(ErrorKind::Config, "grid.origin must be finite");
    }
  }
  Grid3D g;
  g.n_ = n;
  g.dr_ = dr;
  g.origin_ = origin;
  return g;
}

Grid3D Grid3D::centred(std::array<int, 3> n, std::array<double, 3> dr) {
  std::array<double, 3> origin{};
  for (int a = 0; a < 3; ++a) origin[a] = -0.5 * n[a] * dr[a];
  return make(n, dr, origin);
}

double Grid3D::max_length() const {
  return std::max({length(0), length(1), length(2)});
}

std::array<int, 3> Grid3D::unravel(std::size_t flat) const {
  const int iz = static_cast<int>(flat % n_[2]);
  flat /= n_[2];
  const int iy = static_cast<int>(flat % n_[1]);
  const int ix = static_cast<int>(flat / n_[1]);
  return {ix, iy, iz};
}

Vec3 Grid3D::position(std::size_t flat) const {
  const auto i = unravel(flat);
  return {origin_[0] + i[0] * dr_[0], origin_[1] + i[1] * dr_[1],
          origin_[2] + i[2] * dr_[2]};
}

Vec3 Grid3D::wavevector(std::size_t flat) const {
  const auto i = unravel(flat);
  return {k_axis(0, i[0]), k_axis(1, i[1]), k_axis(2, i[2])};
}

bool Grid3D::on_grid(const Vec3& k) const {
  for (int a = 0; a < 3; ++a) {
    const double f = k[a] / dk(a);
    const double r = std::round(f);
    if (std::abs(f - r) > 1e-9) return false;
    if (r > n_[a] / 2 || r <= -n_[a] / 2) return false;
  }
  return true;
}

std::size_t Grid3D::k_index(const Vec3& k) const {
  if (!on_grid(k)) {
    std::ostringstream msg;
    msg << "wavevector (" << k[0] << ", " << k[1] << ", " << k[2]
        << ") is not a sample of the k-grid";
    throw Error(ErrorKind::Domain, msg.str());
  }
  std::array<int, 3> m{};
  for (int a = 0; a < 3; ++a) {
    const int f = static_cast<int>(std::lround(k[a] / dk(a)));
    m[a] = f >= 0 ? f : f + n_[a];
  }
  return index(m[0], m[1], m[2]);
}

FieldState FieldState::zeros(const Grid3D& grid, double time) {
  return {grid, std::vector<CVec6>(grid.size(), CVec6::Zero()), time};
}

bool FieldState::finite() const { return all_finite(values); }

SpectralField SpectralField::zeros(const Grid3D& grid, double time) {
  return {grid, std::vector<CVec6>(grid.size(), CVec6::Zero()), time};
}

bool SpectralField::finite() const { return all_finite(values); }

Grid3D make_grid(std::array<int, 3> n, std::array<double, 3> dr,
                 std::array<double, 3> origin) {
  return Grid3D::make(n, dr, origin);
}

SpectralField to_spectral(const FieldState& field) {
  const Grid3D& g = field.grid;
  if (field.values.size() != g.size()) {
    throw Error(ErrorKind::Domain, "to_spectral: field shape does not match grid");
  }
  SpectralField out{g, field.values, field.time};
  detail::fft3d(g.n(), 6, flat_view(out.values), detail::FftDirection::Forward);

  const double pref = std::pow(2.0 * kPi, -1.5) * g.cell_volume();
  const Vec3 origin(g.origin()[0], g.origin()[1], g.origin()[2]);
  const bool shifted = origin.squaredNorm() > 0.0;
  for (std::size_t m = 0; m < out.values.size(); ++m) {
    cplx factor = pref;
    if (shifted) factor *= std::polar(1.0, -g.wavevector(m).dot(origin));
    out.values[m] *= factor;
  }
  if (!out.finite()) throw Error(ErrorKind::Numeric, "to_spectral: overflow");
  return out;
}

FieldState to_spatial(const SpectralField& spectrum) {
  const Grid3D& g = spectrum.grid;
  if (spectrum.values.size() != g.size()) {
    throw Error(ErrorKind::Domain, "to_spatial: spectrum shape does not match grid");
  }
  FieldState out{g, spectrum.values, spectrum.time};
  const double pref = std::pow(2.0 * kPi, -1.5) * g.k_cell_volume();
  const Vec3 origin(g.origin()[0], g.origin()[1], g.origin()[2]);
  const bool shifted = origin.squaredNorm() > 0.0;
  for (std::size_t m = 0; m < out.values.size(); ++m) {
    cplx factor = pref;
    if (shifted) factor *= std::polar(1.0, g.wavevector(m).dot(origin));
    out.values[m] *= factor;
  }
  detail::fft3d(g.n(), 6, flat_view(out.values), detail::FftDirection::Backward);
  if (!out.finite()) throw Error(ErrorKind::Numeric, "to_spatial: overflow");
  return out;
}

double discard_dc(SpectralField& spectrum) {
  CVec6& dc = spectrum.values.at(0);
  const double removed = dc.norm();
  dc.setZero();
  return removed;
}

double spatial_norm2(const FieldState& field) {
  double sum = 0.0;
  for (const auto& v : field.values) sum += v.squaredNorm();
  return sum * field.grid.cell_volume();
}

double spectral_norm2(const SpectralField& spectrum) {
  double sum = 0.0;
  for (const auto& v : spectrum.values) sum += v.squaredNorm();
  return sum * spectrum.grid.k_cell_volume();
}

}  // namespace photonwf
