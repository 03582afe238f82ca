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
#include "photonwf/photon.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "photonwf/maxwell.hpp"

namespace photonwf {
namespace {

double max_norm(const std::vector<CVec6>& values) {
  double out = 0.0;
  for (const auto& v : values) out = std::max(out, v.norm());
  return out;
}

// Phi_em(k) / sqrt(hbar c |k|) with the DC sample removed.
SpectralField scaled_spectrum(const SpectralField& spectrum, const PhysicalConstants& consts) {
  SpectralField out = spectrum;
  out.values[0].setZero();
  for (std::size_t m = 1; m < out.values.size(); ++m) {
    out.values[m] /= std::sqrt(consts.photon_energy(spectrum.grid.wavevector(m).norm()));
  }
  return out;
}

}  // namespace

SpectralField PhotonWavefunction::spectrum(double t) const {
  SpectralField phi = synthesize(evolve(coeffs, t - coeffs.time, consts));
  const double s = 1.0 / std::sqrt(2.0);
  for (auto& v : phi.values) v *= s;
  return phi;
}

PhotonWavefunction scale_to_photon(const SpectralField& spectrum,
                                   const PhysicalConstants& consts) {
  const Grid3D& g = spectrum.grid;
  Projection proj = project(spectrum);

  PhotonWavefunction out{std::move(proj.coeffs), 0.0, 0.0, 0.0, proj.discarded_dc, {}, consts};
  const double scale = max_norm(spectrum.values);
  out.forward_residual = scale > 0.0 ? proj.residual / scale : 0.0;

  auto& cp = out.coeffs.c_plus;
  auto& cm = out.coeffs.c_minus;
  for (std::size_t m = 1; m < g.size(); ++m) {
    const double s = 1.0 / std::sqrt(consts.photon_energy(g.wavevector(m).norm()));
    cp[m] *= s;
    cm[m] *= s;
  }
  // |Phi_em / sqrt(hbar c k)|^2 = 2 (|c+|^2 + |c-|^2) on the forward subspace
  out.photon_number = 2.0 * out.coeffs.norm2();
  if (!(out.photon_number > 0.0)) {
    throw Error(ErrorKind::Domain, "scale_to_photon: field carries no photons");
  }

  const double renorm = std::sqrt(2.0 / out.photon_number);
  for (std::size_t m = 0; m < g.size(); ++m) {
    cp[m] *= renorm;
    cm[m] *= renorm;
  }
  out.norm_check = std::abs(out.coeffs.norm2() - 1.0);

  if (out.forward_residual > kForwardResidualWarning) {
    std::ostringstream msg;
    msg << "field has content outside the forward helicity subspace (relative residual "
        << out.forward_residual << ")";
    out.warning = msg.str();
  }
  return out;
}

PositionSynthesis synthesize_position(const PhotonWavefunction& photon, double t) {
  FieldState psi = to_spatial(photon.spectrum(t));
  const Grid3D& g = psi.grid;
  PhotonDensities dens{g, std::vector<double>(g.size()), std::vector<Vec3>(g.size()), 0.0};
  for (std::size_t n = 0; n < g.size(); ++n) {
    const CVec6& v = psi.values[n];
    dens.rho[n] = v.squaredNorm();
    dens.jprob[n] = spin_form_current(v, photon.consts.c).real();
    dens.total += dens.rho[n];
  }
  dens.total *= g.cell_volume();
  return {std::move(dens), std::move(psi)};
}

double probability_current_consistency(const PhotonWavefunction& photon, double t) {
  const FieldState psi = to_spatial(photon.spectrum(t));
  double scale = 0.0;
  double worst = 0.0;
  for (const auto& v : psi.values) {
    const CVec3 cross = cross_form_current(v, photon.consts.c);
    const CVec3 spin = spin_form_current(v, photon.consts.c);
    scale = std::max(scale, cross.norm());
    worst = std::max(worst, (spin - cross).norm());
  }
  return scale > 0.0 ? worst / scale : worst;
}

PhotonSpectrum photon_number_spectrum(const SpectralField& spectrum,
                                      const PhysicalConstants& consts) {
  const Grid3D& g = spectrum.grid;
  PhotonSpectrum out{std::vector<double>(g.size()), 0.0};
  for (std::size_t m = 1; m < g.size(); ++m) {
    out.n[m] = spectrum.values[m].squaredNorm() /
               consts.photon_energy(g.wavevector(m).norm());
    out.total += out.n[m];
  }
  out.total *= g.k_cell_volume();
  return out;
}

DensityComparison density_comparison(const SpectralField& spectrum,
                                     const PhysicalConstants& consts) {
  const Grid3D& g = spectrum.grid;
  DensityComparison out;
  out.rho_photon.assign(g.size(), 0.0);
  out.u_over_hbar_omega_bar.assign(g.size(), 0.0);
  out.relative_deviation.assign(g.size(), 0.0);

  const PhotonSpectrum ns = photon_number_spectrum(spectrum, consts);
  double peak = 0.0;
  for (std::size_t m = 1; m < g.size(); ++m) peak = std::max(peak, spectrum.values[m].squaredNorm());
  if (peak == 0.0) return out;

  double energy = 0.0;
  double weighted_omega = 0.0;
  double k_lo = INFINITY;
  double k_hi = 0.0;
  for (std::size_t m = 1; m < g.size(); ++m) {
    const double u_k = spectrum.values[m].squaredNorm();
    if (u_k <= 1e-20 * peak) continue;
    const double kn = g.wavevector(m).norm();
    const double omega = consts.c * kn;
    energy += u_k;
    weighted_omega += u_k * omega;
    k_lo = std::min(k_lo, kn);
    k_hi = std::max(k_hi, kn);
    out.max_ratio_deviation =
        std::max(out.max_ratio_deviation, std::abs(u_k / (consts.hbar * omega * ns.n[m]) - 1.0));
  }
  out.monochromatic = (k_hi - k_lo) <= 1e-12 * k_hi;
  out.mean_omega = weighted_omega / energy;
  out.energy = energy * g.k_cell_volume();
  out.photon_number = ns.total;

  SpectralField classical = spectrum;
  classical.values[0].setZero();
  const FieldState field = to_spatial(classical);
  const FieldState scaled = to_spatial(scaled_spectrum(spectrum, consts));

  const double quantum = consts.hbar * out.mean_omega;
  double rho_max = 0.0;
  for (std::size_t n = 0; n < g.size(); ++n) {
    out.rho_photon[n] = scaled.values[n].squaredNorm();
    out.u_over_hbar_omega_bar[n] = field.values[n].squaredNorm() / quantum;
    rho_max = std::max(rho_max, out.rho_photon[n]);
  }
  const double floor = kDeviationFloor * rho_max;
  for (std::size_t n = 0; n < g.size(); ++n) {
    const double a = out.rho_photon[n];
    const double b = out.u_over_hbar_omega_bar[n];
    const double dev = std::abs(a - b) / std::max({a, b, floor});
    out.relative_deviation[n] = dev;
    out.max_relative_deviation = std::max(out.max_relative_deviation, dev);
  }
  return out;
}

AngularMomentum angular_momentum_z(const PhotonWavefunction& photon, double t) {
  const SpectralField phi = photon.spectrum(t);
  const Grid3D& g = phi.grid;
  SpectralField dphi_dx = phi;
  SpectralField dphi_dy = phi;
  for (std::size_t m = 0; m < g.size(); ++m) {
    const Vec3 k = g.wavevector(m);
    dphi_dx.values[m] *= cplx(0.0, k[0]);
    dphi_dy.values[m] *= cplx(0.0, k[1]);
  }
  const FieldState psi = to_spatial(phi);
  const FieldState dx = to_spatial(dphi_dx);
  const FieldState dy = to_spatial(dphi_dy);

  const CMat3& sz = OperatorMatrices::get().Sz;
  const double hbar = photon.consts.hbar;
  AngularMomentum out;
  for (std::size_t n = 0; n < g.size(); ++n) {
    const Vec3 r = g.position(n);
    const CVec6& v = psi.values[n];
    // (hbar/i)(x d/dy - y d/dx)
    const CVec6 lz = cplx(0.0, -hbar) * (r[0] * dy.values[n] - r[1] * dx.values[n]);
    out.orbital += v.dot(lz).real();
    out.spin += hbar * v.dot(apply_blockwise(sz, v)).real();
  }
  out.orbital *= g.cell_volume();
  out.spin *= g.cell_volume();
  out.total = out.orbital + out.spin;
  return out;
}

}  // namespace photonwf
