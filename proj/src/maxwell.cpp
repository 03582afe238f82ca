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
#include "photonwf/maxwell.hpp"

#include <algorithm>
#include <cmath>

#include "fft.hpp"

namespace photonwf {

SpectralCoefficients evolve(const SpectralCoefficients& coeffs, double dt,
                            const PhysicalConstants& consts) {
  SpectralCoefficients out = coeffs;
  out.time = coeffs.time + dt;
  if (dt == 0.0) return out;
  const Grid3D& g = coeffs.grid;
  for (std::size_t m = 1; m < g.size(); ++m) {
    if (out.c_plus[m] == 0.0 && out.c_minus[m] == 0.0) continue;
    const double omega = consts.c * g.wavevector(m).norm();
    const cplx phase = std::polar(1.0, -omega * dt);
    out.c_plus[m] *= phase;
    out.c_minus[m] *= phase;
  }
  out.c_plus[0] = 0.0;
  out.c_minus[0] = 0.0;
  return out;
}

SpectralField apply_hamiltonian(const SpectralField& spectrum,
                                const PhysicalConstants& consts) {
  const Grid3D& g = spectrum.grid;
  const auto& ops = OperatorMatrices::get();
  const cplx pref(0.0, consts.hbar * consts.c);
  SpectralField out = SpectralField::zeros(g, spectrum.time);
  for (std::size_t m = 0; m < g.size(); ++m) {
    const CMat3 sk = ops.dot(g.wavevector(m));
    out.values[m] = pref * apply_blockwise(sk, apply_J(spectrum.values[m]));
  }
  return out;
}

CVec3 cross_form_current(const CVec6& psi, double c) {
  const CVec3 e = upper(psi);
  const CVec3 h = lower(psi);
  return c * (cross(e.conjugate(), h) - cross(h.conjugate(), e));
}

CVec3 spin_form_current(const CVec6& psi, double c) {
  const auto& ops = OperatorMatrices::get();
  const CVec6 jpsi = apply_J(psi);
  CVec3 out;
  for (int a = 0; a < 3; ++a) {
    // Psi^dagger S_a (J Psi) with the pairing a.b = a1.b1 + a2.b2
    out[a] = cplx(0.0, c) * psi.dot(apply_blockwise(ops.S(a), jpsi));
  }
  return out;
}

FluxField observables(const FieldState& field, const PhysicalConstants& consts) {
  const Grid3D& g = field.grid;
  FluxField out{g, std::vector<double>(g.size()), std::vector<Vec3>(g.size()), 0.0, 0.0};
  double max_re = 0.0;
  double max_im = 0.0;
  for (std::size_t n = 0; n < g.size(); ++n) {
    const CVec6& psi = field.values[n];
    out.u[n] = psi.squaredNorm();
    const CVec3 j = cross_form_current(psi, consts.c);
    out.j[n] = j.real();
    max_re = std::max(max_re, j.real().norm());
    max_im = std::max(max_im, j.imag().norm());
    out.total_energy += out.u[n];
  }
  out.total_energy *= g.cell_volume();
  out.max_imag_ratio = max_re > 0.0 ? max_im / max_re : max_im;
  return out;
}

std::vector<double> spectral_divergence(const Grid3D& g, const std::vector<Vec3>& field) {
  const std::size_t n = g.size();
  std::vector<cplx> buf(3 * n);
  for (std::size_t p = 0; p < n; ++p) {
    for (int a = 0; a < 3; ++a) buf[3 * p + a] = field[p][a];
  }
  detail::fft3d(g.n(), 3, buf, detail::FftDirection::Forward);

  std::vector<cplx> div(n);
  for (std::size_t m = 0; m < n; ++m) {
    const auto idx = g.unravel(m);
    cplx acc = 0.0;
    for (int a = 0; a < 3; ++a) {
      // the Nyquist derivative of a real field is taken as zero
      if (g.is_nyquist(a, idx[a])) continue;
      acc += cplx(0.0, g.k_axis(a, idx[a])) * buf[3 * m + a];
    }
    div[m] = acc;
  }
  detail::fft3d(g.n(), 1, div, detail::FftDirection::Backward);

  std::vector<double> out(n);
  const double inv = 1.0 / static_cast<double>(n);
  for (std::size_t p = 0; p < n; ++p) out[p] = div[p].real() * inv;
  return out;
}

double continuity_residual(const SpectralCoefficients& coeffs, double dt_probe,
                           const PhysicalConstants& consts) {
  if (!(dt_probe > 0.0)) {
    throw Error(ErrorKind::Domain, "continuity_residual: dt_probe must be positive");
  }
  const Grid3D& g = coeffs.grid;
  auto field_at = [&](double dt) { return to_spatial(synthesize(evolve(coeffs, dt, consts))); };

  const FieldState before = field_at(-dt_probe);
  const FieldState now = field_at(0.0);
  const FieldState after = field_at(dt_probe);
  const FluxField flux = observables(now, consts);
  const std::vector<double> div = spectral_divergence(g, flux.j);

  double worst = 0.0;
  for (std::size_t p = 0; p < g.size(); ++p) {
    const double du_dt =
        (after.values[p].squaredNorm() - before.values[p].squaredNorm()) / (2.0 * dt_probe);
    worst = std::max(worst, std::abs(du_dt + div[p]));
  }
  const double u_max = *std::max_element(flux.u.begin(), flux.u.end());
  if (u_max == 0.0) return 0.0;
  const double crossing_time = g.max_length() / consts.c;
  return worst * crossing_time / u_max;
}

double transversality_residual(const SpectralField& spectrum) {
  const Grid3D& g = spectrum.grid;
  double scale = 0.0;
  for (const auto& v : spectrum.values) scale = std::max(scale, v.norm());
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (std::size_t m = 1; m < g.size(); ++m) {
    const Vec3 k = g.wavevector(m);
    const CVec3 kc = k.cast<cplx>();
    const CVec6& v = spectrum.values[m];
    // k is real, so the conjugating dot is the plain bilinear k.v
    const double r = (std::abs(kc.dot(upper(v))) + std::abs(kc.dot(lower(v)))) / k.norm();
    worst = std::max(worst, r);
  }
  return worst / scale;
}

}  // namespace photonwf
