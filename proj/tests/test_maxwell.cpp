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
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "photonwf/maxwell.hpp"
#include "photonwf/sources.hpp"

using namespace photonwf;

namespace {

// dk = 1 in every direction
Grid3D unit_k_grid(int n = 16) {
  const double dr = 2 * kPi / n;
  return Grid3D::centred({n, n, n}, {dr, dr, dr});
}

}  // namespace

TEST_SUITE("maxwell") {

TEST_CASE("evolve") {
  const Grid3D g = unit_k_grid();
  auto c = SpectralCoefficients::zeros(g);
  const std::size_t m = g.k_index(Vec3(0, 2, 0));
  c.c_plus[m] = 1.0;
  c.c_minus[m] = cplx(0, 1);

  SUBCASE("dt = 0 is the identity") {
    const auto e = evolve(c, 0.0);
    CHECK(e.c_plus == c.c_plus);
    CHECK(e.c_minus == c.c_minus);
  }
  SUBCASE("|k| = 2 over pi/2 gives a sign flip") {
    const auto e = evolve(c, kPi / 2);
    CHECK(std::abs(e.c_plus[m] + 1.0) < 1e-15);
    CHECK(std::abs(e.c_minus[m] + cplx(0, 1)) < 1e-15);
    CHECK(e.time == doctest::Approx(kPi / 2));
  }
  SUBCASE("group property") {
    std::mt19937_64 rng(9);
    auto r = random_forward(g, rng);
    const auto two = evolve(evolve(r, 0.37), 1.21);
    const auto one = evolve(r, 1.58);
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(std::abs(two.c_plus[i] - one.c_plus[i]) < 1e-13);
      CHECK(std::abs(two.c_minus[i] - one.c_minus[i]) < 1e-13);
    }
  }
}

TEST_CASE("Hamiltonian eigenvalues") {
  const Grid3D g = unit_k_grid();
  SpectralField s = SpectralField::zeros(g);
  const std::size_t a = g.k_index(Vec3(1, 0, 0));
  const std::size_t b = g.k_index(Vec3(0, 0, 3));
  s.values[a] = transverse_basis(Vec3(1, 0, 0)).psi_plus;
  s.values[b] = transverse_basis(Vec3(0, 0, 3)).psi_minus;
  const SpectralField h = apply_hamiltonian(s, PhysicalConstants::natural());
  CHECK((h.values[a] - s.values[a]).norm() < 1e-12);
  CHECK((h.values[b] - 3.0 * s.values[b]).norm() < 1e-12);

  for (const auto& v : apply_hamiltonian(SpectralField::zeros(g), PhysicalConstants::natural()).values) {
    CHECK(v.norm() == 0.0);
  }

  // SI: hbar c |k| for both helicities on every sample
  const auto si = PhysicalConstants::si();
  for (Helicity hel : {Helicity::Plus, Helicity::Minus}) {
    SpectralField basis = SpectralField::zeros(g);
    for (std::size_t m = 1; m < g.size(); ++m) basis.values[m] = transverse_basis(g.wavevector(m)).psi(hel);
    const SpectralField out = apply_hamiltonian(basis, si);
    double worst = 0.0;
    for (std::size_t m = 1; m < g.size(); ++m) {
      const double e = si.photon_energy(g.wavevector(m).norm());
      worst = std::max(worst, (out.values[m] - e * basis.values[m]).norm() / e);
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("observables of a single helicity plane wave") {
  const Grid3D g = unit_k_grid(8);
  for (const auto& consts : {PhysicalConstants::natural(), PhysicalConstants::si()}) {
    const CVec6 psi = transverse_basis(Vec3(1, 0, 0)).psi_plus;
    FieldState f = FieldState::zeros(g);
    for (std::size_t n = 0; n < g.size(); ++n) f.values[n] = std::polar(1.0, g.position(n)[0]) * psi;
    const FluxField flux = observables(f, consts);
    for (std::size_t n = 0; n < g.size(); ++n) {
      CHECK(flux.u[n] == doctest::Approx(2.0));
      CHECK((flux.j[n] - Vec3(2 * consts.c, 0, 0)).norm() < 1e-12 * consts.c);
    }
    CHECK(flux.max_imag_ratio < 1e-15);
  }
}

TEST_CASE("zero field has zero densities") {
  const Grid3D g = unit_k_grid(4);
  const FluxField flux = observables(FieldState::zeros(g), PhysicalConstants::natural());
  for (std::size_t n = 0; n < g.size(); ++n) {
    CHECK(flux.u[n] == 0.0);
    CHECK(flux.j[n].norm() == 0.0);
  }
  CHECK(flux.total_energy == 0.0);
}

TEST_CASE("current forms agree and are real on random vectors") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> normal;
  for (int s = 0; s < 200; ++s) {
    CVec6 psi;
    for (int c = 0; c < 6; ++c) psi[c] = cplx(normal(rng), normal(rng));
    const CVec3 a = cross_form_current(psi, 1.0);
    const CVec3 b = spin_form_current(psi, 1.0);
    // 2 Re(E* x H) from the test-side cross product
    const CVec3 e = psi.head<3>(), h = psi.tail<3>();
    const CVec3 ref = 2.0 * oracle::cross(e.conjugate(), h).real().cast<cplx>();
    CHECK((a - ref).norm() < 1e-12 * ref.norm());
    CHECK((b - ref).norm() < 1e-12 * ref.norm());
  }
}

TEST_CASE("random forward field: real Poynting vector, conserved energy") {
  const Grid3D g = Grid3D::centred({16, 16, 16}, {0.5, 0.5, 0.5});
  std::mt19937_64 rng(4);
  const auto c = random_forward(g, rng);
  const FieldState f = to_spatial(synthesize(c));
  const FluxField flux = observables(f, PhysicalConstants::natural());
  CHECK(flux.max_imag_ratio < 1e-12);
  CHECK(std::abs(flux.total_energy - classical_energy(c)) / flux.total_energy < 1e-12);
  const double later = classical_energy(evolve(c, 3.3));
  CHECK(std::abs(later - flux.total_energy) / flux.total_energy < 1e-12);
}

TEST_CASE("spectral divergence of a sine") {
  const Grid3D g = Grid3D::centred({16, 8, 8}, {0.25, 1, 1});
  const double k = 3 * g.dk(0);
  std::vector<Vec3> j(g.size());
  for (std::size_t n = 0; n < g.size(); ++n) j[n] = Vec3(std::sin(k * g.position(n)[0]), 0, 0);
  const auto div = spectral_divergence(g, j);
  for (std::size_t n = 0; n < g.size(); ++n) {
    CHECK(std::abs(div[n] - k * std::cos(k * g.position(n)[0])) < 1e-12 * k);
  }
}

TEST_CASE("continuity of a two-mode beat against the analytic time derivative") {
  const Grid3D g = Grid3D::centred({16, 16, 16}, {1, 1, 1});
  const Vec3 k1(5 * g.dk(0), 0, 0);
  const Vec3 k2(4 * g.dk(0), 3 * g.dk(1), g.dk(2));
  const cplx a1(1.0, 0.0), a2(0.4, 0.7);
  auto c = SpectralCoefficients::zeros(g);
  c.c_plus[g.k_index(k1)] = a1;
  c.c_plus[g.k_index(k2)] = a2;  // opposite helicities would not interfere in u
  const auto consts = PhysicalConstants::natural();

  // du/dt = 2 Re(Psi^dagger dPsi/dt), dPsi/dt = -i w Psi per mode
  const double pref = std::pow(2 * kPi, -1.5) * g.k_cell_volume();
  const CVec6 p1 = transverse_basis(k1).psi_plus;
  const CVec6 p2 = transverse_basis(k2).psi_plus;
  std::vector<double> dudt(g.size());
  double scale = 0.0, umax = 0.0;
  for (std::size_t n = 0; n < g.size(); ++n) {
    const Vec3 r = g.position(n);
    const CVec6 m1 = pref * a1 * std::polar(1.0, k1.dot(r)) * p1;
    const CVec6 m2 = pref * a2 * std::polar(1.0, k2.dot(r)) * p2;
    const CVec6 psi = m1 + m2;
    const CVec6 dpsi = cplx(0, -1) * (k1.norm() * m1 + k2.norm() * m2);
    dudt[n] = 2.0 * psi.dot(dpsi).real();
    scale = std::max(scale, std::abs(dudt[n]));
    umax = std::max(umax, psi.squaredNorm());
  }
  REQUIRE(scale > 0.0);

  const FluxField flux = observables(to_spatial(synthesize(c)), consts);
  const auto div = spectral_divergence(g, flux.j);
  double worst = 0.0;
  for (std::size_t n = 0; n < g.size(); ++n) worst = std::max(worst, std::abs(dudt[n] + div[n]));
  CHECK(worst / scale < 1e-12);

  const double crossing = g.max_length() / consts.c;
  CHECK(continuity_residual(c, 1e-3 * crossing, consts) < 1e-6);
}

TEST_CASE("continuity residual") {
  const Grid3D g = Grid3D::centred({16, 16, 16}, {1, 1, 1});
  const auto consts = PhysicalConstants::natural();
  const double crossing = g.max_length();

  SUBCASE("plane wave") {
    const auto c = plane_wave(g, Vec3(3 * g.dk(0), g.dk(1), 0), HelicityMix{});
    CHECK(continuity_residual(c, 1e-3 * crossing, consts) < 1e-10);
  }
  SUBCASE("Gaussian packet converges at second order") {
    const Vec3 k0(4 * g.dk(0), 0, 0);
    const auto c = gaussian_packet(g, k0, 0.0625, HelicityMix{});
    const double r1 = continuity_residual(c, 1e-3 * crossing, consts);
    const double r2 = continuity_residual(c, 0.5e-3 * crossing, consts);
    CHECK(r1 < 1e-6);
    CHECK(r1 / r2 > 3.5);
    CHECK(r1 / r2 < 4.5);
  }
  SUBCASE("non-positive step is rejected") {
    const auto c = plane_wave(g, Vec3(g.dk(0), 0, 0), HelicityMix{});
    CHECK_THROWS_AS(continuity_residual(c, 0.0, consts), Error);
  }
}

TEST_CASE("transversality residual") {
  const Grid3D g = Grid3D::centred({8, 8, 8}, {1, 1, 1});
  std::mt19937_64 rng(12);
  CHECK(transversality_residual(synthesize(random_forward(g, rng))) < 1e-12);
  CHECK(transversality_residual(SpectralField::zeros(g)) == 0.0);

  SpectralField longitudinal = SpectralField::zeros(g);
  for (std::size_t m = 1; m < g.size(); ++m) {
    const Vec3 k = g.wavevector(m);
    longitudinal.values[m] << k[0], k[1], k[2], 0, 0, 0;
  }
  CHECK(transversality_residual(longitudinal) > 0.1);
}

}  // TEST_SUITE
