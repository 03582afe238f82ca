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
#include "photonwf/lattice.hpp"

using namespace photonwf;

namespace {

FieldState random_field(const Grid3D& g, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  FieldState f = FieldState::zeros(g);
  for (auto& v : f.values) {
    for (int c = 0; c < 6; ++c) v[c] = cplx(normal(rng), normal(rng));
  }
  return f;
}

double max_diff(const std::vector<CVec6>& a, const std::vector<CVec6>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, (a[i] - b[i]).norm());
  return worst;
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("constants") {
  CHECK_NOTHROW(PhysicalConstants::natural().validate());
  const auto si = PhysicalConstants::si();
  CHECK_NOTHROW(si.validate());
  CHECK(si.c == 299792458.0);
  CHECK(std::abs(si.eps0 * si.mu0 * si.c * si.c - 1.0) < 1e-12);

  PhysicalConstants bad = PhysicalConstants::natural();
  bad.eps0 = 2.0;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = PhysicalConstants::natural();
  bad.hbar = -1.0;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("4^3 grid frequency layout") {
  const Grid3D g = make_grid({4, 4, 4}, {1, 1, 1});
  for (int a = 0; a < 3; ++a) {
    CHECK(g.dk(a) == doctest::Approx(kPi / 2));
    CHECK(g.k_axis(a, 0) == 0.0);
    CHECK(g.k_axis(a, 1) == doctest::Approx(kPi / 2));
    CHECK(g.k_axis(a, 2) == doctest::Approx(kPi));
    CHECK(g.is_nyquist(a, 2));
    CHECK(g.k_axis(a, 3) == doctest::Approx(-kPi / 2));
  }
}

TEST_CASE("anisotropic spacing gives equal boxes") {
  const Grid3D g = make_grid({8, 4, 4}, {0.5, 1, 1});
  for (int a = 0; a < 3; ++a) {
    CHECK(g.length(a) == doctest::Approx(4.0));
    CHECK(g.dk(a) == doctest::Approx(kPi / 2));
  }
}

TEST_CASE("invalid grids are configuration errors") {
  for (auto n : {std::array<int, 3>{3, 4, 4}, {4, 4, 6}, {2, 4, 4}, {0, 4, 4}}) {
    try {
      make_grid(n, {1, 1, 1});
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Config);
    }
  }
  CHECK_THROWS_AS(make_grid({4, 4, 4}, {1, 0, 1}), Error);
  CHECK_THROWS_AS(make_grid({4, 4, 4}, {1, 1, -1}), Error);
}

TEST_CASE("index, unravel and k lookup") {
  const Grid3D g = make_grid({8, 4, 16}, {1, 2, 0.5}, {-1, 2, 3});
  for (std::size_t f = 0; f < g.size(); ++f) {
    const auto i = g.unravel(f);
    CHECK(g.index(i[0], i[1], i[2]) == f);
    CHECK(g.k_index(g.wavevector(f)) == f);
  }
  CHECK(g.index(0, 0, 1) == 1);  // z fastest
  CHECK(g.position(0) == Vec3(-1, 2, 3));
  CHECK_FALSE(g.on_grid(Vec3(0.3 * g.dk(0), 0, 0)));
  CHECK_THROWS_AS(g.k_index(Vec3(0.3, 0, 0)), Error);
  // -Nyquist aliases +Nyquist and is not a separate sample
  CHECK_FALSE(g.on_grid(Vec3(-4 * g.dk(0), 0, 0)));
  CHECK(g.on_grid(Vec3(4 * g.dk(0), 0, 0)));
}

TEST_CASE("zero field transforms to zero") {
  const Grid3D g = make_grid({4, 4, 4}, {1, 1, 1});
  const SpectralField s = to_spectral(FieldState::zeros(g));
  for (const auto& v : s.values) CHECK(v.norm() == 0.0);
  const FieldState f = to_spatial(SpectralField::zeros(g));
  for (const auto& v : f.values) CHECK(v.norm() == 0.0);
}

TEST_CASE("forward transform matches the direct sum") {
  const Grid3D g = make_grid({4, 8, 4}, {0.7, 0.3, 1.1}, {-1.3, 0.4, 2.0});
  const FieldState f = random_field(g, 11);
  const SpectralField s = to_spectral(f);
  const auto direct = oracle::naive_forward(f);
  double scale = 0.0;
  for (const auto& v : direct) scale = std::max(scale, v.norm());
  CHECK(max_diff(s.values, direct) / scale < 1e-12);
}

TEST_CASE("backward transform matches the direct sum") {
  const Grid3D g = make_grid({8, 4, 4}, {0.5, 1.0, 0.25}, {0.0, -2.0, 1.0});
  SpectralField s = SpectralField::zeros(g);
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal;
  for (auto& v : s.values) {
    for (int c = 0; c < 6; ++c) v[c] = cplx(normal(rng), normal(rng));
  }
  const FieldState f = to_spatial(s);
  const auto direct = oracle::naive_backward(s);
  double scale = 0.0;
  for (const auto& v : direct) scale = std::max(scale, v.norm());
  CHECK(max_diff(f.values, direct) / scale < 1e-12);
}

TEST_CASE("plane wave concentrates on its k sample") {
  const Grid3D g = Grid3D::centred({8, 8, 8}, {0.5, 0.5, 0.5});
  const Vec3 k0(2 * g.dk(0), -1 * g.dk(1), 3 * g.dk(2));
  CVec6 v;
  v << 1.0, cplx(0, 2), -0.5, 0.25, cplx(1, 1), 0.0;
  FieldState f = FieldState::zeros(g);
  for (std::size_t n = 0; n < g.size(); ++n) f.values[n] = std::polar(1.0, k0.dot(g.position(n))) * v;
  const SpectralField s = to_spectral(f);
  const std::size_t m0 = g.k_index(k0);
  const double expected = std::pow(2 * kPi, -1.5) * g.cell_volume() * g.size();
  CHECK((s.values[m0] - expected * v).norm() < 1e-12 * expected);
  for (std::size_t m = 0; m < g.size(); ++m) {
    if (m != m0) CHECK(s.values[m].norm() < 1e-12 * expected);
  }
}

TEST_CASE("delta spectrum synthesises a plane wave") {
  const Grid3D g = Grid3D::centred({8, 4, 8}, {1.0, 1.5, 0.5});
  const Vec3 k0(-3 * g.dk(0), 1 * g.dk(1), 4 * g.dk(2));  // includes a Nyquist component
  CVec6 w;
  w << 0.0, 1.0, cplx(0, -1), 2.0, 0.0, cplx(0.5, 0.5);
  SpectralField s = SpectralField::zeros(g);
  s.values[g.k_index(k0)] = w;
  const FieldState f = to_spatial(s);
  const double pref = std::pow(2 * kPi, -1.5) * g.k_cell_volume();
  for (std::size_t n = 0; n < g.size(); ++n) {
    const CVec6 expected = pref * std::polar(1.0, k0.dot(g.position(n))) * w;
    CHECK((f.values[n] - expected).norm() < 1e-12 * pref);
  }
}

TEST_CASE("round trip and Parseval on random fields") {
  for (int n : {16, 32}) {
    const Grid3D g = Grid3D::centred({n, n, n}, {0.3, 0.3, 0.3});
    const FieldState f = random_field(g, 100 + n);
    const SpectralField s = to_spectral(f);
    const FieldState back = to_spatial(s);
    double scale = 0.0;
    for (const auto& v : f.values) scale = std::max(scale, v.norm());
    CHECK(max_diff(back.values, f.values) / scale < 1e-12);
    const double er = spatial_norm2(f);
    CHECK(std::abs(er - spectral_norm2(s)) / er < 1e-10);
  }
}

TEST_CASE("Parseval on a Gaussian envelope by direct summation") {
  const Grid3D g = Grid3D::centred({16, 16, 16}, {0.4, 0.4, 0.4});
  FieldState f = FieldState::zeros(g);
  double direct = 0.0;
  for (std::size_t n = 0; n < g.size(); ++n) {
    const Vec3 r = g.position(n);
    const double env = std::exp(-r.squaredNorm() / 2.0);
    f.values[n] << env, 0.0, cplx(0, env), 0.0, 0.0, 0.0;
    direct += 2.0 * env * env * g.cell_volume();
  }
  CHECK(std::abs(spectral_norm2(to_spectral(f)) - direct) / direct < 1e-10);
}

TEST_CASE("discard_dc reports the removed weight") {
  const Grid3D g = make_grid({4, 4, 4}, {1, 1, 1});
  SpectralField s = SpectralField::zeros(g);
  s.values[0] << 3.0, 4.0, 0, 0, 0, 0;
  s.values[1] << 1.0, 0, 0, 0, 0, 0;
  CHECK(discard_dc(s) == doctest::Approx(5.0));
  CHECK(s.values[0].norm() == 0.0);
  CHECK(s.values[1].norm() == 1.0);
}

TEST_CASE("finite detects NaN") {
  const Grid3D g = make_grid({4, 4, 4}, {1, 1, 1});
  FieldState f = FieldState::zeros(g);
  CHECK(f.finite());
  f.values[7][2] = cplx(std::nan(""), 0.0);
  CHECK_FALSE(f.finite());
}

}  // TEST_SUITE
