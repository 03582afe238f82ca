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

// Slow, independent reference implementations used only by the tests.

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "photonwf/fock.hpp"
#include "photonwf/lattice.hpp"

namespace oracle {

using photonwf::cplx;
using photonwf::CVec3;
using photonwf::CVec6;
using photonwf::Vec3;
constexpr double kPi = photonwf::kPi;

// Direct O(N^2) sum of the forward transform, straight from the definition
// Phi(k_m) = (2 pi)^(-3/2) sum_n Psi(r_n) exp(-i k_m . r_n) d3r.
inline std::vector<CVec6> naive_forward(const photonwf::FieldState& f) {
  const auto& g = f.grid;
  const double pref = std::pow(2.0 * kPi, -1.5) * g.cell_volume();
  std::vector<CVec6> out(g.size(), CVec6::Zero());
  for (std::size_t m = 0; m < g.size(); ++m) {
    const Vec3 k = g.wavevector(m);
    for (std::size_t n = 0; n < g.size(); ++n) {
      out[m] += std::polar(pref, -k.dot(g.position(n))) * f.values[n];
    }
  }
  return out;
}

// Psi(r_n) = (2 pi)^(-3/2) sum_m Phi(k_m) exp(i k_m . r_n) d3k
inline std::vector<CVec6> naive_backward(const photonwf::SpectralField& s) {
  const auto& g = s.grid;
  const double pref = std::pow(2.0 * kPi, -1.5) * g.k_cell_volume();
  std::vector<CVec6> out(g.size(), CVec6::Zero());
  for (std::size_t n = 0; n < g.size(); ++n) {
    const Vec3 r = g.position(n);
    for (std::size_t m = 0; m < g.size(); ++m) {
      out[n] += std::polar(pref, g.wavevector(m).dot(r)) * s.values[m];
    }
  }
  return out;
}

// Plain a x b, written out so the tests never depend on library helpers.
inline CVec3 cross(const CVec3& a, const CVec3& b) {
  return CVec3(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]);
}

// ---------------------------------------------------------------------------
// Dense Fock space: every occupation vector with entries in [0, cap].

class DenseFock {
 public:
  DenseFock(std::size_t modes, int cap) : modes_(modes), cap_(cap) {
    std::vector<int> occ(modes, 0);
    enumerate(occ, 0);
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
  }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::vector<int>>& basis() const { return basis_; }

  // Truncated annihilation matrix for one mode.
  Eigen::MatrixXcd a(std::size_t mode) const {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      auto occ = basis_[j];
      if (occ[mode] == 0) continue;
      const double amp = std::sqrt(static_cast<double>(occ[mode]));
      occ[mode] -= 1;
      m(index_.at(occ), j) = amp;
    }
    return m;
  }

  Eigen::VectorXcd vector(const photonwf::FockState& s) const {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim());
    for (const auto& [occ, amp] : s.amplitudes()) v[index_.at(occ)] = amp;
    return v;
  }

  photonwf::FockState state(const photonwf::ModeSet& modes, const Eigen::VectorXcd& v) const {
    auto s = photonwf::FockState::zero(modes);
    for (std::size_t i = 0; i < dim(); ++i) {
      if (v[i] != 0.0) s.add(basis_[i], v[i]);
    }
    return s;
  }

 private:
  void enumerate(std::vector<int>& occ, std::size_t pos) {
    if (pos == modes_) {
      basis_.push_back(occ);
      return;
    }
    for (int n = 0; n <= cap_; ++n) {
      occ[pos] = n;
      enumerate(occ, pos + 1);
    }
  }

  std::size_t modes_;
  int cap_;
  std::vector<std::vector<int>> basis_;
  std::map<std::vector<int>, std::size_t> index_;
};

// Composite Simpson rule on [a, b] with an even number of panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
  if (panels % 2) ++panels;
  const double h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

}  // namespace oracle
