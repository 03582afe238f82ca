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

#include <utility>
#include <vector>

#include "photonwf/lattice.hpp"

namespace photonwf {

enum class Helicity : int { Minus = -1, Plus = +1 };

inline double sign(Helicity h) { return static_cast<int>(h); }

/// Spin-1 generators (S_a)_{jl} = -i eps_{ajl} and the 6x6 block operator
/// J = [[0, I], [-I, 0]].
struct OperatorMatrices {
  CMat3 Sx, Sy, Sz;

  static const OperatorMatrices& get();

  const CMat3& S(int axis) const { return axis == 0 ? Sx : (axis == 1 ? Sy : Sz); }
  /// S . k, acting on a 3-vector as i k x v.
  CMat3 dot(const Vec3& k) const { return k[0] * Sx + k[1] * Sy + k[2] * Sz; }
};

/// J v: upper <- lower, lower <- -upper.
inline CVec6 apply_J(const CVec6& v) { return stack(lower(v), -upper(v)); }

/// Applies a 3x3 operator to the upper and lower halves separately.
inline CVec6 apply_blockwise(const CMat3& op, const CVec6& v) {
  return stack(op * upper(v), op * lower(v));
}

struct HelicityVectors {
  Vec3 k;
  CVec3 f_plus;
  CVec3 f_minus;
  CVec6 psi_plus;   // (f+, -i f+)
  CVec6 psi_minus;  // (f-, +i f-)

  const CVec3& f(Helicity h) const { return h == Helicity::Plus ? f_plus : f_minus; }
  const CVec6& psi(Helicity h) const {
    return h == Helicity::Plus ? psi_plus : psi_minus;
  }
};

/// Switch to the on-axis convention when kx^2 + ky^2 < kAxisEpsilon |k|^2.
inline constexpr double kAxisEpsilon = 1e-24;

/// Circular transverse basis. Off the z-axis
///
///   f+-(k) = [2 |k|^2 (kx^2+ky^2)]^(-1/2) (-kx kz +- i ky |k|,
///                                          -ky kz -+ i kx |k|,
///                                           kx^2 + ky^2)
///
/// evaluated through the direction cosines (kx/rho, ky/rho), rho = hypot(kx, ky).
/// On the axis those cosines are fixed to (1, 0), the kx -> 0+ limit, giving
/// f+- = (-sgn(kz), -+i, 0)/sqrt(2). Throws Error(Domain) for k = 0.
HelicityVectors transverse_basis(const Vec3& k);

/// |(S.k^) f+ - f+| and |(S.k^) f- + f-|.
std::pair<double, double> helicity_eigencheck(const Vec3& k, const HelicityVectors& h);

/// Per-k helicity amplitudes; the classical spectrum they describe is
/// Phi(k) = c+(k) psi+(k) + c-(k) psi-(k). The DC sample is always zero.
struct SpectralCoefficients {
  Grid3D grid;
  std::vector<cplx> c_plus;
  std::vector<cplx> c_minus;
  double time = 0.0;

  static SpectralCoefficients zeros(const Grid3D& grid, double time = 0.0);
  const std::vector<cplx>& c(Helicity h) const {
    return h == Helicity::Plus ? c_plus : c_minus;
  }
  std::vector<cplx>& c(Helicity h) { return h == Helicity::Plus ? c_plus : c_minus; }
  bool finite() const;
  /// sum (|c+|^2 + |c-|^2) d3k
  double norm2() const;
};

struct Projection {
  SpectralCoefficients coeffs;
  /// max_k |Phi(k) - c+ psi+ - c- psi-|, content outside the forward
  /// positive-frequency subspace.
  double residual = 0.0;
  /// Norm of the k = 0 sample that was dropped.
  double discarded_dc = 0.0;
};

/// c+-(k) = psi+-(k)^dagger Phi(k) / 2 for every k != 0.
Projection project(const SpectralField& spectrum);

SpectralField synthesize(const SpectralCoefficients& coeffs);

}  // namespace photonwf
