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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace photonwf {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;
using CVec6 = Eigen::Matrix<cplx, 6, 1>;
using CMat3 = Eigen::Matrix3cd;

inline constexpr double kPi = 3.14159265358979323846;

enum class ErrorKind {
  Config,   // malformed or inconsistent configuration
  Domain,   // argument outside the mathematical domain (e.g. k = 0)
  Index,    // invalid mode / region index
  Io,       // filesystem failures
  Numeric,  // non-finite values
};

/// Single exception type used across the library. The C API maps `kind()`
/// onto its status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Upper three components of a 6-vector (the scaled electric field).
inline CVec3 upper(const CVec6& v) { return v.head<3>(); }
/// Lower three components (the scaled magnetic field).
inline CVec3 lower(const CVec6& v) { return v.tail<3>(); }

inline CVec6 stack(const CVec3& top, const CVec3& bottom) {
  CVec6 out;
  out << top, bottom;
  return out;
}

// a x b with no conjugation. Eigen's cross() conjugates complex results.
inline CVec3 cross(const CVec3& a, const CVec3& b) {
  return CVec3(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]);
}

}  // namespace photonwf
