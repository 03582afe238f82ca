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

#include <array>
#include <span>

#include "photonwf/types.hpp"

namespace photonwf::detail {

enum class FftDirection { Forward = -1, Backward = +1 };

/// Unnormalised in-place 3D DFT of `components` interleaved complex fields
/// laid out as data[flat * components + c]. Forward uses exp(-i ...).
void fft3d(const std::array<int, 3>& n, int components, std::span<cplx> data,
           FftDirection dir);

}  // namespace photonwf::detail
