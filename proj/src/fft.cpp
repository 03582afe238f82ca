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
#include "fft.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include <fftw3.h>

namespace photonwf::detail {
namespace {

struct PlanDeleter {
  void operator()(fftw_plan_s* p) const { fftw_destroy_plan(p); }
};
using PlanPtr = std::unique_ptr<fftw_plan_s, PlanDeleter>;

struct BufferDeleter {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};
using BufferPtr = std::unique_ptr<fftw_complex, BufferDeleter>;

using PlanKey = std::tuple<int, int, int, int, int>;

BufferPtr allocate(std::size_t count) {
  auto* raw = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * count));
  if (raw == nullptr) throw std::bad_alloc();
  return BufferPtr(raw);
}

// The FFTW planner is not re-entrant; execution of an existing plan on new
// arrays is. Buffers always come from fftw_malloc so every execution sees the
// alignment the plan was made with, which keeps results bit-reproducible.
fftw_plan plan_for(const std::array<int, 3>& n, int components, FftDirection dir) {
  static std::mutex mutex;
  static std::map<PlanKey, PlanPtr> cache;

  const PlanKey key{n[0], n[1], n[2], components, static_cast<int>(dir)};
  std::lock_guard lock(mutex);
  if (auto it = cache.find(key); it != cache.end()) return it->second.get();

  const std::size_t total = static_cast<std::size_t>(n[0]) * n[1] * n[2] * components;
  BufferPtr scratch = allocate(total);
  fftw_plan plan = fftw_plan_many_dft(3, n.data(), components, scratch.get(), nullptr,
                                      components, 1, scratch.get(), nullptr, components, 1,
                                      static_cast<int>(dir), FFTW_ESTIMATE);
  if (plan == nullptr) throw std::runtime_error("fftw: planning failed");
  cache.emplace(key, PlanPtr(plan));
  return plan;
}

}  // namespace

void fft3d(const std::array<int, 3>& n, int components, std::span<cplx> data,
           FftDirection dir) {
  const std::size_t total = static_cast<std::size_t>(n[0]) * n[1] * n[2] * components;
  if (data.size() != total) throw std::invalid_argument("fft3d: buffer size mismatch");

  fftw_plan plan = plan_for(n, components, dir);
  BufferPtr buffer = allocate(total);
  auto* work = reinterpret_cast<cplx*>(buffer.get());
  std::copy(data.begin(), data.end(), work);
  fftw_execute_dft(plan, buffer.get(), buffer.get());
  std::copy(work, work + total, data.begin());
}

}  // namespace photonwf::detail
