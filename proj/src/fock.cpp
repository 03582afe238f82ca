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
#include "photonwf/fock.hpp"

#include <cmath>
#include <sstream>

#include "photonwf/maxwell.hpp"

namespace photonwf {
namespace {

void check_mode(const FockState& state, std::size_t mode) {
  if (mode >= state.modes().size()) {
    throw Error(ErrorKind::Index, "mode index " + std::to_string(mode) + " out of range (" +
                                      std::to_string(state.modes().size()) + " modes)");
  }
}

void check_normalized(const FockState& state) {
  const double n2 = state.norm2();
  if (std::abs(n2 - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg << "expectation requires a normalised state (norm^2 = " << n2 << ")";
    throw Error(ErrorKind::Domain, msg.str());
  }
}

// Box-normalised mode functions sampled at the given grid points.
std::vector<std::vector<CVec6>> mode_functions(const ModeSet& modes, const Grid3D& grid,
                                               const std::vector<std::size_t>& points) {
  const double norm = 1.0 / std::sqrt(2.0 * grid.box_volume());
  std::vector<std::vector<CVec6>> out(modes.size());
  for (std::size_t m = 0; m < modes.size(); ++m) {
    const Mode& mode = modes[m];
    if (!grid.on_grid(mode.k)) {
      throw Error(ErrorKind::Domain, "mode " + std::to_string(m) + " is not a k-grid sample");
    }
    const CVec6 psi = transverse_basis(mode.k).psi(mode.helicity);
    out[m].reserve(points.size());
    for (std::size_t p : points) {
      out[m].push_back(norm * std::polar(1.0, mode.k.dot(grid.position(p))) * psi);
    }
  }
  return out;
}

std::vector<double> mode_frequencies(const ModeSet& modes, const PhysicalConstants& consts) {
  std::vector<double> out;
  for (const auto& m : modes.modes()) out.push_back(consts.c * m.k.norm());
  return out;
}

}  // namespace

ModeSet::ModeSet(std::vector<Mode> modes, int max_occupation)
    : modes_(std::move(modes)), max_occupation_(max_occupation) {
  if (max_occupation_ < 1) throw Error(ErrorKind::Config, "max_occupation must be >= 1");
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    if (!(modes_[i].k.norm() > 0.0)) {
      throw Error(ErrorKind::Config, "mode " + std::to_string(i) + " has |k| = 0");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (modes_[j].helicity == modes_[i].helicity && modes_[j].k == modes_[i].k) {
        throw Error(ErrorKind::Config, "modes " + std::to_string(j) + " and " +
                                           std::to_string(i) + " are duplicates");
      }
    }
  }
}

bool ModeSet::operator==(const ModeSet& other) const {
  if (max_occupation_ != other.max_occupation_ || modes_.size() != other.modes_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    if (modes_[i].k != other.modes_[i].k || modes_[i].helicity != other.modes_[i].helicity) {
      return false;
    }
  }
  return true;
}

FockState FockState::zero(const ModeSet& modes) { return FockState(modes); }

FockState FockState::vacuum(const ModeSet& modes) {
  return basis(modes, Occupation(modes.size(), 0));
}

FockState FockState::basis(const ModeSet& modes, const Occupation& occupation) {
  FockState s(modes);
  s.add(occupation, 1.0);
  return s;
}

cplx FockState::amplitude(const Occupation& occupation) const {
  auto it = amplitudes_.find(occupation);
  return it == amplitudes_.end() ? cplx{} : it->second;
}

double FockState::norm2() const {
  double sum = 0.0;
  for (const auto& [occ, amp] : amplitudes_) sum += std::norm(amp);
  return sum;
}

FockState FockState::normalized() const {
  const double n2 = norm2();
  if (n2 == 0.0) throw Error(ErrorKind::Domain, "cannot normalise the zero state");
  return scaled(1.0 / std::sqrt(n2));
}

FockState FockState::scaled(cplx factor) const {
  FockState out = *this;
  for (auto& [occ, amp] : out.amplitudes_) amp *= factor;
  return out;
}

FockState FockState::plus(const FockState& other, cplx weight) const {
  if (!(modes_ == other.modes_)) {
    throw Error(ErrorKind::Domain, "states belong to different mode sets");
  }
  FockState out = *this;
  for (const auto& [occ, amp] : other.amplitudes_) out.add(occ, weight * amp);
  out.truncation_loss_ += std::norm(weight) * other.truncation_loss_;
  return out;
}

void FockState::add(const Occupation& occupation, cplx value) {
  if (occupation.size() != modes_.size()) {
    throw Error(ErrorKind::Index, "occupation vector has wrong length");
  }
  for (int n : occupation) {
    if (n < 0 || n > modes_.max_occupation()) {
      throw Error(ErrorKind::Index, "occupation outside truncation bounds");
    }
  }
  cplx& slot = amplitudes_[occupation];
  slot += value;
  if (slot == 0.0) amplitudes_.erase(occupation);
}

cplx inner(const FockState& a, const FockState& b) {
  cplx sum = 0.0;
  for (const auto& [occ, amp] : a.amplitudes()) sum += std::conj(amp) * b.amplitude(occ);
  return sum;
}

FockState create(const FockState& state, std::size_t mode) {
  check_mode(state, mode);
  FockState out(state.modes());
  out.truncation_loss_ = state.truncation_loss_;
  const int cap = state.modes().max_occupation();
  for (const auto& [occ, amp] : state.amplitudes()) {
    const int n = occ[mode];
    const double factor = std::sqrt(static_cast<double>(n + 1));
    if (n + 1 > cap) {
      out.truncation_loss_ += std::norm(factor * amp);
      continue;
    }
    Occupation raised = occ;
    raised[mode] = n + 1;
    out.add(raised, factor * amp);
  }
  return out;
}

FockState annihilate(const FockState& state, std::size_t mode) {
  check_mode(state, mode);
  FockState out(state.modes());
  out.truncation_loss_ = state.truncation_loss_;
  for (const auto& [occ, amp] : state.amplitudes()) {
    const int n = occ[mode];
    if (n == 0) continue;
    Occupation lowered = occ;
    lowered[mode] = n - 1;
    out.add(lowered, std::sqrt(static_cast<double>(n)) * amp);
  }
  return out;
}

double number_expectation(const FockState& state, std::size_t mode) {
  check_mode(state, mode);
  check_normalized(state);
  double sum = 0.0;
  for (const auto& [occ, amp] : state.amplitudes()) sum += occ[mode] * std::norm(amp);
  return sum;
}

double total_number(const FockState& state) {
  double sum = 0.0;
  for (std::size_t m = 0; m < state.modes().size(); ++m) sum += number_expectation(state, m);
  return sum;
}

double hamiltonian_expectation(const FockState& state, const PhysicalConstants& consts) {
  check_normalized(state);
  std::vector<double> energy;
  for (const auto& m : state.modes().modes()) energy.push_back(consts.photon_energy(m.k.norm()));
  double sum = 0.0;
  for (const auto& [occ, amp] : state.amplitudes()) {
    double e = 0.0;
    for (std::size_t m = 0; m < occ.size(); ++m) e += energy[m] * occ[m];
    sum += e * std::norm(amp);
  }
  return sum;
}

Eigen::MatrixXcd one_body_density(const FockState& state) {
  const std::size_t n = state.modes().size();
  std::vector<FockState> lowered;
  lowered.reserve(n);
  for (std::size_t m = 0; m < n; ++m) lowered.push_back(annihilate(state, m));
  Eigen::MatrixXcd g(n, n);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t mp = 0; mp < n; ++mp) g(m, mp) = inner(lowered[m], lowered[mp]);
  }
  return g;
}

double coarse_number_in_volume(const FockState& state, const VolumeRegion& region,
                               const Grid3D& grid, const PhysicalConstants& consts, double t) {
  check_normalized(state);
  std::vector<std::size_t> points;
  for (int a = 0; a < 3; ++a) {
    const double tol = 1e-9 * grid.dr()[a];
    const double lo = grid.origin()[a];
    const double hi = lo + grid.length(a);
    if (!(region.lo[a] < region.hi[a]) || region.lo[a] < lo - tol || region.hi[a] > hi + tol) {
      throw Error(ErrorKind::Domain, "volume region lies outside the grid box");
    }
  }
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const Vec3 r = grid.position(p);
    bool inside = true;
    for (int a = 0; a < 3 && inside; ++a) {
      const double tol = 1e-9 * grid.dr()[a];
      inside = r[a] >= region.lo[a] - tol && r[a] < region.hi[a] - tol;
    }
    if (inside) points.push_back(p);
  }

  const auto phi = mode_functions(state.modes(), grid, points);
  const auto omega = mode_frequencies(state.modes(), consts);
  const Eigen::MatrixXcd g = one_body_density(state);
  cplx sum = 0.0;
  for (std::size_t m = 0; m < phi.size(); ++m) {
    for (std::size_t mp = 0; mp < phi.size(); ++mp) {
      if (g(m, mp) == 0.0) continue;
      cplx overlap = 0.0;
      for (std::size_t p = 0; p < points.size(); ++p) overlap += phi[m][p].dot(phi[mp][p]);
      sum += g(m, mp) * overlap * std::polar(1.0, (omega[m] - omega[mp]) * t);
    }
  }
  return sum.real() * grid.cell_volume();
}

double coarse_flux_through_surface(const FockState& state, const SurfaceRegion& region,
                                   const Grid3D& grid, const PhysicalConstants& consts) {
  check_normalized(state);
  if (region.axis < 0 || region.axis > 2) throw Error(ErrorKind::Domain, "surface axis must be 0, 1 or 2");
  if (region.normal_sign != 1 && region.normal_sign != -1) {
    throw Error(ErrorKind::Domain, "surface normal sign must be +1 or -1");
  }
  if (region.t2 < region.t1) throw Error(ErrorKind::Domain, "surface time window has t2 < t1");
  const int a = region.axis;
  const double lo = grid.origin()[a];
  if (region.position < lo || region.position >= lo + grid.length(a)) {
    throw Error(ErrorKind::Domain, "surface plane lies outside the grid box");
  }
  const double window = region.t2 - region.t1;
  if (window == 0.0) return 0.0;

  const int plane = static_cast<int>(std::lround((region.position - lo) / grid.dr()[a])) % grid.n()[a];
  std::vector<std::size_t> points;
  for (std::size_t p = 0; p < grid.size(); ++p) {
    if (grid.unravel(p)[a] == plane) points.push_back(p);
  }
  const double area = grid.cell_volume() / grid.dr()[a];

  const auto phi = mode_functions(state.modes(), grid, points);
  const auto omega = mode_frequencies(state.modes(), consts);
  const Eigen::MatrixXcd g = one_body_density(state);
  cplx sum = 0.0;
  for (std::size_t m = 0; m < phi.size(); ++m) {
    for (std::size_t mp = 0; mp < phi.size(); ++mp) {
      if (g(m, mp) == 0.0) continue;
      cplx flux = 0.0;
      for (std::size_t p = 0; p < points.size(); ++p) {
        const CVec3 em = upper(phi[m][p]);
        const CVec3 hm = lower(phi[m][p]);
        const CVec3 ep = upper(phi[mp][p]);
        const CVec3 hp = lower(phi[mp][p]);
        flux += consts.c * (cross(em.conjugate(), hp) - cross(hm.conjugate(), ep))[a];
      }
      // int_{t1}^{t2} exp(i d t) dt = T exp(i d (t1 + T/2)) sinc(d T / 2)
      const double d = omega[m] - omega[mp];
      const double half = 0.5 * d * window;
      const double sinc = half == 0.0 ? 1.0 : std::sin(half) / half;
      const cplx time_integral =
          window * sinc * std::polar(1.0, d * (region.t1 + 0.5 * window));
      sum += g(m, mp) * flux * time_integral;
    }
  }
  return region.normal_sign * sum.real() * area;
}

}  // namespace photonwf
