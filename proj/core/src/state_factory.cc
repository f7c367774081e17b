// Copyright 2026 The spinphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spinphase/state_factory.h"

#include <cmath>
#include <numbers>
#include <string>

#include "spinphase/errors.h"

namespace spinphase {
namespace {

constexpr Complex kI{0.0, 1.0};

}  // namespace

std::string state_kind_name(StateKind::Tag tag) {
  switch (tag) {
    case StateKind::Tag::kCoherent: return "coherent";
    case StateKind::Tag::kYurke: return "yurke";
    case StateKind::Tag::kNoon: return "noon";
    case StateKind::Tag::kOptimalPhase: return "optimal";
    case StateKind::Tag::kTwoAxisEvolved: return "twist";
    case StateKind::Tag::kSpinSqueezed2act: return "sss";
    case StateKind::Tag::kPhaseSqueezed2act: return "pss";
  }
  return "unknown";
}

SpinState coherent_state(SpinQuantum j) {
  const int n = j.two_j();
  ComplexVector c(j.dim());
  // log of 2^{-N} C(N, k), halved for the amplitude
  const double log_norm = std::lgamma(n + 1.0) - n * std::numbers::ln2;
  for (int k = 0; k <= n; ++k) {
    const double log_prob = log_norm - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
    c(k) = std::exp(0.5 * log_prob);
  }
  return SpinState::normalized(j, std::move(c));
}

SpinState yurke_state(SpinQuantum j, double alpha) {
  if (!j.integer_spin()) {
    throw Error(ErrorCode::kOddParticleNumber,
                "Yurke state needs even N, got N=" + std::to_string(j.n_particles()));
  }
  if (!(alpha >= 0.0 && alpha <= std::numbers::pi / 2)) {
    throw Error(ErrorCode::kInvalidArgument, "Yurke alpha must lie in [0, pi/2]");
  }
  const ComplexMatrix y = ladder_eigenbasis(j, Axis::kY).vectors;
  const int centre = j.two_j() / 2;  // column for mu = 0
  const double s = std::sin(alpha) / std::numbers::sqrt2;
  ComplexVector c = s * y.col(centre + 1) + std::cos(alpha) * y.col(centre) + s * y.col(centre - 1);
  return SpinState::normalized(j, std::move(c)).canonical_phase();
}

SpinState noon_state(SpinQuantum j) {
  ComplexVector c = ComplexVector::Zero(j.dim());
  c(0) = 1.0 / std::numbers::sqrt2;
  c(j.dim() - 1) = 1.0 / std::numbers::sqrt2;
  return SpinState::normalized(j, std::move(c));
}

SpinState optimal_phase_state(SpinQuantum j) {
  const double prefactor = 1.0 / std::sqrt(j.j() + 1.0);
  const double step = std::numbers::pi / (j.two_j() + 2.0);
  ComplexVector c(j.dim());
  for (int k = 0; k < j.dim(); ++k) c(k) = prefactor * std::sin((k + 1) * step);
  return SpinState::normalized(j, std::move(c));
}

SpinOperator TwoAxisTwist::generator(SpinQuantum j) {
  const auto [jp, jm] = ladder_about_x(j);
  const ComplexMatrix a = (jp.matrix() * jp.matrix() - jm.matrix() * jm.matrix()) / 8.0;
  // a is anti-Hermitian; symmetrize i*a to drop round-off.
  const ComplexMatrix h = kI * a;
  return SpinOperator(j, 0.5 * (h + h.adjoint()));
}

TwoAxisTwist::TwoAxisTwist(SpinQuantum j)
    : j_(j), propagator_(generator(j)), initial_(coherent_state(j).coeffs()) {}

SpinState TwoAxisTwist::evolve(double nu) const {
  if (!(nu >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "nu must be >= 0");
  if (nu == 0.0) return SpinState(j_, initial_);
  return SpinState::normalized(j_, propagator_.apply(nu, initial_)).canonical_phase();
}

SpinState evolve_2act(SpinQuantum j, double nu) { return TwoAxisTwist(j).evolve(nu); }

}  // namespace spinphase
