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

#ifndef SPINPHASE_STATE_FACTORY_H_
#define SPINPHASE_STATE_FACTORY_H_

#include <string>

#include "spinphase/spin_algebra.h"

namespace spinphase {

/// Which test state to build, with its parameter where it has one.
struct StateKind {
  enum class Tag {
    kCoherent,
    kYurke,
    kNoon,
    kOptimalPhase,
    kTwoAxisEvolved,
    kSpinSqueezed2act,
    kPhaseSqueezed2act,
  };

  Tag tag = Tag::kCoherent;
  double alpha = 0.1;  // Yurke mixing angle, radians
  double nu = 0.0;     // scaled 2ACT time for kTwoAxisEvolved

  static StateKind coherent() { return {Tag::kCoherent}; }
  static StateKind yurke(double alpha) { return {Tag::kYurke, alpha}; }
  static StateKind noon() { return {Tag::kNoon}; }
  static StateKind optimal_phase() { return {Tag::kOptimalPhase}; }
  static StateKind two_axis_evolved(double nu) { return {Tag::kTwoAxisEvolved, 0.1, nu}; }
  static StateKind spin_squeezed_2act() { return {Tag::kSpinSqueezed2act}; }
  static StateKind phase_squeezed_2act() { return {Tag::kPhaseSqueezed2act}; }

  friend bool operator==(const StateKind&, const StateKind&) = default;
};

/// Default Yurke mixing angle used when none is given.
inline constexpr double kDefaultYurkeAlpha = 0.1;

/// Short flag name: coherent, yurke, noon, optimal, twist, sss, pss.
std::string state_kind_name(StateKind::Tag tag);

/// |J,J>_x written in the z basis: c_mu = 2^{-J} sqrt(C(2J, J+mu)).
SpinState coherent_state(SpinQuantum j);

/// (sin a/sqrt2)|J,1>_y + cos a|J,0>_y + (sin a/sqrt2)|J,-1>_y.
///
/// The three y-eigenvectors are phased along the ladder J_x - i J_z (which
/// raises J_y by one), so the mean spin points along +x for 0 < alpha < pi/2.
/// Requires even N and alpha in [0, pi/2]; throws OddParticleNumber otherwise.
SpinState yurke_state(SpinQuantum j, double alpha);

/// (|J,J>_z + |J,-J>_z)/sqrt2.
SpinState noon_state(SpinQuantum j);

/// Minimum-zeta state: coefficient k = 0..2J (mu = k - J) equals
/// (J+1)^{-1/2} sin((k+1) pi / (2J+2)).
SpinState optimal_phase_state(SpinQuantum j);

/// Two-axis counter-twisting evolution of the coherent state,
/// U(nu) = exp[nu (J_+^2 - J_-^2)/8] with J_+- the x-axis ladder operators.
/// Diagonalizes the generator once; evolve() is then cheap for any nu.
class TwoAxisTwist {
 public:
  explicit TwoAxisTwist(SpinQuantum j);

  SpinQuantum spin() const { return j_; }
  /// Throws InvalidArgument for nu < 0.
  SpinState evolve(double nu) const;

  /// Hermitian H with U(nu) = exp(-i nu H), i.e. H = i (J_+^2 - J_-^2)/8.
  static SpinOperator generator(SpinQuantum j);

 private:
  SpinQuantum j_;
  HermitianPropagator propagator_;
  ComplexVector initial_;
};

SpinState evolve_2act(SpinQuantum j, double nu);

/// Dispatches on kind. The 2ACT squeezed kinds run the twist optimizer.
SpinState make_state(const StateKind& kind, SpinQuantum j);

}  // namespace spinphase

#endif  // SPINPHASE_STATE_FACTORY_H_
