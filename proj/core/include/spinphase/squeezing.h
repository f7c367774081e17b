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

#ifndef SPINPHASE_SQUEEZING_H_
#define SPINPHASE_SQUEEZING_H_

// Figures of merit for interferometric phase estimation: the Ramsey
// spin-squeezing parameter xi^2, the canonical phase distribution P(phi), its
// sharpness S, and the phase-squeezing parameter zeta^2 = 4J(1 - Re S).

#include <optional>

#include <Eigen/Dense>

#include "spinphase/spin_algebra.h"

namespace spinphase {

/// (<J_x>, <J_y>, <J_z>).
Eigen::Vector3d mean_spin(const SpinState& state);

/// Below this multiple of J the mean spin counts as zero and xi^2 is undefined.
inline constexpr double kMeanSpinZeroThreshold = 1e-9;

/// 2J Var(J_y) / |<J>|^2. Throws MeanSpinZero when |<J>| <= 1e-9 J.
double xi_squared(const SpinState& state);

/// Same ratio with Var(J.n) minimized over unit n perpendicular to <J>.
double xi_squared_optimized(const SpinState& state);

/// Ramsey precision Delta J_y / (|<J>| |cos varphi| sqrt(M)).
/// Throws DivergentAtQuadrature when |cos varphi| < 1e-12.
double ramsey_precision(const SpinState& state, int measurements, double varphi);

/// S = sum_mu <J,mu+1|psi><psi|J,mu>_z.
struct Sharpness {
  Complex value;
  double real() const { return value.real(); }
  double modulus() const { return std::abs(value); }
};

Sharpness sharpness(const SpinState& state);
Sharpness sharpness(const DensityMatrix& rho);

/// 4J (1 - Re S).
double zeta_squared(const SpinState& state);
double zeta_squared(const DensityMatrix& rho);

/// (1 - Re S) / (1 - S_coh) against the same-J coherent state.
double zeta_squared_rc(const SpinState& state);

/// Canonical phase distribution of e^{-i varphi J_z}|psi>.
///
/// P(phi) = (1/2pi) sum_{k=-2J}^{2J} A_k e^{i k phi}, where
/// A_k = sum_mu c_{mu+k} conj(c_mu) over the rotated coefficients, so P is a
/// trigonometric polynomial of degree 2J and `correlation` (k = 0..2J, with
/// A_{-k} = conj(A_k)) reconstructs it exactly at any phi.
struct PhaseDistribution {
  SpinQuantum spin;
  double varphi;
  RealVector phi_grid;       // uniform over [-pi, pi)
  RealVector density;
  ComplexVector correlation;

  double density_at(double phi) const;
  /// Periodic trapezoid rule on the grid; exact for the degree-2J density.
  double integral() const;
  /// <e^{i(varphi - phi)}>, equal to the sharpness of the unrotated state.
  Complex sharpness() const;
};

/// Minimum grid size 4J + 3.
int min_phase_points(SpinQuantum j);
/// max(512, 8J + 1).
int default_phase_points(SpinQuantum j);

/// Throws GridTooCoarse if n_points < 4J + 3.
PhaseDistribution phase_distribution(const SpinState& state, double varphi, int n_points);
PhaseDistribution phase_distribution(const SpinState& state, double varphi = 0.0);

struct WrappedVariance {
  double direct;          // exact second central moment over the window
  double approx;          // 2 (1 - Re S)
  double holevo;          // |S|^-2 - 1, +inf when S = 0
  double window_origin;   // phi_0: window is [phi_0, phi_0 + 2 pi)
};

/// The window is centred on the grid maximum of P, i.e. phi_0 = peak - pi.
WrappedVariance variance_wrapped(const PhaseDistribution& dist);

/// Coefficients <J,mu|psi> in the eigenbasis of J_axis, after the global
/// phase that maximizes sum_mu Re<J,mu|psi>.
struct BasisCoefficients {
  Axis axis;
  RealVector mu;
  RealVector coeff;       // real parts
  double residual_imag;   // max |Im| left after the phase choice
};

BasisCoefficients basis_coefficients(const SpinState& state, Axis axis);

struct SqueezingReport {
  Eigen::Vector3d mean_spin;
  std::optional<double> xi_sq;            // empty when the mean spin is zero
  std::optional<double> xi_sq_optimized;
  double zeta_sq;
  double zeta_sq_rc;
  double sharpness_re;
  double sharpness_mod;
  double variance_approx;
  double holevo_variance;
};

SqueezingReport squeezing_report(const SpinState& state);

}  // namespace spinphase

#endif  // SPINPHASE_SQUEEZING_H_
