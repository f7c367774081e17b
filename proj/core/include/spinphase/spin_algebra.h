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

#ifndef SPINPHASE_SPIN_ALGEBRA_H_
#define SPINPHASE_SPIN_ALGEBRA_H_

// Finite-dimensional angular-momentum algebra for a single spin J.
//
// Matrices and state vectors are indexed by ascending J_z eigenvalue: index i
// corresponds to mu = i - J, so index 0 is |J,-J>_z and index 2J is |J,J>_z.

#include <complex>
#include <span>
#include <utility>

#include <Eigen/Dense>

namespace spinphase {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Total spin stored as the integer 2J, so half-integer J is exact.
/// For an ensemble of two-level systems N = 2J.
class SpinQuantum {
 public:
  explicit SpinQuantum(int two_j);
  static SpinQuantum from_particles(int n) { return SpinQuantum(n); }

  int two_j() const { return two_j_; }
  int n_particles() const { return two_j_; }
  int dim() const { return two_j_ + 1; }
  double j() const { return 0.5 * two_j_; }
  bool integer_spin() const { return two_j_ % 2 == 0; }

  /// mu value of basis index i.
  double mu(int index) const { return index - j(); }

  friend bool operator==(SpinQuantum a, SpinQuantum b) = default;

 private:
  int two_j_;
};

enum class Axis { kX, kY, kZ };

char axis_name(Axis axis);

/// Normalized pure state in the J_z eigenbasis.
class SpinState {
 public:
  /// Requires |sum |c|^2 - 1| <= 1e-12 and coeffs.size() == j.dim().
  SpinState(SpinQuantum j, ComplexVector coeffs);

  /// Normalizes `coeffs` first. Throws on a zero vector.
  static SpinState normalized(SpinQuantum j, ComplexVector coeffs);

  SpinQuantum spin() const { return j_; }
  const ComplexVector& coeffs() const { return coeffs_; }
  Complex coeff(int index) const { return coeffs_(index); }
  int dim() const { return j_.dim(); }

  /// Same state with the global phase chosen so that the largest-magnitude
  /// coefficient is real positive (ties go to the lowest index).
  SpinState canonical_phase() const;

 private:
  SpinQuantum j_;
  ComplexVector coeffs_;
};

/// |<a|b>|^2.
double fidelity(const SpinState& a, const SpinState& b);

/// Dense operator on the spin-J space. The Hermitian and unitary flags are
/// computed from the matrix at construction, never taken on trust.
class SpinOperator {
 public:
  SpinOperator(SpinQuantum j, ComplexMatrix matrix);

  SpinQuantum spin() const { return j_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  bool hermitian() const { return hermitian_; }
  bool unitary() const { return unitary_; }

  SpinOperator adjoint() const;
  SpinState apply(const SpinState& state) const;

  static constexpr double kHermitianTolerance = 1e-12;
  static constexpr double kUnitaryTolerance = 1e-10;

 private:
  SpinQuantum j_;
  ComplexMatrix matrix_;
  bool hermitian_;
  bool unitary_;
};

/// <psi|A|psi>. Real part only is meaningful for Hermitian A.
Complex expectation(const SpinState& state, const ComplexMatrix& op);

/// Standard spin-J matrix J_x, J_y or J_z in the J_z eigenbasis.
SpinOperator angular_momentum_operator(SpinQuantum j, Axis axis);

/// Raising/lowering operators about x: (J_y + i J_z, J_y - i J_z).
std::pair<SpinOperator, SpinOperator> ladder_about_x(SpinQuantum j);

/// Eigendecomposition of J_axis. Column k of `vectors` is the eigenvector for
/// eigenvalue mu = k - J. Each column's phase is fixed so its largest-magnitude
/// component is real positive, ties broken by lowest index.
struct Eigenbasis {
  RealVector eigenvalues;
  ComplexMatrix vectors;
};

Eigenbasis eigenbasis(SpinQuantum j, Axis axis);

/// Raising operator about `axis`: J_y + iJ_z (x), J_x - iJ_z (y), J_x + iJ_y (z).
SpinOperator raising_operator(SpinQuantum j, Axis axis);

/// Same eigenvectors as eigenbasis(), but only the mu = +J vector keeps the
/// dominant-component phase; the others are phased so that the axis raising
/// operator has real non-negative matrix elements between neighbours.
Eigenbasis ladder_eigenbasis(SpinQuantum j, Axis axis);

/// Cached eigendecomposition of a Hermitian generator H, giving
/// exp(-i * scale * H) for any scale without re-diagonalizing.
class HermitianPropagator {
 public:
  /// Throws NonHermitianGenerator if H is not Hermitian to 1e-12.
  explicit HermitianPropagator(const SpinOperator& generator);

  SpinOperator unitary(double scale) const;
  ComplexVector apply(double scale, const ComplexVector& v) const;

  const RealVector& eigenvalues() const { return eigenvalues_; }

 private:
  SpinQuantum j_;
  RealVector eigenvalues_;
  ComplexMatrix eigenvectors_;
};

/// exp(-i * scale * generator).
SpinOperator unitary_exp(const SpinOperator& generator, double scale);

/// Unit-trace Hermitian density matrix on the spin-J space.
class DensityMatrix {
 public:
  /// Requires Hermitian to 1e-12 and trace 1 to 1e-10.
  DensityMatrix(SpinQuantum j, ComplexMatrix rho);

  static DensityMatrix pure(const SpinState& state);
  static DensityMatrix maximally_mixed(SpinQuantum j);
  /// sum_k w_k |psi_k><psi_k|; weights are renormalized to sum to one.
  static DensityMatrix mixture(std::span<const double> weights,
                               std::span<const SpinState> states);

  SpinQuantum spin() const { return j_; }
  const ComplexMatrix& matrix() const { return rho_; }

 private:
  SpinQuantum j_;
  ComplexMatrix rho_;
};

/// e^{-i varphi J_z}|psi>: c_mu <- e^{-i mu varphi} c_mu.
SpinState rotate_about_z(const SpinState& state, double varphi);

}  // namespace spinphase

#endif  // SPINPHASE_SPIN_ALGEBRA_H_
