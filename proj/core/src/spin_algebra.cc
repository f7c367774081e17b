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

#include "spinphase/spin_algebra.h"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "spinphase/errors.h"

namespace spinphase {
namespace {

constexpr Complex kI{0.0, 1.0};

// Index of the largest-magnitude entry; near-ties resolve to the lowest index.
Eigen::Index dominant_index(const ComplexVector& v) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) best = std::max(best, std::abs(v(i)));
  const double cutoff = best * (1.0 - 1e-9);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= cutoff) return i;
  }
  return 0;
}

void fix_phase(Eigen::Ref<ComplexVector> v) {
  const Complex pivot = v(dominant_index(v));
  if (std::abs(pivot) == 0.0) return;
  v *= std::conj(pivot) / std::abs(pivot);
}

// Raising operator J_+ = J_x + i J_y in the z basis.
ComplexMatrix raising_z(SpinQuantum j) {
  const int d = j.dim();
  const double jj = j.j();
  ComplexMatrix jp = ComplexMatrix::Zero(d, d);
  for (int i = 0; i + 1 < d; ++i) {
    const double mu = j.mu(i);
    jp(i + 1, i) = std::sqrt(jj * (jj + 1.0) - mu * (mu + 1.0));
  }
  return jp;
}

}  // namespace

SpinQuantum::SpinQuantum(int two_j) : two_j_(two_j) {
  if (two_j < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "2J must be >= 1, got " + std::to_string(two_j));
  }
}

char axis_name(Axis axis) {
  switch (axis) {
    case Axis::kX: return 'x';
    case Axis::kY: return 'y';
    case Axis::kZ: return 'z';
  }
  return '?';
}

SpinState::SpinState(SpinQuantum j, ComplexVector coeffs)
    : j_(j), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != j_.dim()) {
    throw Error(ErrorCode::kInvalidArgument,
                "coefficient vector has length " + std::to_string(coeffs_.size()) +
                    ", expected " + std::to_string(j_.dim()));
  }
  const double norm_sq = coeffs_.squaredNorm();
  if (!(std::abs(norm_sq - 1.0) <= 1e-12)) {
    throw Error(ErrorCode::kInvalidArgument,
                "state is not normalized (|psi|^2 = " + std::to_string(norm_sq) + ")");
  }
}

SpinState SpinState::normalized(SpinQuantum j, ComplexVector coeffs) {
  const double norm = coeffs.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorCode::kInvalidArgument, "cannot normalize a zero or non-finite vector");
  }
  coeffs /= norm;
  return SpinState(j, std::move(coeffs));
}

SpinState SpinState::canonical_phase() const {
  ComplexVector c = coeffs_;
  fix_phase(c);
  return SpinState(j_, std::move(c));
}

double fidelity(const SpinState& a, const SpinState& b) {
  return std::norm(a.coeffs().dot(b.coeffs()));
}

SpinOperator::SpinOperator(SpinQuantum j, ComplexMatrix matrix)
    : j_(j), matrix_(std::move(matrix)) {
  if (matrix_.rows() != j_.dim() || matrix_.cols() != j_.dim()) {
    throw Error(ErrorCode::kInvalidArgument, "operator dimension does not match 2J+1");
  }
  hermitian_ = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() < kHermitianTolerance;
  const ComplexMatrix gram = matrix_.adjoint() * matrix_;
  unitary_ = (gram - ComplexMatrix::Identity(j_.dim(), j_.dim())).cwiseAbs().maxCoeff() <
             kUnitaryTolerance;
}

SpinOperator SpinOperator::adjoint() const { return SpinOperator(j_, matrix_.adjoint()); }

SpinState SpinOperator::apply(const SpinState& state) const {
  if (state.spin() != j_) {
    throw Error(ErrorCode::kInvalidArgument, "operator and state have different J");
  }
  return SpinState::normalized(j_, matrix_ * state.coeffs());
}

Complex expectation(const SpinState& state, const ComplexMatrix& op) {
  return state.coeffs().dot(op * state.coeffs());
}

SpinOperator angular_momentum_operator(SpinQuantum j, Axis axis) {
  const int d = j.dim();
  switch (axis) {
    case Axis::kZ: {
      ComplexMatrix jz = ComplexMatrix::Zero(d, d);
      for (int i = 0; i < d; ++i) jz(i, i) = j.mu(i);
      return SpinOperator(j, std::move(jz));
    }
    case Axis::kX: {
      const ComplexMatrix jp = raising_z(j);
      return SpinOperator(j, 0.5 * (jp + jp.adjoint()));
    }
    case Axis::kY: {
      const ComplexMatrix jp = raising_z(j);
      return SpinOperator(j, (jp - jp.adjoint()) / (2.0 * kI));
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown axis");
}

std::pair<SpinOperator, SpinOperator> ladder_about_x(SpinQuantum j) {
  SpinOperator up = raising_operator(j, Axis::kX);
  return {up, up.adjoint()};
}

Eigenbasis eigenbasis(SpinQuantum j, Axis axis) {
  const SpinOperator op = angular_momentum_operator(j, axis);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(op.matrix());
  Eigenbasis basis{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index k = 0; k < basis.vectors.cols(); ++k) fix_phase(basis.vectors.col(k));
  return basis;
}

SpinOperator raising_operator(SpinQuantum j, Axis axis) {
  const ComplexMatrix jx = angular_momentum_operator(j, Axis::kX).matrix();
  const ComplexMatrix jy = angular_momentum_operator(j, Axis::kY).matrix();
  const ComplexMatrix jz = angular_momentum_operator(j, Axis::kZ).matrix();
  switch (axis) {
    case Axis::kX: return SpinOperator(j, jy + kI * jz);
    case Axis::kY: return SpinOperator(j, jx - kI * jz);
    case Axis::kZ: return SpinOperator(j, raising_z(j));
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown axis");
}

Eigenbasis ladder_eigenbasis(SpinQuantum j, Axis axis) {
  Eigenbasis basis = eigenbasis(j, axis);
  const ComplexMatrix raise = raising_operator(j, axis).matrix();
  for (Eigen::Index k = basis.vectors.cols() - 2; k >= 0; --k) {
    const Complex element = basis.vectors.col(k + 1).dot(raise * basis.vectors.col(k));
    basis.vectors.col(k) *= std::conj(element) / std::abs(element);
  }
  return basis;
}

HermitianPropagator::HermitianPropagator(const SpinOperator& generator) : j_(generator.spin()) {
  if (!generator.hermitian()) {
    throw Error(ErrorCode::kNonHermitianGenerator,
                "generator deviates from its adjoint by more than 1e-12");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(generator.matrix());
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

SpinOperator HermitianPropagator::unitary(double scale) const {
  ComplexVector phases(eigenvalues_.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::exp(-kI * (scale * eigenvalues_(k)));
  }
  return SpinOperator(j_, eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint());
}

ComplexVector HermitianPropagator::apply(double scale, const ComplexVector& v) const {
  ComplexVector w = eigenvectors_.adjoint() * v;
  for (Eigen::Index k = 0; k < w.size(); ++k) w(k) *= std::exp(-kI * (scale * eigenvalues_(k)));
  return eigenvectors_ * w;
}

SpinOperator unitary_exp(const SpinOperator& generator, double scale) {
  if (scale == 0.0) {
    if (!generator.hermitian()) {
      throw Error(ErrorCode::kNonHermitianGenerator,
                  "generator deviates from its adjoint by more than 1e-12");
    }
    const int d = generator.spin().dim();
    return SpinOperator(generator.spin(), ComplexMatrix::Identity(d, d));
  }
  return HermitianPropagator(generator).unitary(scale);
}

DensityMatrix::DensityMatrix(SpinQuantum j, ComplexMatrix rho) : j_(j), rho_(std::move(rho)) {
  if (rho_.rows() != j_.dim() || rho_.cols() != j_.dim()) {
    throw Error(ErrorCode::kInvalidArgument, "density matrix dimension does not match 2J+1");
  }
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw Error(ErrorCode::kInvalidArgument, "density matrix is not Hermitian");
  }
  if (std::abs(rho_.trace() - 1.0) > 1e-10) {
    throw Error(ErrorCode::kInvalidArgument, "density matrix trace differs from 1");
  }
}

DensityMatrix DensityMatrix::pure(const SpinState& state) {
  return DensityMatrix(state.spin(), state.coeffs() * state.coeffs().adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(SpinQuantum j) {
  return DensityMatrix(j, ComplexMatrix::Identity(j.dim(), j.dim()) / double(j.dim()));
}

DensityMatrix DensityMatrix::mixture(std::span<const double> weights,
                                     std::span<const SpinState> states) {
  if (weights.size() != states.size() || states.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "mixture needs one weight per state");
  }
  const SpinQuantum j = states.front().spin();
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "mixture weights must be >= 0");
    total += w;
  }
  if (!(total > 0.0)) throw Error(ErrorCode::kInvalidArgument, "mixture weights sum to zero");
  ComplexMatrix rho = ComplexMatrix::Zero(j.dim(), j.dim());
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (states[k].spin() != j) {
      throw Error(ErrorCode::kInvalidArgument, "mixture components have different J");
    }
    rho += (weights[k] / total) * (states[k].coeffs() * states[k].coeffs().adjoint());
  }
  return DensityMatrix(j, 0.5 * (rho + rho.adjoint()));
}

SpinState rotate_about_z(const SpinState& state, double varphi) {
  const SpinQuantum j = state.spin();
  ComplexVector c = state.coeffs();
  for (int i = 0; i < j.dim(); ++i) c(i) *= std::exp(-kI * (j.mu(i) * varphi));
  return SpinState::normalized(j, std::move(c));
}

}  // namespace spinphase
