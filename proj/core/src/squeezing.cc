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

#include "spinphase/squeezing.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "spinphase/errors.h"
#include "spinphase/state_factory.h"

namespace spinphase {
namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// First and symmetrized second moments of (J_x, J_y, J_z), computed directly
// from the ladder matrix elements a_i = <mu_i + 1|J_+|mu_i>.
struct Moments {
  Eigen::Vector3d mean;
  Eigen::Matrix3d second;  // (1/2)<{J_a, J_b}>
};

Moments moments(const SpinState& state) {
  const SpinQuantum j = state.spin();
  const ComplexVector& c = state.coeffs();
  const int d = j.dim();
  const double jj = j.j() * (j.j() + 1.0);
  auto ladder = [&](int i) {
    const double mu = j.mu(i);
    return std::sqrt(std::max(0.0, jj - mu * (mu + 1.0)));
  };

  Complex raise{0.0};      // <J_+>
  Complex raise_sq{0.0};   // <J_+^2>
  Complex raise_z{0.0};    // <J_+ J_z + J_z J_+>
  double jz = 0.0;
  double jz_sq = 0.0;
  for (int i = 0; i < d; ++i) {
    const double mu = j.mu(i);
    const double p = std::norm(c(i));
    jz += mu * p;
    jz_sq += mu * mu * p;
    if (i + 1 < d) {
      const double a = ladder(i);
      const Complex t = std::conj(c(i + 1)) * a * c(i);
      raise += t;
      raise_z += t * (2.0 * mu + 1.0);
    }
    if (i + 2 < d) raise_sq += std::conj(c(i + 2)) * ladder(i + 1) * ladder(i) * c(i);
  }
  // J_+ J_- + J_- J_+ = 2 (J^2 - J_z^2)
  const double anti = 2.0 * (jj - jz_sq);

  Moments m;
  m.mean = {raise.real(), raise.imag(), jz};
  m.second(0, 0) = (2.0 * raise_sq.real() + anti) / 4.0;
  m.second(1, 1) = (-2.0 * raise_sq.real() + anti) / 4.0;
  m.second(2, 2) = jz_sq;
  m.second(0, 1) = m.second(1, 0) = raise_sq.imag() / 2.0;
  m.second(0, 2) = m.second(2, 0) = raise_z.real() / 2.0;
  m.second(1, 2) = m.second(2, 1) = raise_z.imag() / 2.0;
  return m;
}

Eigen::Matrix3d covariance(const Moments& m) { return m.second - m.mean * m.mean.transpose(); }

void require_mean_spin(const SpinState& state, double length) {
  if (!(length > kMeanSpinZeroThreshold * state.spin().j())) {
    throw Error(ErrorCode::kMeanSpinZero,
                "mean spin vanishes (|<J>| = " + std::to_string(length) + "), xi undefined");
  }
}

double coherent_sharpness(SpinQuantum j) { return sharpness(coherent_state(j)).real(); }

}  // namespace

Eigen::Vector3d mean_spin(const SpinState& state) { return moments(state).mean; }

double xi_squared(const SpinState& state) {
  const Moments m = moments(state);
  const double len_sq = m.mean.squaredNorm();
  require_mean_spin(state, std::sqrt(len_sq));
  const double var_y = covariance(m)(1, 1);
  return state.spin().two_j() * var_y / len_sq;
}

double xi_squared_optimized(const SpinState& state) {
  const Moments m = moments(state);
  const double len = m.mean.norm();
  require_mean_spin(state, len);
  const Eigen::Vector3d axis = m.mean / len;
  // orthonormal pair spanning the plane perpendicular to <J>
  Eigen::Vector3d seed = std::abs(axis.x()) < 0.9 ? Eigen::Vector3d::UnitX()
                                                   : Eigen::Vector3d::UnitY();
  const Eigen::Vector3d e1 = (seed - seed.dot(axis) * axis).normalized();
  const Eigen::Vector3d e2 = axis.cross(e1);
  Eigen::Matrix<double, 3, 2> basis;
  basis << e1, e2;
  const Eigen::Matrix2d projected = basis.transpose() * covariance(m) * basis;
  const double min_var = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(projected).eigenvalues()(0);
  return state.spin().two_j() * min_var / (len * len);
}

double ramsey_precision(const SpinState& state, int measurements, double varphi) {
  if (measurements < 1) {
    throw Error(ErrorCode::kInvalidArgument, "measurement count must be positive");
  }
  const double cos_phi = std::cos(varphi);
  if (std::abs(cos_phi) < 1e-12) {
    throw Error(ErrorCode::kDivergentAtQuadrature, "cos(varphi) vanishes; precision diverges");
  }
  const Moments m = moments(state);
  const double len = m.mean.norm();
  if (!(len > 0.0)) throw Error(ErrorCode::kMeanSpinZero, "mean spin vanishes");
  const double delta_jy = std::sqrt(std::max(0.0, covariance(m)(1, 1)));
  return delta_jy / (len * std::abs(cos_phi) * std::sqrt(double(measurements)));
}

Sharpness sharpness(const SpinState& state) {
  const ComplexVector& c = state.coeffs();
  Complex s{0.0};
  for (Eigen::Index i = 0; i + 1 < c.size(); ++i) s += c(i + 1) * std::conj(c(i));
  return {s};
}

Sharpness sharpness(const DensityMatrix& rho) {
  const ComplexMatrix& m = rho.matrix();
  Complex s{0.0};
  for (Eigen::Index i = 0; i + 1 < m.rows(); ++i) s += m(i + 1, i);
  return {s};
}

double zeta_squared(const SpinState& state) {
  return 2.0 * state.spin().two_j() * (1.0 - sharpness(state).real());
}

double zeta_squared(const DensityMatrix& rho) {
  return 2.0 * rho.spin().two_j() * (1.0 - sharpness(rho).real());
}

double zeta_squared_rc(const SpinState& state) {
  return (1.0 - sharpness(state).real()) / (1.0 - coherent_sharpness(state.spin()));
}

double PhaseDistribution::density_at(double phi) const {
  double sum = correlation(0).real();
  const Complex step = std::exp(kI * phi);
  Complex rot = step;
  for (Eigen::Index k = 1; k < correlation.size(); ++k) {
    sum += 2.0 * (correlation(k) * rot).real();
    rot *= step;
  }
  return sum / kTwoPi;
}

double PhaseDistribution::integral() const {
  return density.sum() * kTwoPi / double(density.size());
}

Complex PhaseDistribution::sharpness() const {
  return correlation.size() > 1 ? correlation(1) * std::exp(kI * varphi) : Complex{0.0};
}

int min_phase_points(SpinQuantum j) { return 2 * j.two_j() + 3; }

int default_phase_points(SpinQuantum j) { return std::max(512, 4 * j.two_j() + 1); }

PhaseDistribution phase_distribution(const SpinState& state, double varphi, int n_points) {
  const SpinQuantum j = state.spin();
  if (n_points < min_phase_points(j)) {
    throw Error(ErrorCode::kGridTooCoarse,
                "phase grid needs at least 4J+3 = " + std::to_string(min_phase_points(j)) +
                    " points, got " + std::to_string(n_points));
  }
  const ComplexVector c = rotate_about_z(state, varphi).coeffs();
  const int d = j.dim();
  ComplexVector corr(d);
  for (int k = 0; k < d; ++k) {
    Complex a{0.0};
    for (int i = 0; i + k < d; ++i) a += c(i + k) * std::conj(c(i));
    corr(k) = a;
  }
  PhaseDistribution dist{j, varphi, RealVector(n_points), RealVector(n_points), std::move(corr)};
  const double h = kTwoPi / n_points;
  for (int n = 0; n < n_points; ++n) {
    dist.phi_grid(n) = -std::numbers::pi + n * h;
    dist.density(n) = std::max(0.0, dist.density_at(dist.phi_grid(n)));
  }
  return dist;
}

PhaseDistribution phase_distribution(const SpinState& state, double varphi) {
  return phase_distribution(state, varphi, default_phase_points(state.spin()));
}

WrappedVariance variance_wrapped(const PhaseDistribution& dist) {
  Eigen::Index peak = 0;
  dist.density.maxCoeff(&peak);
  const double centre = dist.phi_grid(peak);

  // Moments of t = phi - centre over t in [-pi, pi), term by term:
  //   int t e^{ikt} = -2 pi i (-1)^k / k,   int t^2 e^{ikt} = 4 pi (-1)^k / k^2.
  const double a0 = dist.correlation(0).real();
  double m1 = 0.0;
  double m2 = a0 * std::numbers::pi * std::numbers::pi / 3.0;
  for (Eigen::Index k = 1; k < dist.correlation.size(); ++k) {
    const Complex b = dist.correlation(k) * std::exp(kI * (double(k) * centre));
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    m1 += 2.0 * sign * b.imag() / double(k);
    m2 += 4.0 * sign * b.real() / double(k * k);
  }
  const Complex s = dist.sharpness();
  const double mod = std::abs(s);
  WrappedVariance out;
  out.direct = m2 - m1 * m1;
  out.approx = 2.0 * (1.0 - s.real());
  out.holevo = mod > 0.0 ? 1.0 / (mod * mod) - 1.0 : std::numeric_limits<double>::infinity();
  out.window_origin = centre - std::numbers::pi;
  return out;
}

BasisCoefficients basis_coefficients(const SpinState& state, Axis axis) {
  const SpinQuantum j = state.spin();
  const Eigenbasis basis = ladder_eigenbasis(j, axis);
  ComplexVector amps = basis.vectors.adjoint() * state.coeffs();

  const Complex total = amps.sum();
  Complex phase{1.0};
  if (std::abs(total) > 1e-12) {
    phase = std::conj(total) / std::abs(total);
  } else {
    Eigen::Index k = 0;
    amps.cwiseAbs().maxCoeff(&k);
    phase = std::conj(amps(k)) / std::abs(amps(k));
  }
  amps *= phase;

  BasisCoefficients out{axis, RealVector(j.dim()), amps.real(), amps.imag().cwiseAbs().maxCoeff()};
  for (int i = 0; i < j.dim(); ++i) out.mu(i) = j.mu(i);
  return out;
}

SqueezingReport squeezing_report(const SpinState& state) {
  SqueezingReport r;
  r.mean_spin = mean_spin(state);
  if (r.mean_spin.norm() > kMeanSpinZeroThreshold * state.spin().j()) {
    r.xi_sq = xi_squared(state);
    r.xi_sq_optimized = xi_squared_optimized(state);
  }
  const Sharpness s = sharpness(state);
  r.sharpness_re = s.real();
  r.sharpness_mod = s.modulus();
  r.zeta_sq = 2.0 * state.spin().two_j() * (1.0 - s.real());
  r.zeta_sq_rc = (1.0 - s.real()) / (1.0 - coherent_sharpness(state.spin()));
  r.variance_approx = 2.0 * (1.0 - s.real());
  r.holevo_variance = r.sharpness_mod > 0.0 ? 1.0 / (r.sharpness_mod * r.sharpness_mod) - 1.0
                                            : std::numeric_limits<double>::infinity();
  return r;
}

}  // namespace spinphase
