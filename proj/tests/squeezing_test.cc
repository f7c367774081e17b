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

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "spinphase/errors.h"
#include "spinphase/state_factory.h"

namespace spinphase {
namespace {

using std::numbers::pi;

double xi_reference(const SpinState& s) {
  // N Var(J_y) / <J_x>^2 built from dense matrices.
  const SpinQuantum j = s.spin();
  const ComplexMatrix jx = angular_momentum_operator(j, Axis::kX).matrix();
  const ComplexMatrix jy = angular_momentum_operator(j, Axis::kY).matrix();
  const double mx = testing::expect_real(s, jx);
  const double my = testing::expect_real(s, jy);
  const double var = testing::expect_real(s, jy * jy) - my * my;
  return j.n_particles() * var / (mx * mx);
}

TEST(MeanSpinTest, MatchesDenseExpectation) {
  std::mt19937_64 rng(7);
  for (int n : {1, 2, 5, 16}) {
    const SpinQuantum j(n);
    for (int rep = 0; rep < 5; ++rep) {
      const SpinState s = testing::random_state(j, rng);
      const Eigen::Vector3d m = mean_spin(s);
      EXPECT_NEAR(m.x(), testing::expect_real(s, angular_momentum_operator(j, Axis::kX).matrix()), 1e-12);
      EXPECT_NEAR(m.y(), testing::expect_real(s, angular_momentum_operator(j, Axis::kY).matrix()), 1e-12);
      EXPECT_NEAR(m.z(), testing::expect_real(s, angular_momentum_operator(j, Axis::kZ).matrix()), 1e-12);
    }
  }
}

TEST(XiSquaredTest, CoherentIsOne) {
  for (int n = 1; n <= 200; n += 13) {
    EXPECT_NEAR(xi_squared(coherent_state(SpinQuantum(n))), 1.0, 1e-12) << n;
  }
}

TEST(XiSquaredTest, MatchesDenseReference) {
  const SpinQuantum j(18);
  const TwoAxisTwist twist(j);
  for (double nu : {0.0, 0.05, 0.2, 0.6}) {
    const SpinState s = twist.evolve(nu);
    EXPECT_NEAR(xi_squared(s), xi_reference(s), 1e-10);
  }
  EXPECT_NEAR(xi_squared(yurke_state(j, 0.3)), xi_reference(yurke_state(j, 0.3)), 1e-10);
}

TEST(XiSquaredTest, YurkeClosedForm) {
  for (int n = 4; n <= 60; n += 2) {
    for (double alpha : {0.05, 0.1, 0.3}) {
      const double expected = 1.0 / ((1.0 + n / 2.0) * std::pow(std::cos(alpha), 2));
      EXPECT_NEAR(xi_squared(yurke_state(SpinQuantum(n), alpha)), expected, 1e-10);
    }
  }
}

TEST(XiSquaredTest, ZeroMeanSpinThrows) {
  try {
    xi_squared(noon_state(SpinQuantum(6)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMeanSpinZero);
  }
}

TEST(XiSquaredTest, HeisenbergBoundOnRandomStates) {
  std::mt19937_64 rng(11);
  for (int n : {2, 5, 10, 30}) {
    const SpinQuantum j(n);
    for (int rep = 0; rep < 30; ++rep) {
      const SpinState s = testing::random_state(j, rng);
      if (mean_spin(s).norm() <= kMeanSpinZeroThreshold * j.j()) continue;
      EXPECT_GE(xi_squared_optimized(s), 1.0 / n - 1e-9);
    }
  }
}

TEST(XiSquaredTest, OptimizedNeverExceedsYVariance) {
  const TwoAxisTwist twist(SpinQuantum(20));
  for (double nu : {0.0, 0.1, 0.3}) {
    const SpinState s = twist.evolve(nu);
    EXPECT_LE(xi_squared_optimized(s), xi_squared(s) + 1e-12);
  }
  EXPECT_NEAR(xi_squared_optimized(coherent_state(SpinQuantum(20))), 1.0, 1e-12);
}

TEST(RamseyTest, CoherentGivesShotNoise) {
  const SpinState coh = coherent_state(SpinQuantum(10));
  EXPECT_NEAR(ramsey_precision(coh, 1, 0.0), std::sqrt(1.0 / 10.0), 1e-12);
  EXPECT_NEAR(ramsey_precision(coh, 4, 0.0), std::sqrt(1.0 / 40.0), 1e-12);
  EXPECT_NEAR(ramsey_precision(coh, 1, 0.3), std::sqrt(1.0 / 10.0) / std::cos(0.3), 1e-12);
}

TEST(RamseyTest, Validation) {
  const SpinState coh = coherent_state(SpinQuantum(10));
  try {
    ramsey_precision(coh, 1, pi / 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDivergentAtQuadrature);
  }
  EXPECT_THROW(ramsey_precision(coh, 0, 0.0), Error);
}

TEST(SharpnessTest, NoonVanishesExactly) {
  for (int n = 2; n <= 100; ++n) {
    const SpinState s = noon_state(SpinQuantum(n));
    EXPECT_EQ(sharpness(s).value, Complex(0.0));
    EXPECT_NEAR(zeta_squared(s), 2.0 * n, 1e-12);
  }
}

TEST(SharpnessTest, CoherentClosedFormAtN2) {
  EXPECT_NEAR(zeta_squared(coherent_state(SpinQuantum(2))), 4.0 * (1.0 - 1.0 / std::sqrt(2.0)),
              1e-12);
}

TEST(SharpnessTest, CoherentMatchesBinomialOracle) {
  for (int n = 1; n <= 100; ++n) {
    // S = sum_k sqrt(p_k p_{k+1}) with binomial p_k
    double s = 0.0;
    for (int k = 0; k < n; ++k) {
      const double log_pk = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
      const double log_pk1 = std::lgamma(n + 1.0) - std::lgamma(k + 2.0) - std::lgamma(n - k + 0.0);
      s += std::exp(0.5 * (log_pk + log_pk1) - n * std::log(2.0));
    }
    EXPECT_NEAR(sharpness(coherent_state(SpinQuantum(n))).real(), s, 1e-13) << n;
  }
}

TEST(SharpnessTest, CoherentAboveOneForFewParticlesThenNearOne) {
  EXPECT_NEAR(zeta_squared(coherent_state(SpinQuantum(1))), 1.0, 1e-14);
  for (int n = 2; n <= 7; ++n) EXPECT_GT(zeta_squared(coherent_state(SpinQuantum(n))), 1.0) << n;
  // Large-N approach is 1 - 1/(4N) + O(N^-2), i.e. from below.
  for (int n : {20, 50, 100, 200}) {
    const double z = zeta_squared(coherent_state(SpinQuantum(n)));
    EXPECT_NEAR(z, 1.0 - 0.25 / n, 2.0 / (n * n)) << n;
  }
}

TEST(SharpnessTest, DensityMatrixAgreesWithPureState) {
  std::mt19937_64 rng(3);
  const SpinQuantum j(7);
  for (int rep = 0; rep < 10; ++rep) {
    const SpinState s = testing::random_state(j, rng);
    EXPECT_LT(std::abs(sharpness(s).value - sharpness(DensityMatrix::pure(s)).value), 1e-14);
    EXPECT_NEAR(zeta_squared(s), zeta_squared(DensityMatrix::pure(s)), 1e-12);
  }
  EXPECT_EQ(sharpness(DensityMatrix::maximally_mixed(j)).value, Complex(0.0));
}

TEST(SharpnessTest, RotationMultipliesByPhase) {
  std::mt19937_64 rng(5);
  const SpinQuantum j(9);
  const SpinState s = testing::random_state(j, rng);
  const double varphi = 0.7;
  const Complex expected = sharpness(s).value * std::exp(Complex(0.0, -varphi));
  EXPECT_LT(std::abs(sharpness(rotate_about_z(s, varphi)).value - expected), 1e-13);
}

TEST(SharpnessTest, RelativeToCoherentVariant) {
  std::mt19937_64 rng(9);
  for (int n : {2, 6, 30}) {
    const SpinQuantum j(n);
    const double coh = zeta_squared(coherent_state(j));
    EXPECT_NEAR(zeta_squared_rc(coherent_state(j)), 1.0, 1e-12);
    for (int rep = 0; rep < 5; ++rep) {
      const SpinState s = testing::random_state(j, rng);
      EXPECT_NEAR(zeta_squared_rc(s) * coh, zeta_squared(s), 1e-10);
    }
  }
}

TEST(SharpnessTest, MixturesOfCoherentRotationsStayAboveOne) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n : {4, 10, 20}) {
    const SpinQuantum j(n);
    const SpinState coh = coherent_state(j);
    for (int rep = 0; rep < 30; ++rep) {
      std::vector<SpinState> states;
      std::vector<double> weights;
      for (int k = 0; k < 3; ++k) {
        states.push_back(rotate_about_z(coh, (u(rng) - 0.5) * 0.5));
        weights.push_back(u(rng) + 0.01);
      }
      const DensityMatrix rho = DensityMatrix::mixture(weights, states);
      EXPECT_GT(zeta_squared(rho), 1.0);
    }
  }
}

TEST(OptimalPhaseTest, ScaledZetaApproachesPiSquared) {
  double prev = 0.0;
  for (int n = 10; n <= 100; n += 10) {
    const double scaled = n * zeta_squared(optimal_phase_state(SpinQuantum(n)));
    EXPECT_GT(scaled, prev);
    EXPECT_LT(scaled, pi * pi);
    prev = scaled;
  }
  EXPECT_GE(prev, 9.0);
}

TEST(PhaseDistributionTest, MatchesDirectSum) {
  std::mt19937_64 rng(13);
  for (int n : {1, 4, 11}) {
    const SpinState s = testing::random_state(SpinQuantum(n), rng);
    const PhaseDistribution d = phase_distribution(s, 0.4, 64);
    for (int k = 0; k < d.phi_grid.size(); ++k) {
      EXPECT_NEAR(d.density(k), testing::direct_phase_density(s, 0.4, d.phi_grid(k)), 1e-12);
    }
    EXPECT_NEAR(d.density_at(1.234), testing::direct_phase_density(s, 0.4, 1.234), 1e-12);
  }
}

TEST(PhaseDistributionTest, NormalizedForAllKinds) {
  for (int n : {2, 10, 40}) {
    const SpinQuantum j(n);
    for (const SpinState& s : {coherent_state(j), yurke_state(j, 0.1), noon_state(j),
                               optimal_phase_state(j), evolve_2act(j, 0.2)}) {
      EXPECT_NEAR(phase_distribution(s).integral(), 1.0, 1e-10);
    }
  }
}

TEST(PhaseDistributionTest, GridLayoutAndValidation) {
  const SpinState s = coherent_state(SpinQuantum(4));
  const PhaseDistribution d = phase_distribution(s, 0.0, 100);
  ASSERT_EQ(d.phi_grid.size(), 100);
  EXPECT_DOUBLE_EQ(d.phi_grid(0), -pi);
  EXPECT_NEAR(d.phi_grid(99), pi - 2 * pi / 100, 1e-14);
  try {
    phase_distribution(s, 0.0, min_phase_points(s.spin()) - 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGridTooCoarse);
  }
  EXPECT_NO_THROW(phase_distribution(s, 0.0, min_phase_points(s.spin())));
}

TEST(PhaseDistributionTest, CovariantUnderShift) {
  std::mt19937_64 rng(17);
  const SpinState s = testing::random_state(SpinQuantum(8), rng);
  const double shift = 0.9;
  const PhaseDistribution a = phase_distribution(s, 0.0);
  const PhaseDistribution b = phase_distribution(s, shift);
  for (double phi : {-2.0, -0.3, 0.0, 1.1, 2.9}) {
    EXPECT_NEAR(b.density_at(phi + shift), a.density_at(phi), 1e-12);
  }
  const PhaseDistribution rotated = phase_distribution(rotate_about_z(s, shift), 0.0);
  for (double phi : {-2.0, 0.5, 2.2}) {
    EXPECT_NEAR(rotated.density_at(phi + shift), a.density_at(phi), 1e-12);
  }
}

TEST(PhaseDistributionTest, SharpnessFromDistribution) {
  std::mt19937_64 rng(19);
  const SpinState s = testing::random_state(SpinQuantum(10), rng);
  const PhaseDistribution d = phase_distribution(s, 0.0, 4096);
  Complex integral{0.0};
  const double h = 2 * pi / d.phi_grid.size();
  for (int k = 0; k < d.phi_grid.size(); ++k) {
    integral += d.density(k) * std::exp(Complex(0.0, -d.phi_grid(k))) * h;
  }
  EXPECT_LT(std::abs(integral - sharpness(s).value), 1e-10);
  EXPECT_LT(std::abs(d.sharpness() - sharpness(s).value), 1e-12);
}

TEST(PhaseDistributionTest, NoonHasPeriodTwoPiOverN) {
  for (int n : {2, 5, 12, 40}) {
    const PhaseDistribution d = phase_distribution(noon_state(SpinQuantum(n)));
    for (double phi : {-2.5, -1.0, 0.1, 0.77, 2.0}) {
      EXPECT_NEAR(d.density_at(phi + 2 * pi / n), d.density_at(phi), 1e-12);
    }
  }
}

TEST(PhaseDistributionTest, YurkeIsBimodal) {
  for (double alpha : {0.05, 0.3}) {
    const PhaseDistribution d = phase_distribution(yurke_state(SpinQuantum(20), alpha));
    EXPECT_GT(d.density_at(0.0), d.density_at(pi / 2));
    EXPECT_GT(d.density_at(pi), d.density_at(pi / 2));
    EXPECT_GT(d.density_at(0.0), d.density_at(pi));
  }
}

TEST(PhaseDistributionTest, YurkePeaksEqualiseAsAlphaVanishes) {
  // The asymmetry comes from the cross term linear in alpha.
  double prev = std::numeric_limits<double>::infinity();
  for (double alpha : {0.1, 0.01, 1e-3, 1e-5}) {
    const PhaseDistribution d = phase_distribution(yurke_state(SpinQuantum(20), alpha));
    const double excess = d.density_at(0.0) / d.density_at(pi) - 1.0;
    EXPECT_GT(excess, 0.0);
    EXPECT_LT(excess, prev);
    EXPECT_LT(excess, 6.0 * alpha);
    prev = excess;
  }
}

TEST(WrappedVarianceTest, DirectMatchesBruteForce) {
  std::mt19937_64 rng(23);
  for (int n : {2, 6, 15}) {
    const SpinState s = testing::random_state(SpinQuantum(n), rng);
    const PhaseDistribution d = phase_distribution(s, 0.0);
    const WrappedVariance v = variance_wrapped(d);
    const double brute = testing::brute_force_wrapped_variance(
        [&](double phi) { return testing::direct_phase_density(s, 0.0, phi); }, v.window_origin);
    EXPECT_NEAR(v.direct, brute, 1e-6);
  }
}

TEST(WrappedVarianceTest, ApproxCloseForOptimalState) {
  const PhaseDistribution d = phase_distribution(optimal_phase_state(SpinQuantum(40)));
  const WrappedVariance v = variance_wrapped(d);
  EXPECT_NEAR(v.direct / v.approx, 1.0, 0.05);
  EXPECT_NEAR(v.approx, 2.0 * (1.0 - std::cos(pi / 42)), 1e-12);
}

TEST(WrappedVarianceTest, NoonHolevoIsInfinite) {
  const WrappedVariance v = variance_wrapped(phase_distribution(noon_state(SpinQuantum(4))));
  EXPECT_TRUE(std::isinf(v.holevo));
  EXPECT_NEAR(v.approx, 2.0, 1e-14);
}

TEST(WrappedVarianceTest, UniformDistributionVariance) {
  // Maximal phase spread from a single mu component: P is flat, variance pi^2/3.
  ComplexVector c = ComplexVector::Zero(5);
  c(2) = 1.0;
  const WrappedVariance v = variance_wrapped(phase_distribution(SpinState(SpinQuantum(4), c)));
  EXPECT_NEAR(v.direct, pi * pi / 3.0, 1e-9);
}

TEST(BasisCoefficientsTest, CoherentInZBasisIsBinomial) {
  const SpinQuantum j(6);
  const BasisCoefficients b = basis_coefficients(coherent_state(j), Axis::kZ);
  ASSERT_EQ(b.mu.size(), 7);
  EXPECT_DOUBLE_EQ(b.mu(0), -3.0);
  for (int i = 0; i < 7; ++i) {
    const double binom = std::tgamma(7.0) / (std::tgamma(i + 1.0) * std::tgamma(7.0 - i));
    EXPECT_NEAR(b.coeff(i), std::sqrt(binom / 64.0), 1e-12);
  }
  EXPECT_LT(b.residual_imag, 1e-12);
}

TEST(BasisCoefficientsTest, CoherentInXBasisIsTopState) {
  const BasisCoefficients b = basis_coefficients(coherent_state(SpinQuantum(9)), Axis::kX);
  for (int i = 0; i < 9; ++i) EXPECT_NEAR(b.coeff(i), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(b.coeff(9)), 1.0, 1e-12);
}

TEST(BasisCoefficientsTest, YurkeInYBasisHasThreeComponents) {
  const double alpha = 0.3;
  const BasisCoefficients b = basis_coefficients(yurke_state(SpinQuantum(10), alpha), Axis::kY);
  EXPECT_NEAR(std::abs(b.coeff(5)), std::cos(alpha), 1e-12);
  EXPECT_NEAR(std::abs(b.coeff(4)), std::sin(alpha) / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(std::abs(b.coeff(6)), std::sin(alpha) / std::sqrt(2.0), 1e-12);
  EXPECT_LT(b.residual_imag, 1e-12);
}

TEST(BasisCoefficientsTest, NoonXAndYAgreeAndVanishForOddMu) {
  for (int n : {4, 8, 20, 100}) {
    const SpinQuantum j(n);
    const BasisCoefficients bx = basis_coefficients(noon_state(j), Axis::kX);
    const BasisCoefficients by = basis_coefficients(noon_state(j), Axis::kY);
    EXPECT_LT(bx.residual_imag, 1e-10);
    EXPECT_LT(by.residual_imag, 1e-10);
    for (int i = 0; i < j.dim(); ++i) {
      EXPECT_NEAR(bx.coeff(i), by.coeff(i), 1e-12) << n << ' ' << i;
      if (int(std::lround(j.mu(i))) % 2 != 0) EXPECT_NEAR(bx.coeff(i), 0.0, 1e-12);
    }
  }
}

TEST(BasisCoefficientsTest, StandardStatesAreReal) {
  for (int n : {4, 10, 20, 100}) {
    const SpinQuantum j(n);
    for (const SpinState& s : {coherent_state(j), yurke_state(j, 0.1), noon_state(j),
                               optimal_phase_state(j), evolve_2act(j, 0.1)}) {
      for (Axis axis : {Axis::kX, Axis::kY, Axis::kZ}) {
        EXPECT_LT(basis_coefficients(s, axis).residual_imag, 1e-10) << n << ' ' << axis_name(axis);
      }
    }
  }
}

TEST(BasisCoefficientsTest, YurkeZCoefficientsAreEvenAsAlphaVanishes) {
  const SpinQuantum j(20);
  const BasisCoefficients b = basis_coefficients(yurke_state(j, 1e-8), Axis::kZ);
  for (int i = 0; i < j.dim(); ++i) {
    if (int(std::lround(j.mu(i))) % 2 != 0) EXPECT_NEAR(b.coeff(i), 0.0, 1e-7);
  }
}

TEST(SqueezingReportTest, NoonHasNoXi) {
  const SqueezingReport r = squeezing_report(noon_state(SpinQuantum(10)));
  EXPECT_FALSE(r.xi_sq.has_value());
  EXPECT_NEAR(r.zeta_sq, 20.0, 1e-12);
  EXPECT_TRUE(std::isinf(r.holevo_variance));
}

TEST(SqueezingReportTest, OptimalStateFields) {
  const SqueezingReport r = squeezing_report(optimal_phase_state(SpinQuantum(10)));
  ASSERT_TRUE(r.xi_sq.has_value());
  EXPECT_NEAR(r.sharpness_re, std::cos(pi / 12), 1e-12);
  EXPECT_NEAR(r.sharpness_mod, std::cos(pi / 12), 1e-12);
  EXPECT_NEAR(r.zeta_sq, 0.681483, 1e-6);
  EXPECT_NEAR(r.variance_approx, 2.0 * (1 - std::cos(pi / 12)), 1e-12);
}

}  // namespace
}  // namespace spinphase
