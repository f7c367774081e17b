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

#ifndef SPINPHASE_TWIST_H_
#define SPINPHASE_TWIST_H_

// Locating the two-axis counter-twisting times that minimize xi^2 (nu_ss) and
// zeta^2 (nu_ps), and fitting their growth with N.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spinphase/spin_algebra.h"
#include "spinphase/state_factory.h"

namespace spinphase {

enum class TwistMetric { kXiSq, kZetaSq };

std::string twist_metric_name(TwistMetric metric);

/// Both figures of merit sampled on a uniform nu grid.
struct TwistCurve {
  SpinQuantum spin;
  RealVector nu;
  RealVector xi_sq;
  RealVector zeta_sq;
};

/// n_samples points uniform on [0, nu_max]. Needs nu_max > 0, n_samples >= 16.
TwistCurve sweep(SpinQuantum j, double nu_max, int n_samples);

struct TwistOptimum {
  double nu_star;
  double value_at_star;
  TwistMetric metric;
  std::pair<double, double> bracket;
  int iterations;
};

struct TwistSearchOptions {
  int coarse_points = 200;
  double nu_min = 1e-4;
  /// Upper end of the scan is upper_factor * log2(N) / N.
  double upper_factor = 4.0;
  double tolerance = 1e-8;
};

/// Value of `metric` on U(nu)|coh>.
double twist_metric(const TwoAxisTwist& twist, TwistMetric metric, double nu);

/// Log-spaced coarse scan, then golden-section refinement of the first
/// (smallest-nu) local minimum. Throws NoInteriorMinimum if the scan never
/// turns upward.
TwistOptimum minimize(const TwoAxisTwist& twist, TwistMetric metric,
                      const TwistSearchOptions& options = {});
TwistOptimum minimize(SpinQuantum j, TwistMetric metric);

/// Least-squares fit of nu*(N) = c log2(N) / N.
struct ScalingFit {
  TwistMetric metric;
  double coefficient;
  std::vector<int> n_values;
  RealVector nu_star;
  RealVector residuals;  // nu* - c log2(N)/N
  /// Set for zeta^2: no scaling law is known for nu_ps, so the fit is only
  /// a descriptive summary of the table.
  bool exploratory;
};

/// Needs at least five distinct even N >= 10 (InsufficientData otherwise).
ScalingFit scaling_fit(std::span<const int> n_values, TwistMetric metric);

}  // namespace spinphase

#endif  // SPINPHASE_TWIST_H_
