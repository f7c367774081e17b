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

#include "spinphase/twist.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "spinphase/errors.h"
#include "spinphase/parallel.h"
#include "spinphase/squeezing.h"

namespace spinphase {
namespace {

constexpr double kInvPhi = 0.6180339887498948482;  // (sqrt5 - 1) / 2

}  // namespace

std::string twist_metric_name(TwistMetric metric) {
  return metric == TwistMetric::kXiSq ? "xi_sq" : "zeta_sq";
}

double twist_metric(const TwoAxisTwist& twist, TwistMetric metric, double nu) {
  const SpinState state = twist.evolve(nu);
  return metric == TwistMetric::kXiSq ? xi_squared(state) : zeta_squared(state);
}

TwistCurve sweep(SpinQuantum j, double nu_max, int n_samples) {
  if (!(nu_max > 0.0)) throw Error(ErrorCode::kInvalidArgument, "nu_max must be positive");
  if (n_samples < 16) throw Error(ErrorCode::kInvalidArgument, "sweep needs >= 16 samples");
  const TwoAxisTwist twist(j);
  TwistCurve curve{j, RealVector::LinSpaced(n_samples, 0.0, nu_max), RealVector(n_samples),
                   RealVector(n_samples)};
  parallel_for(n_samples, [&](std::size_t i) {
    const SpinState state = twist.evolve(curve.nu(i));
    curve.xi_sq(i) = xi_squared(state);
    curve.zeta_sq(i) = zeta_squared(state);
  });
  return curve;
}

TwistOptimum minimize(const TwoAxisTwist& twist, TwistMetric metric,
                      const TwistSearchOptions& options) {
  const double n = twist.spin().n_particles();
  const double nu_max = options.upper_factor * std::log2(std::max(n, 2.0)) / n;
  const int count = options.coarse_points;
  if (count < 3 || !(nu_max > options.nu_min)) {
    throw Error(ErrorCode::kInvalidArgument, "degenerate coarse scan for twist minimization");
  }

  RealVector grid(count);
  const double log_lo = std::log(options.nu_min);
  const double log_hi = std::log(nu_max);
  for (int i = 0; i < count; ++i) grid(i) = std::exp(log_lo + (log_hi - log_lo) * i / (count - 1));
  RealVector values(count);
  parallel_for(count, [&](std::size_t i) { values(i) = twist_metric(twist, metric, grid(i)); });

  int first = -1;
  for (int i = 1; i + 1 < count; ++i) {
    if (values(i) < values(i - 1) && values(i) <= values(i + 1)) {
      first = i;
      break;
    }
  }
  if (first < 0) {
    throw Error(ErrorCode::kNoInteriorMinimum,
                twist_metric_name(metric) + " is monotone on [" + std::to_string(options.nu_min) +
                    ", " + std::to_string(nu_max) + "] for N=" +
                    std::to_string(twist.spin().n_particles()));
  }

  TwistOptimum best{grid(first), values(first), metric, {grid(first - 1), grid(first + 1)}, 0};
  double a = grid(first - 1);
  double b = grid(first + 1);
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = twist_metric(twist, metric, x1);
  double f2 = twist_metric(twist, metric, x2);
  auto consider = [&best](double x, double f) {
    if (f < best.value_at_star) {
      best.nu_star = x;
      best.value_at_star = f;
    }
  };
  consider(x1, f1);
  consider(x2, f2);
  while (b - a > options.tolerance) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = twist_metric(twist, metric, x1);
      consider(x1, f1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = twist_metric(twist, metric, x2);
      consider(x2, f2);
    }
    ++best.iterations;
  }
  return best;
}

TwistOptimum minimize(SpinQuantum j, TwistMetric metric) {
  return minimize(TwoAxisTwist(j), metric);
}

ScalingFit scaling_fit(std::span<const int> n_values, TwistMetric metric) {
  std::set<int> distinct(n_values.begin(), n_values.end());
  const bool valid = std::all_of(distinct.begin(), distinct.end(),
                                 [](int n) { return n >= 10 && n % 2 == 0; });
  if (!valid || distinct.size() < 5) {
    throw Error(ErrorCode::kInsufficientData,
                "scaling fit needs at least five distinct even N >= 10");
  }
  ScalingFit fit{metric, 0.0, std::vector<int>(distinct.begin(), distinct.end()),
                 RealVector(int(distinct.size())), RealVector(int(distinct.size())),
                 metric == TwistMetric::kZetaSq};
  parallel_for(fit.n_values.size(), [&](std::size_t i) {
    fit.nu_star(i) = minimize(SpinQuantum(fit.n_values[i]), metric).nu_star;
  });

  RealVector x(fit.nu_star.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double n = fit.n_values[i];
    x(i) = std::log2(n) / n;
  }
  fit.coefficient = x.dot(fit.nu_star) / x.squaredNorm();
  fit.residuals = fit.nu_star - fit.coefficient * x;
  return fit;
}

SpinState make_state(const StateKind& kind, SpinQuantum j) {
  switch (kind.tag) {
    case StateKind::Tag::kCoherent: return coherent_state(j);
    case StateKind::Tag::kYurke: return yurke_state(j, kind.alpha);
    case StateKind::Tag::kNoon: return noon_state(j);
    case StateKind::Tag::kOptimalPhase: return optimal_phase_state(j);
    case StateKind::Tag::kTwoAxisEvolved: return evolve_2act(j, kind.nu);
    case StateKind::Tag::kSpinSqueezed2act:
    case StateKind::Tag::kPhaseSqueezed2act: {
      const TwoAxisTwist twist(j);
      const TwistMetric metric = kind.tag == StateKind::Tag::kSpinSqueezed2act
                                     ? TwistMetric::kXiSq
                                     : TwistMetric::kZetaSq;
      return twist.evolve(minimize(twist, metric).nu_star);
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown state kind");
}

}  // namespace spinphase
