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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oracles.h"
#include "spinphase/squeezing.h"
#include "spinphase/state_factory.h"
#include "spinphase/twist.h"
#include "spinphase/wigner.h"

namespace spinphase {
namespace {

using std::numbers::pi;

// At N = 2 both twist metrics are monotone over the scan window.
constexpr int kSmallestPhaseSqueezedN = 3;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

Outcome optimal_sharpness() {
  double worst = 0.0;
  for (int n = 2; n <= 60; ++n) {
    const double s = sharpness(optimal_phase_state(SpinQuantum(n))).real();
    worst = std::max(worst, std::abs(s - std::cos(pi / (n + 2))));
  }
  return {worst <= 1e-9, "max |S - cos(pi/(N+2))| = " + num(worst) + " over N=2..60"};
}

Outcome noon_values() {
  double worst = 0.0;
  bool exact_zero = true;
  for (int n = 2; n <= 100; ++n) {
    const SpinState s = noon_state(SpinQuantum(n));
    exact_zero = exact_zero && sharpness(s).value == Complex(0.0);
    worst = std::max(worst, std::abs(zeta_squared(s) - 2.0 * n));
  }
  return {worst <= 1e-12 && exact_zero,
          "max |zeta^2 - 2N| = " + num(worst) + ", S == 0 exactly: " + (exact_zero ? "yes" : "no")};
}

Outcome coherent_asymptote() {
  const double z2 = zeta_squared(coherent_state(SpinQuantum(2)));
  const double err2 = std::abs(z2 - 4.0 * (1.0 - 1.0 / std::sqrt(2.0)));
  bool monotone = true;
  bool above_one = true;
  double prev = std::numeric_limits<double>::infinity();
  double last = 0.0;
  for (int n = 1; n <= 100; ++n) {
    last = zeta_squared(coherent_state(SpinQuantum(n)));
    monotone = monotone && last < prev;
    above_one = above_one && last > 1.0;
    prev = last;
  }
  const bool ok = err2 <= 1e-12 && monotone && above_one && std::abs(last - 1.0) < 0.05;
  return {ok, "|zeta^2(2) - 4(1-1/sqrt2)| = " + num(err2) + ", zeta^2(100) = " + num(last) +
                  ", monotone: " + (monotone ? "yes" : "no") + ", all > 1: " +
                  (above_one ? "yes" : "no")};
}

Outcome optimal_scaling() {
  bool increasing = true;
  bool below = true;
  double prev = 0.0;
  for (int n = 2; n <= 100; ++n) {
    const double v = n * zeta_squared(optimal_phase_state(SpinQuantum(n)));
    increasing = increasing && v > prev;
    below = below && v <= pi * pi;
    prev = v;
  }
  const bool ok = increasing && below && prev >= 9.0;
  return {ok, "N zeta^2_opt(100) = " + num(prev) + ", increasing: " + (increasing ? "yes" : "no") +
                  ", <= pi^2: " + (below ? "yes" : "no")};
}

Outcome yurke_oracle() {
  double worst = 0.0;
  for (double alpha : {0.05, 0.1, 0.3}) {
    for (int n = 4; n <= 60; n += 2) {
      const double expected = 1.0 / ((1.0 + n / 2.0) * std::pow(std::cos(alpha), 2));
      worst = std::max(worst, std::abs(xi_squared(yurke_state(SpinQuantum(n), alpha)) - expected));
    }
  }
  return {worst <= 1e-10, "max |xi^2 - (1+N/2)^-1 cos^-2 alpha| = " + num(worst)};
}

Outcome coherent_xi() {
  double worst = 0.0;
  for (int n = 1; n <= 200; ++n) {
    worst = std::max(worst, std::abs(xi_squared(coherent_state(SpinQuantum(n))) - 1.0));
  }
  return {worst <= 1e-12, "max |xi^2 - 1| = " + num(worst) + " over N=1..200"};
}

Outcome heisenberg_bound() {
  double worst = std::numeric_limits<double>::infinity();
  int samples = 0;
  auto check = [&](const SpinState& s) {
    const double n = s.spin().n_particles();
    for (double v : {xi_squared(s), xi_squared_optimized(s)}) {
      worst = std::min(worst, v - 1.0 / n);
      ++samples;
    }
  };
  for (int n : {2, 4, 6, 10, 20, 40, 100}) {
    const SpinQuantum j(n);
    check(coherent_state(j));
    check(optimal_phase_state(j));
    for (double alpha : {0.05, 0.1, 0.3}) check(yurke_state(j, alpha));
    if (n >= kSmallestPhaseSqueezedN) {
      check(make_state(StateKind::spin_squeezed_2act(), j));
      check(make_state(StateKind::phase_squeezed_2act(), j));
    }
    const TwistCurve curve = sweep(j, 4.0 * std::log2(double(n)) / n, 64);
    for (Eigen::Index i = 0; i < curve.nu.size(); ++i) {
      worst = std::min(worst, curve.xi_sq(i) - 1.0 / n);
      ++samples;
    }
  }
  return {worst >= -1e-9,
          "min (xi^2 - 1/N) = " + num(worst) + " over " + std::to_string(samples) + " samples"};
}

Outcome twist_near_optimal() {
  bool ok = true;
  std::string detail;
  for (int n : {10, 20, 40}) {
    const SpinQuantum j(n);
    const TwoAxisTwist twist(j);
    const TwistOptimum opt = minimize(twist, TwistMetric::kZetaSq);
    const SpinState best = optimal_phase_state(j);
    const double ratio = opt.value_at_star / zeta_squared(best);
    const double fid = fidelity(twist.evolve(opt.nu_star), best);
    ok = ok && ratio <= 1.01 && fid > 0.99;
    detail += "N=" + std::to_string(n) + ": ratio " + num(ratio) + ", fidelity " + num(fid) + "; ";
  }
  detail.resize(detail.size() - 2);
  return {ok, detail};
}

Outcome twist_ordering() {
  bool ordered = true;
  int first_bad = 0;
  for (int n = 10; n <= 100; n += 10) {
    const TwoAxisTwist twist{SpinQuantum(n)};
    const double ss = minimize(twist, TwistMetric::kXiSq).nu_star;
    const double ps = minimize(twist, TwistMetric::kZetaSq).nu_star;
    if (!(ps < ss) && ordered) first_bad = n;
    ordered = ordered && ps < ss;
  }
  const std::vector<int> ns{20, 30, 40, 50, 60, 70, 80, 90, 100};
  const double c = scaling_fit(ns, TwistMetric::kXiSq).coefficient;
  const bool ok = ordered && c >= 1.1 && c <= 1.4;
  return {ok, std::string("nu_ps < nu_ss for N=10..100: ") +
                  (ordered ? "yes" : "no (N=" + std::to_string(first_bad) + ")") +
                  ", fitted c = " + num(c)};
}

Outcome optimal_spin_squeezing() {
  const double x100 = xi_squared(optimal_phase_state(SpinQuantum(100)));
  const double x4 = xi_squared(optimal_phase_state(SpinQuantum(4)));
  const bool ok = x100 >= 7.0 / 100 && x100 <= 13.0 / 100 && x4 > 0.8;
  return {ok, "N xi^2_opt(100) = " + num(100 * x100) + ", xi^2_opt(4) = " + num(x4)};
}

Outcome wigner_identities() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> spin(1, 10);

  double trace_err = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double th = std::acos(2 * u(rng) - 1);
    const double ph = 2 * pi * u(rng);
    const ComplexMatrix d = kernel_delta(SpinQuantum(spin(rng)), th, ph).matrix();
    trace_err = std::max(trace_err, std::abs(d.trace() - Complex(1.0)));
  }

  double overlap_err = 0.0;
  for (int k = 0; k < 50; ++k) {
    const SpinQuantum j(spin(rng));
    const SpinState a = testing::random_state(j, rng);
    const SpinState b = testing::random_state(j, rng);
    const WignerGridSpec spec{min_wigner_phi_nodes(j), min_wigner_costheta_nodes(j)};
    const double ov = overlap(wigner_function(a, spec), wigner_function(b, spec));
    overlap_err = std::max(overlap_err, std::abs(ov - std::norm(a.coeffs().dot(b.coeffs()))));
  }

  double phase_err = 0.0;
  for (int n : {4, 6, 8, 10}) {
    const SpinQuantum j(n);
    const WignerGridSpec spec{min_wigner_phi_nodes(j), min_wigner_costheta_nodes(j)};
    for (const StateKind& kind :
         {StateKind::coherent(), StateKind::yurke(kDefaultYurkeAlpha), StateKind::noon(),
          StateKind::optimal_phase(), StateKind::spin_squeezed_2act(),
          StateKind::phase_squeezed_2act()}) {
      const SpinState s = make_state(kind, j);
      const WignerGrid ws = wigner_function(s, spec);
      const PhaseDistribution p = phase_distribution(s);
      for (int k = 0; k < 8; ++k) {
        const double phi0 = -pi + 2 * pi * u(rng);
        const double from_overlap =
            (2 * j.j() + 1) / (2 * pi) * overlap(ws, wigner_function(phase_state(j, phi0), spec));
        phase_err = std::max(phase_err, std::abs(from_overlap - p.density_at(phi0)));
      }
    }
  }
  const bool ok = trace_err <= 1e-10 && overlap_err <= 1e-8 && phase_err <= 1e-8;
  return {ok, "max |Tr D - 1| = " + num(trace_err) + ", max overlap error = " + num(overlap_err) +
                  ", max phase-state error = " + num(phase_err)};
}

Outcome phase_structure() {
  double norm_err = 0.0;
  for (int n : {2, 3, 4, 6, 7, 10, 20, 50, 100}) {
    const SpinQuantum j(n);
    std::vector<SpinState> states{coherent_state(j), noon_state(j), optimal_phase_state(j)};
    if (n % 2 == 0) states.push_back(yurke_state(j, kDefaultYurkeAlpha));
    if (n >= kSmallestPhaseSqueezedN) {
      states.push_back(make_state(StateKind::spin_squeezed_2act(), j));
      states.push_back(make_state(StateKind::phase_squeezed_2act(), j));
    }
    for (const SpinState& s : states) {
      norm_err = std::max(norm_err, std::abs(phase_distribution(s).integral() - 1.0));
    }
  }

  double period_err = 0.0;
  for (int n : {2, 5, 10, 20, 50, 100}) {
    const PhaseDistribution d = phase_distribution(noon_state(SpinQuantum(n)));
    for (int k = 0; k < 50; ++k) {
      const double phi = -pi + 2 * pi * k / 50.0;
      period_err = std::max(period_err, std::abs(d.density_at(phi + 2 * pi / n) - d.density_at(phi)));
    }
  }

  const PhaseDistribution y = phase_distribution(yurke_state(SpinQuantum(20), 0.05));
  const double ratio = y.density_at(0.0) / y.density_at(pi);
  const bool bimodal = y.density_at(0.0) > y.density_at(pi / 2) && y.density_at(pi) > y.density_at(pi / 2);
  const bool ok = norm_err <= 1e-10 && period_err <= 1e-12 && std::abs(ratio - 1.0) <= 0.1 && bimodal;
  return {ok, "max |int P - 1| = " + num(norm_err) + ", NOON period error = " + num(period_err) +
                  ", Yurke P(0)/P(pi) = " + num(ratio)};
}

Outcome mixture_bound() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(-pi, pi);
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  std::uniform_int_distribution<int> components(1, 6);
  double smallest = std::numeric_limits<double>::infinity();
  for (int n : {4, 10, 20}) {
    const SpinState coh = coherent_state(SpinQuantum(n));
    for (int k = 0; k < 100; ++k) {
      const int m = components(rng);
      std::vector<double> w(m);
      std::vector<SpinState> states;
      for (int c = 0; c < m; ++c) {
        w[c] = weight(rng) + 1e-3;
        states.push_back(rotate_about_z(coh, angle(rng)));
      }
      smallest = std::min(smallest, zeta_squared(DensityMatrix::mixture(w, states)));
    }
  }
  return {smallest > 1.0, "min zeta^2 over 300 mixtures = " + num(smallest)};
}

}  // namespace
}  // namespace spinphase

int main() {
  using spinphase::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"optimal-state sharpness", spinphase::optimal_sharpness},
      {"NOON sharpness and zeta^2", spinphase::noon_values},
      {"coherent zeta^2 asymptote", spinphase::coherent_asymptote},
      {"optimal-state zeta^2 scaling", spinphase::optimal_scaling},
      {"Yurke xi^2 closed form", spinphase::yurke_oracle},
      {"coherent xi^2", spinphase::coherent_xi},
      {"Heisenberg bound", spinphase::heisenberg_bound},
      {"2ACT near-optimality", spinphase::twist_near_optimal},
      {"twist-time ordering and scaling", spinphase::twist_ordering},
      {"optimal-state spin squeezing", spinphase::optimal_spin_squeezing},
      {"Wigner identities", spinphase::wigner_identities},
      {"phase-distribution structure", spinphase::phase_structure},
      {"mixture bound", spinphase::mixture_bound},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
