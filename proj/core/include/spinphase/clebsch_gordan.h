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

#ifndef SPINPHASE_CLEBSCH_GORDAN_H_
#define SPINPHASE_CLEBSCH_GORDAN_H_

namespace spinphase {

/// <j1 m1; j2 m2 | J M>, every quantum number stored doubled so half-integers
/// are exact.
struct CgKey {
  int two_j1;
  int two_j2;
  int two_m1;
  int two_m2;
  int two_j;
  int two_m;
};

/// Largest factorial argument the log-factorial table covers. Keys that need
/// more throw MagnitudeOverflow.
inline constexpr int kMaxFactorialArgument = 1024;

/// Condon-Shortley Clebsch-Gordan coefficient from Racah's closed-form sum,
/// evaluated with log-factorials and compensated summation. Keys that break
/// a selection rule (M != m1 + m2, triangle, |m| > j, parity) give exactly 0.
///
/// Accuracy is checked against exact rational arithmetic up to N = 20 and
/// through unitarity sums up to N = 100; beyond that cancellation in the
/// alternating sum grows and results are not guaranteed.
double clebsch_gordan(const CgKey& key);

}  // namespace spinphase

#endif  // SPINPHASE_CLEBSCH_GORDAN_H_
