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

#ifndef SPINPHASE_SPHERICAL_HARMONICS_H_
#define SPINPHASE_SPHERICAL_HARMONICS_H_

#include <complex>
#include <vector>

namespace spinphase {

/// Orthonormal Y_lm(theta, phi) with the Condon-Shortley phase; theta is the
/// colatitude in [0, pi]. Returns 0 for |m| > l.
std::complex<double> spherical_harmonic(int l, int m, double theta, double phi);

/// Normalized associated Legendre values p_lm(x) for 0 <= m <= l <= lmax, so
/// that Y_lm = p_lm(cos theta) e^{i m phi}. Entry (l, m) is at l(l+1)/2 + m.
/// Uses the standard three-term recurrence in l, seeded from p_mm, which is
/// stable to lmax in the thousands.
std::vector<double> normalized_legendre_table(int lmax, double x);

inline int legendre_index(int l, int m) { return l * (l + 1) / 2 + m; }

}  // namespace spinphase

#endif  // SPINPHASE_SPHERICAL_HARMONICS_H_
