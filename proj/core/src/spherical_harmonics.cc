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

#include "spinphase/spherical_harmonics.h"

#include <cmath>
#include <cstdlib>
#include <numbers>

namespace spinphase {

std::vector<double> normalized_legendre_table(int lmax, double x) {
  std::vector<double> p(legendre_index(lmax, lmax) + 1, 0.0);
  const double s = std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));
  double pmm = 0.5 / std::sqrt(std::numbers::pi);  // p_00 = 1/sqrt(4 pi)
  for (int m = 0; m <= lmax; ++m) {
    if (m > 0) pmm *= -std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * s;
    p[legendre_index(m, m)] = pmm;
    if (m == lmax) break;
    double prev2 = pmm;
    double prev1 = std::sqrt(2.0 * m + 3.0) * x * pmm;
    p[legendre_index(m + 1, m)] = prev1;
    for (int l = m + 2; l <= lmax; ++l) {
      const double l2 = double(l) * l;
      const double m2 = double(m) * m;
      const double a = std::sqrt((4.0 * l2 - 1.0) / (l2 - m2));
      const double b = std::sqrt(((l - 1.0) * (l - 1.0) - m2) / (4.0 * (l - 1.0) * (l - 1.0) - 1.0));
      const double cur = a * (x * prev1 - b * prev2);
      p[legendre_index(l, m)] = cur;
      prev2 = prev1;
      prev1 = cur;
    }
  }
  return p;
}

std::complex<double> spherical_harmonic(int l, int m, double theta, double phi) {
  if (l < 0 || std::abs(m) > l) return 0.0;
  const int am = std::abs(m);
  const double plm = normalized_legendre_table(l, std::cos(theta))[legendre_index(l, am)];
  const std::complex<double> value = plm * std::exp(std::complex<double>(0.0, am * phi));
  if (m >= 0) return value;
  return (am % 2 == 0 ? 1.0 : -1.0) * std::conj(value);
}

}  // namespace spinphase
