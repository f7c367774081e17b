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

#include "spinphase/clebsch_gordan.h"

#include <array>
#include <cmath>
#include <cstdlib>
#include <string>

#include "spinphase/errors.h"

namespace spinphase {
namespace {

using Wide = long double;

struct LogFactorials {
  std::array<Wide, kMaxFactorialArgument + 1> values{};
  LogFactorials() {
    for (int n = 0; n <= kMaxFactorialArgument; ++n) values[n] = std::lgamma(Wide(n) + 1);
  }
};

Wide log_factorial(int n) {
  static const LogFactorials table;
  if (n > kMaxFactorialArgument) {
    throw Error(ErrorCode::kMagnitudeOverflow,
                "factorial argument " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxFactorialArgument));
  }
  return table.values[n];
}

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(Wide x) {
    const Wide t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  Wide value() const { return sum_ + compensation_; }

 private:
  Wide sum_ = 0;
  Wide compensation_ = 0;
};

bool valid_projection(int two_j, int two_m) {
  return two_j >= 0 && std::abs(two_m) <= two_j && (two_j + two_m) % 2 == 0;
}

}  // namespace

double clebsch_gordan(const CgKey& k) {
  if (!valid_projection(k.two_j1, k.two_m1) || !valid_projection(k.two_j2, k.two_m2) ||
      !valid_projection(k.two_j, k.two_m)) {
    return 0.0;
  }
  if (k.two_m != k.two_m1 + k.two_m2) return 0.0;
  if (k.two_j < std::abs(k.two_j1 - k.two_j2) || k.two_j > k.two_j1 + k.two_j2) return 0.0;
  if ((k.two_j1 + k.two_j2 + k.two_j) % 2 != 0) return 0.0;

  // Integer combinations; all even sums of doubled values, halved.
  const int a = (k.two_j1 + k.two_j2 - k.two_j) / 2;  // j1 + j2 - J
  const int b = (k.two_j1 - k.two_m1) / 2;            // j1 - m1
  const int c = (k.two_j2 + k.two_m2) / 2;            // j2 + m2
  const int d = (k.two_j - k.two_j2 + k.two_m1) / 2;  // J - j2 + m1
  const int e = (k.two_j - k.two_j1 - k.two_m2) / 2;  // J - j1 - m2

  const Wide log_prefactor =
      0.5L * (std::log(Wide(k.two_j) + 1) + log_factorial((k.two_j + k.two_j1 - k.two_j2) / 2) +
             log_factorial((k.two_j - k.two_j1 + k.two_j2) / 2) + log_factorial(a) -
             log_factorial((k.two_j1 + k.two_j2 + k.two_j) / 2 + 1) +
             log_factorial((k.two_j + k.two_m) / 2) + log_factorial((k.two_j - k.two_m) / 2) +
             log_factorial(b) + log_factorial((k.two_j1 + k.two_m1) / 2) +
             log_factorial((k.two_j2 - k.two_m2) / 2) + log_factorial(c));

  const int k_min = std::max({0, -d, -e});
  const int k_max = std::min({a, b, c});
  if (k_min > k_max) return 0.0;

  // Terms relative to the largest one, generated by the exact ratio
  // t(n+1)/t(n) = -(a-n)(b-n)(c-n) / ((n+1)(d+n+1)(e+n+1)).
  auto log_term = [&](int n) {
    return -(log_factorial(n) + log_factorial(a - n) + log_factorial(b - n) +
             log_factorial(c - n) + log_factorial(d + n) + log_factorial(e + n));
  };
  auto ratio = [&](int n) {
    return Wide(a - n) * Wide(b - n) * Wide(c - n) /
           (Wide(n + 1) * Wide(d + n + 1) * Wide(e + n + 1));
  };
  int peak = k_min;
  Wide log_scale = log_term(k_min);
  for (int n = k_min + 1; n <= k_max; ++n) {
    if (const Wide t = log_term(n); t > log_scale) {
      log_scale = t;
      peak = n;
    }
  }

  CompensatedSum sum;
  sum.add(peak % 2 == 0 ? 1 : -1);
  Wide t = 1;
  for (int n = peak; n < k_max; ++n) {
    t *= ratio(n);
    sum.add((n + 1) % 2 == 0 ? t : -t);
  }
  t = 1;
  for (int n = peak; n > k_min; --n) {
    t /= ratio(n - 1);
    sum.add((n - 1) % 2 == 0 ? t : -t);
  }
  return double(sum.value() * std::exp(log_prefactor + log_scale));
}

}  // namespace spinphase
