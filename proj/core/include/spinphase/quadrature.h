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

#ifndef SPINPHASE_QUADRATURE_H_
#define SPINPHASE_QUADRATURE_H_

#include <Eigen/Dense>

namespace spinphase {

/// n-point Gauss-Legendre rule on [-1, 1], nodes ascending. Exact for
/// polynomials of degree <= 2n - 1.
struct GaussLegendre {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

GaussLegendre gauss_legendre(int n);

}  // namespace spinphase

#endif  // SPINPHASE_QUADRATURE_H_
