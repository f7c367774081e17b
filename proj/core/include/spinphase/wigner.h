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

#ifndef SPINPHASE_WIGNER_H_
#define SPINPHASE_WIGNER_H_

// Spherical (SU(2)) Wigner functions W(theta, phi) = Tr[rho Delta(theta, phi)]
// with the Stratonovich-Weyl kernel
//
//   Delta = sum_{r,s} Z_{r,s} |J,r><J,s|,
//   Z_{r,s} = sqrt(4 pi)/(2J+1) sum_l sqrt(2l+1) <J r; l s-r | J s> Y_{l,s-r}.
//
// theta is the colatitude in [0, pi]; exported data uses cos(theta), so the
// angle convention never leaks into files. With this kernel the Wigner
// function of |J,J>_x peaks at theta = pi/2, phi = 0.

#include <vector>

#include <Eigen/Dense>

#include "spinphase/spin_algebra.h"

namespace spinphase {

using RealMatrix = Eigen::MatrixXd;

/// Delta(theta, phi) as a dense operator.
SpinOperator kernel_delta(SpinQuantum j, double theta, double phi);

/// Multipole expansion of W for one density matrix:
/// W(theta, phi) = sum_{l,m} q_lm Y_lm(theta, phi).
class WignerFunction {
 public:
  explicit WignerFunction(const DensityMatrix& rho);
  explicit WignerFunction(const SpinState& state);

  SpinQuantum spin() const { return j_; }

  /// Complex value; the imaginary part is round-off for Hermitian rho.
  Complex value(double theta, double phi) const;

  /// Values at every (costheta[row], phi[col]); the largest discarded
  /// imaginary part is written to *max_imag when non-null.
  RealMatrix sample(const RealVector& costheta, const RealVector& phi,
                    double* max_imag = nullptr) const;

 private:
  SpinQuantum j_;
  // q_lm for l = 0..2J, m = -l..l at index l*l + l + m
  std::vector<Complex> multipoles_;
};

struct WignerGridSpec {
  int n_phi = 0;        // 0 picks the default
  int n_costheta = 0;
};

/// Minimum sizes giving exact quadrature of degree-4J integrands:
/// 4J+1 uniform phi nodes and 2J+2 Gauss-Legendre cos(theta) nodes.
int min_wigner_phi_nodes(SpinQuantum j);
int min_wigner_costheta_nodes(SpinQuantum j);

/// Wigner values on a trapezoid (phi) x Gauss-Legendre (cos theta) grid.
struct WignerGrid {
  SpinQuantum spin;
  RealVector phi_nodes;        // uniform on [0, 2 pi)
  RealVector costheta_nodes;   // Gauss-Legendre, ascending
  RealVector costheta_weights;
  RealMatrix values;           // rows: cos theta, cols: phi
  RealMatrix weights;          // costheta_weight * 2 pi / n_phi
  double max_imag;

  /// (2J+1)/(4 pi) * sum of weighted values; equals Tr rho.
  double normalization() const;
};

/// Throws GridTooCoarse when the spec is below the minimum sizes.
WignerGrid wigner_function(const DensityMatrix& rho, const WignerGridSpec& spec = {});
WignerGrid wigner_function(const SpinState& state, const WignerGridSpec& spec = {});

/// (2J+1)/(4 pi) * integral of W_a W_b; equals Tr[rho_a rho_b].
/// Throws GridMismatch unless both grids share J and nodes.
double overlap(const WignerGrid& a, const WignerGrid& b);

/// (2J+1)/(4 pi) * integral of W d(cos theta) at each phi node, which
/// integrates to one over phi.
RealVector marginal_phi(const WignerGrid& grid);

/// Phase state |J,phi0> = (2J+1)^{-1/2} sum_mu e^{-i mu phi0} |J,mu>_z.
SpinState phase_state(SpinQuantum j, double phi0);

/// W on a rectangular equal-area grid: n_phi points uniform on [0, 2 pi) and
/// n_costheta points uniform on [-1, 1] inclusive, evaluated exactly from the
/// multipole expansion.
struct EqualAreaGrid {
  RealVector phi;
  RealVector costheta;
  RealMatrix values;  // rows: cos theta, cols: phi
};

EqualAreaGrid equal_area_grid(const WignerFunction& w, int n_phi, int n_costheta);

}  // namespace spinphase

#endif  // SPINPHASE_WIGNER_H_
