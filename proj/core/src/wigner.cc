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

#include "spinphase/wigner.h"

#include <cmath>
#include <numbers>
#include <string>

#include "spinphase/clebsch_gordan.h"
#include "spinphase/errors.h"
#include "spinphase/parallel.h"
#include "spinphase/quadrature.h"
#include "spinphase/spherical_harmonics.h"

namespace spinphase {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int multipole_index(int l, int m) { return l * l + l + m; }

// <J r; l m | J r+m> with r at basis index i.
double kernel_cg(SpinQuantum j, int i, int l, int m) {
  const int two_r = 2 * i - j.two_j();
  return clebsch_gordan({j.two_j(), 2 * l, two_r, 2 * m, j.two_j(), two_r + 2 * m});
}

double sign_for(int m) { return (m < 0 && (-m) % 2 == 1) ? -1.0 : 1.0; }

// Y_lm from a normalized Legendre table at the same cos(theta).
Complex harmonic_from_table(const std::vector<double>& table, int l, int m, double phi) {
  const int am = std::abs(m);
  return sign_for(m) * table[legendre_index(l, am)] * std::exp(Complex(0.0, m * phi));
}

}  // namespace

SpinOperator kernel_delta(SpinQuantum j, double theta, double phi) {
  const int d = j.dim();
  const int lmax = j.two_j();
  const std::vector<double> table = normalized_legendre_table(lmax, std::cos(theta));
  const double prefactor = std::sqrt(4.0 * std::numbers::pi) / d;
  ComplexMatrix delta = ComplexMatrix::Zero(d, d);
  for (int r = 0; r < d; ++r) {
    for (int s = 0; s < d; ++s) {
      const int m = s - r;
      Complex z{0.0};
      for (int l = std::abs(m); l <= lmax; ++l) {
        const double cg = kernel_cg(j, r, l, m);
        if (cg == 0.0) continue;
        z += std::sqrt(2.0 * l + 1.0) * cg * harmonic_from_table(table, l, m, phi);
      }
      delta(r, s) = prefactor * z;
    }
  }
  return SpinOperator(j, std::move(delta));
}

WignerFunction::WignerFunction(const DensityMatrix& rho) : j_(rho.spin()) {
  const int d = j_.dim();
  const int lmax = j_.two_j();
  const double prefactor = std::sqrt(4.0 * std::numbers::pi) / d;
  const ComplexMatrix& m_rho = rho.matrix();
  multipoles_.assign((lmax + 1) * (lmax + 1), Complex{0.0});
  parallel_for(lmax + 1, [&](std::size_t li) {
    const int l = int(li);
    const double norm = prefactor * std::sqrt(2.0 * l + 1.0);
    for (int m = -l; m <= l; ++m) {
      Complex q{0.0};
      for (int r = std::max(0, -m); r < d && r + m < d; ++r) {
        const double cg = kernel_cg(j_, r, l, m);
        if (cg != 0.0) q += cg * m_rho(r + m, r);
      }
      multipoles_[multipole_index(l, m)] = norm * q;
    }
  });
}

WignerFunction::WignerFunction(const SpinState& state)
    : WignerFunction(DensityMatrix::pure(state)) {}

Complex WignerFunction::value(double theta, double phi) const {
  const int lmax = j_.two_j();
  const std::vector<double> table = normalized_legendre_table(lmax, std::cos(theta));
  Complex w{0.0};
  for (int l = 0; l <= lmax; ++l) {
    for (int m = -l; m <= l; ++m) {
      w += multipoles_[multipole_index(l, m)] * harmonic_from_table(table, l, m, phi);
    }
  }
  return w;
}

RealMatrix WignerFunction::sample(const RealVector& costheta, const RealVector& phi,
                                  double* max_imag) const {
  const int lmax = j_.two_j();
  const int rows = int(costheta.size());
  const int cols = int(phi.size());
  RealMatrix values(rows, cols);
  std::vector<double> row_imag(rows, 0.0);
  parallel_for(rows, [&](std::size_t row) {
    const std::vector<double> table = normalized_legendre_table(lmax, costheta(row));
    // F_m(x) = sum_l q_lm p~_lm(x), m = -lmax..lmax
    std::vector<Complex> f(2 * lmax + 1, Complex{0.0});
    for (int m = -lmax; m <= lmax; ++m) {
      const int am = std::abs(m);
      Complex acc{0.0};
      for (int l = am; l <= lmax; ++l) {
        acc += multipoles_[multipole_index(l, m)] * table[legendre_index(l, am)];
      }
      f[m + lmax] = sign_for(m) * acc;
    }
    for (int col = 0; col < cols; ++col) {
      const Complex step = std::exp(Complex(0.0, phi(col)));
      Complex rot = std::exp(Complex(0.0, -lmax * phi(col)));
      Complex w{0.0};
      for (int m = -lmax; m <= lmax; ++m) {
        w += f[m + lmax] * rot;
        rot *= step;
      }
      values(row, col) = w.real();
      row_imag[row] = std::max(row_imag[row], std::abs(w.imag()));
    }
  });
  if (max_imag != nullptr) {
    *max_imag = 0.0;
    for (double v : row_imag) *max_imag = std::max(*max_imag, v);
  }
  return values;
}

int min_wigner_phi_nodes(SpinQuantum j) { return 2 * j.two_j() + 1; }

int min_wigner_costheta_nodes(SpinQuantum j) { return j.two_j() + 2; }

double WignerGrid::normalization() const {
  return double(spin.dim()) / (4.0 * std::numbers::pi) * weights.cwiseProduct(values).sum();
}

WignerGrid wigner_function(const DensityMatrix& rho, const WignerGridSpec& spec) {
  const SpinQuantum j = rho.spin();
  const int n_phi = spec.n_phi > 0 ? spec.n_phi : std::max(min_wigner_phi_nodes(j), 64);
  const int n_cos =
      spec.n_costheta > 0 ? spec.n_costheta : std::max(min_wigner_costheta_nodes(j), 32);
  if (n_phi < min_wigner_phi_nodes(j) || n_cos < min_wigner_costheta_nodes(j)) {
    throw Error(ErrorCode::kGridTooCoarse,
                "Wigner grid needs >= " + std::to_string(min_wigner_phi_nodes(j)) +
                    " phi nodes and >= " + std::to_string(min_wigner_costheta_nodes(j)) +
                    " cos(theta) nodes");
  }
  const GaussLegendre rule = gauss_legendre(n_cos);
  WignerGrid grid{j,
                  RealVector(n_phi),
                  rule.nodes,
                  rule.weights,
                  RealMatrix(),
                  rule.weights * RealVector::Constant(n_phi, kTwoPi / n_phi).transpose(),
                  0.0};
  for (int k = 0; k < n_phi; ++k) grid.phi_nodes(k) = kTwoPi * k / n_phi;
  grid.values = WignerFunction(rho).sample(grid.costheta_nodes, grid.phi_nodes, &grid.max_imag);
  return grid;
}

WignerGrid wigner_function(const SpinState& state, const WignerGridSpec& spec) {
  return wigner_function(DensityMatrix::pure(state), spec);
}

double overlap(const WignerGrid& a, const WignerGrid& b) {
  const bool same = a.spin == b.spin && a.phi_nodes.size() == b.phi_nodes.size() &&
                    a.costheta_nodes.size() == b.costheta_nodes.size() &&
                    a.phi_nodes == b.phi_nodes && a.costheta_nodes == b.costheta_nodes;
  if (!same) throw Error(ErrorCode::kGridMismatch, "Wigner grids differ in J or nodes");
  return double(a.spin.dim()) / (4.0 * std::numbers::pi) *
         a.weights.cwiseProduct(a.values).cwiseProduct(b.values).sum();
}

RealVector marginal_phi(const WignerGrid& grid) {
  const double scale = double(grid.spin.dim()) / (4.0 * std::numbers::pi);
  return scale * (grid.costheta_weights.transpose() * grid.values).transpose();
}

SpinState phase_state(SpinQuantum j, double phi0) {
  const double amp = 1.0 / std::sqrt(double(j.dim()));
  ComplexVector c(j.dim());
  for (int i = 0; i < j.dim(); ++i) c(i) = amp * std::exp(Complex(0.0, -j.mu(i) * phi0));
  return SpinState::normalized(j, std::move(c));
}

EqualAreaGrid equal_area_grid(const WignerFunction& w, int n_phi, int n_costheta) {
  if (n_phi < 1 || n_costheta < 2) {
    throw Error(ErrorCode::kInvalidArgument, "equal-area grid needs n_phi >= 1, n_costheta >= 2");
  }
  EqualAreaGrid out{RealVector(n_phi), RealVector::LinSpaced(n_costheta, -1.0, 1.0), RealMatrix()};
  for (int k = 0; k < n_phi; ++k) out.phi(k) = kTwoPi * k / n_phi;
  out.values = w.sample(out.costheta, out.phi);
  return out;
}

}  // namespace spinphase
