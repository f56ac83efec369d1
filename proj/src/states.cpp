// Copyright 2026 The entmono authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entmono/states.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace entmono {

namespace {

constexpr double kStateTol = 1e-9;
constexpr double kHalfPi = 1.5707963267948966192313216916398;

double norm2(const std::vector<Complex> &v) {
  double s = 0.0;
  for (const Complex &z : v) s += std::norm(z);
  return s;
}

}  // namespace

PureState::PureState(std::vector<Complex> amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) throw InvalidState("pure state has no amplitudes");
  for (const Complex &z : amplitudes_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw InvalidState("pure state amplitude is not finite");
    }
  }
  const double n2 = norm2(amplitudes_);
  if (std::abs(n2 - 1.0) > kStateTol) {
    throw InvalidState("pure state norm^2 is " + std::to_string(n2) +
                       ", expected 1 within 1e-9");
  }
}

PureState::PureState(std::vector<Complex> amplitudes, Unchecked)
    : amplitudes_(std::move(amplitudes)) {}

PureState PureState::unchecked(std::vector<Complex> amplitudes) {
  return PureState(std::move(amplitudes), Unchecked{});
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, SubsystemDims dims)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
  if (!matrix_.is_square() || matrix_.rows() != dims_.total()) {
    throw InvalidState("density matrix shape does not match subsystem dims");
  }
  if (!matrix_.is_hermitian(kStateTol)) {
    throw InvalidState("density matrix is not hermitian within 1e-9");
  }
  const double tr = matrix_.trace().real();
  if (std::abs(tr - 1.0) > kStateTol) {
    throw InvalidState("density matrix trace is " + std::to_string(tr) +
                       ", expected 1 within 1e-9");
  }
  const EigResult e = eig_hermitian(matrix_);
  const double lambda_min = e.spectrum[e.spectrum.size() - 1];
  if (lambda_min < -kStateTol) {
    throw InvalidState("density matrix eigenvalue " + std::to_string(lambda_min) +
                       " below -1e-9");
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, SubsystemDims dims, Unchecked)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {}

DensityMatrix DensityMatrix::unchecked(ComplexMatrix matrix, SubsystemDims dims) {
  return DensityMatrix(std::move(matrix), std::move(dims), Unchecked{});
}

DensityMatrix DensityMatrix::reduce(const std::vector<int> &keep) const {
  ComplexMatrix reduced = partial_trace(matrix_, dims_, keep);
  std::vector<int> kept_dims;
  for (int k : keep) kept_dims.push_back(dims_.dims[k]);
  return DensityMatrix::unchecked(std::move(reduced), SubsystemDims(kept_dims));
}

FamilyParams::FamilyParams(double phi_rad, double theta_rad)
    : phi(phi_rad), theta(theta_rad) {
  if (!std::isfinite(phi) || phi < 0.0 || phi > kHalfPi + 1e-12) {
    throw DomainError("phi must lie in [0, pi/2]");
  }
  if (!std::isfinite(theta) || theta < 0.0 || theta > kHalfPi + 1e-12) {
    throw DomainError("theta must lie in [0, pi/2]");
  }
}

PureState family_state(const FamilyParams &params) {
  std::vector<Complex> amps(8, Complex(0.0, 0.0));
  amps[6] = std::cos(params.phi);                           // |110>
  amps[3] = std::sin(params.phi) * std::cos(params.theta);  // |011>
  amps[5] = std::sin(params.phi) * std::sin(params.theta);  // |101>
  return PureState(std::move(amps));
}

DensityMatrix to_density(const PureState &psi, const SubsystemDims &dims) {
  if (psi.dim() != dims.total()) {
    throw DimMismatch("pure state dimension does not match subsystem dims");
  }
  const int d = psi.dim();
  ComplexMatrix rho(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      rho.at(r, c) = psi.amplitude(r) * std::conj(psi.amplitude(c));
    }
  }
  return DensityMatrix::unchecked(std::move(rho), dims);
}

double fidelity(const DensityMatrix &a, const DensityMatrix &b) {
  if (a.dim() != b.dim()) throw DimMismatch("fidelity dimension mismatch");
  const ComplexMatrix ra = sqrt_psd(a.matrix());
  const ComplexMatrix inner = ra * b.matrix() * ra;
  const EigResult e = eig_hermitian(inner);
  double s = 0.0;
  // Eigenvalues at rounding scale are noise from rank-deficient factors; the
  // square root would amplify them to ~1e-8 apiece.
  for (double lambda : e.spectrum.values()) {
    if (lambda > 1e-13) s += std::sqrt(lambda);
  }
  const double f = s * s;
  return std::min(std::max(f, 0.0), 1.0);
}

double purity(const DensityMatrix &rho) {
  const double p = rho.matrix().frobenius_norm();
  return p * p;
}

}  // namespace entmono
