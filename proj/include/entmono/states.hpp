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

#ifndef ENTMONO_STATES_HPP
#define ENTMONO_STATES_HPP

#include <vector>

#include "entmono/complex_matrix.hpp"

namespace entmono {

/// Normalized state vector. The constructor enforces unit norm within 1e-9;
/// unchecked() skips validation for amplitudes that are normalized by
/// construction.
class PureState {
 public:
  explicit PureState(std::vector<Complex> amplitudes);
  static PureState unchecked(std::vector<Complex> amplitudes);

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const std::vector<Complex> &amplitudes() const { return amplitudes_; }
  const Complex &amplitude(int i) const { return amplitudes_[i]; }

 private:
  struct Unchecked {};
  PureState(std::vector<Complex> amplitudes, Unchecked);

  std::vector<Complex> amplitudes_;
};

/// Density operator together with its tensor factorization. The checked
/// constructor enforces hermiticity (1e-9), unit trace (1e-9) and
/// positivity (eigenvalues >= -1e-9); unchecked() is for operators that are
/// valid by construction, e.g. partial traces of valid states.
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix matrix, SubsystemDims dims);
  static DensityMatrix unchecked(ComplexMatrix matrix, SubsystemDims dims);

  const ComplexMatrix &matrix() const { return matrix_; }
  const SubsystemDims &dims() const { return dims_; }
  int dim() const { return matrix_.rows(); }

  DensityMatrix reduce(const std::vector<int> &keep) const;

 private:
  struct Unchecked {};
  DensityMatrix(ComplexMatrix matrix, SubsystemDims dims, Unchecked);

  ComplexMatrix matrix_;
  SubsystemDims dims_;
};

/// Parameters of the three-qubit family
///   cos(phi)|110> + sin(phi) (cos(theta)|011> + sin(theta)|101>),
/// qubit order (A1, A2, B). Angles in radians, both restricted to
/// [0, pi/2]. theta = pi/4 gives the one-parameter family whose A1A2
/// reduction has spectrum {cos^2 phi, sin^2 phi, 0, 0} for every theta.
struct FamilyParams {
  double phi;
  double theta;

  explicit FamilyParams(double phi_rad, double theta_rad = kQuarterPi);

  static constexpr double kQuarterPi = 0.78539816339744830961566084581988;
};

PureState family_state(const FamilyParams &params);

/// |psi><psi| as a density operator over the given factorization.
DensityMatrix to_density(const PureState &psi, const SubsystemDims &dims);

/// Uhlmann fidelity (tr sqrt(sqrt(a) b sqrt(a)))^2, clamped to [0, 1].
double fidelity(const DensityMatrix &a, const DensityMatrix &b);

/// tr(rho^2).
double purity(const DensityMatrix &rho);

}  // namespace entmono

#endif
