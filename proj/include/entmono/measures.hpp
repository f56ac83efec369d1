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

#ifndef ENTMONO_MEASURES_HPP
#define ENTMONO_MEASURES_HPP

#include <vector>

#include "entmono/states.hpp"

namespace entmono {

/// Bipartition of the subsystems of a multipartite state. Both sides must be
/// nonempty, disjoint, sorted, and together cover every subsystem.
struct CutSpec {
  std::vector<int> left;
  std::vector<int> right;
};

void validate_cut(const CutSpec &cut, int n_subsystems);

/// Shannon entropy of a bit, log base 2. Arguments may overshoot [0, 1] by
/// 1e-12 for float slop; beyond that throws DomainError.
double binary_entropy(double x);

/// Entanglement of formation as a function of two-qubit concurrence:
/// f(c) = H(1/2 + sqrt(1 - c^2)/2).
double f_of_concurrence(double c);

/// Wootters concurrence of a two-qubit state, evaluated through the
/// Hermitian form sqrt(rho) (sy x sy) rho^* (sy x sy) sqrt(rho).
double concurrence_2q(const DensityMatrix &rho);

/// f(concurrence_2q(rho)).
double eof_2q(const DensityMatrix &rho);

/// Negativity (||rho^{T_right}||_1 - 1) / 2 across the given cut.
double negativity(const DensityMatrix &rho, const CutSpec &cut);

/// Concurrence of a pure state across a cut: sqrt(2 (1 - tr rho_left^2)).
double concurrence_pure_cut(const PureState &psi, const SubsystemDims &dims,
                            const CutSpec &cut);

/// Negativity of a pure state across a cut from the Schmidt coefficients:
/// ((sum_i sqrt(lambda_i))^2 - 1) / 2 with lambda the spectrum of rho_left.
double negativity_pure_cut(const PureState &psi, const SubsystemDims &dims,
                           const CutSpec &cut);

/// Largest entanglement of formation attainable by unitaries on a two-qubit
/// state with the given spectrum (sorted nonascending, nonnegative, unit sum):
/// f(max{0, l1 - l3 - 2 sqrt(l2 l4)}).
double max_eof_spectrum(const HermitianSpectrum &spectrum);

/// Largest negativity attainable by unitaries on a two-qubit state with the
/// given spectrum:
/// max{0, sqrt((l1 - l3)^2 + (l2 - l4)^2)/2 - (l2 + l4)/2}.
double max_negativity_spectrum(const HermitianSpectrum &spectrum);

/// External-negativity tradeoff curve, defined for x in [0, 1/2]:
/// g(x) = 3/4 - sqrt(1 - 2 x^2)/2 - sqrt(1 - 4 x^2)/4.
double g_neg(double x);

/// External-concurrence tradeoff curve, defined for x in [0, 1]:
/// g_tilde(x) = (1 - sqrt(1 - x^2))/2.
double g_tilde(double x);

}  // namespace entmono

#endif
