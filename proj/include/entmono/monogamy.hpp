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

#ifndef ENTMONO_MONOGAMY_HPP
#define ENTMONO_MONOGAMY_HPP

#include <optional>
#include <string>

#include "entmono/measures.hpp"

namespace entmono {

/// The tradeoffs the library can certify. Naming convention: the PAIR
/// variants bound internal entanglement by the worst case over global states
/// compatible with the pair's spectrum; the SINGLE variants bound it by the
/// entanglement actually crossing the A1A2|B cut of one known global state.
enum class InequalityId { kCkw, kEfPair, kEnPair, kEnSingle, kCSingle };

std::string to_string(InequalityId id);

/// Outcome of one inequality evaluation. The convention is uniform:
/// internal_term + external_term <= bound, slack = bound - internal - external,
/// satisfied iff slack >= -tol. For kCkw the two squared pair concurrences
/// live in internal_term, external_term is zero, the squared cut concurrence
/// is the bound, and slack doubles as the three-tangle.
struct MonogamyReport {
  InequalityId inequality_id;
  double internal_term;
  double external_term;
  double bound;
  double slack;
  bool satisfied;
  double tol;
  std::optional<double> three_tangle;
};

inline constexpr double kReportTol = 1e-7;

/// 1 - max_eof_spectrum(spec(rho)): the entanglement of formation that the
/// rest of the world must forgo, given the pair's spectrum.
double external_eof(const DensityMatrix &rho_pair);

/// 1/2 - max_negativity_spectrum(spec(rho)).
double external_neg(const DensityMatrix &rho_pair);

/// E_F(rho) + external_eof(rho) <= 1 for a two-qubit pair.
MonogamyReport check_ef_pair(const DensityMatrix &rho_pair, double tol = kReportTol);

/// E_N(rho) + external_neg(rho) <= 1/2 for a two-qubit pair.
MonogamyReport check_en_pair(const DensityMatrix &rho_pair, double tol = kReportTol);

/// E_N(rho_A1A2) + g(E_N across A1A2|B) <= 1/2 for a pure three-qubit state
/// whose A1A2 reduction has rank <= 2 (eigenvalue tolerance 1e-7); throws
/// Unsupported otherwise. Every pure three-qubit state qualifies since the
/// reduction's rank equals the Schmidt rank across the cut, at most 2.
MonogamyReport check_en_single(const PureState &psi, const SubsystemDims &dims,
                               double tol = kReportTol);

/// C(rho) + g_tilde(C across A1A2|B) <= 1 for a two-qubit pair. The cut
/// concurrence is evaluated through the largest eigenvalue l1 of the pair,
/// as 2 sqrt(l1 (1 - l1)); for a pair descending from a pure three-qubit
/// state this is exactly the cut concurrence.
MonogamyReport check_c_single(const DensityMatrix &rho_pair, double tol = kReportTol);

/// Squared-concurrence monogamy for a pure three-qubit state:
/// C^2(pivot|a) + C^2(pivot|b) <= C^2(pivot|ab). The residual slack is the
/// three-tangle.
MonogamyReport check_ckw(const PureState &psi, const SubsystemDims &dims,
                         int pivot = 0, double tol = kReportTol);

}  // namespace entmono

#endif
