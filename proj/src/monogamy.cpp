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

#include "entmono/monogamy.hpp"

#include <algorithm>
#include <cmath>

namespace entmono {

namespace {

constexpr double kRankTol = 1e-7;

HermitianSpectrum pair_spectrum(const DensityMatrix &rho_pair) {
  return eig_hermitian(rho_pair.matrix()).spectrum;
}

MonogamyReport make_report(InequalityId id, double internal, double external,
                           double bound, double tol,
                           std::optional<double> tangle = std::nullopt) {
  const double slack = bound - internal - external;
  return MonogamyReport{id,    internal,      external, bound,
                        slack, slack >= -tol, tol,      tangle};
}

void require_three_qubits(const PureState &psi, const SubsystemDims &dims,
                          const char *what) {
  if (dims.count() != 3 || dims.total() != 8 || psi.dim() != 8) {
    throw DimMismatch(std::string(what) + " needs a pure state of three qubits");
  }
  for (int d : dims.dims) {
    if (d != 2) throw DimMismatch(std::string(what) + " needs qubit subsystems");
  }
}

}  // namespace

std::string to_string(InequalityId id) {
  switch (id) {
    case InequalityId::kCkw: return "CKW";
    case InequalityId::kEfPair: return "EF_PAIR";
    case InequalityId::kEnPair: return "EN_PAIR";
    case InequalityId::kEnSingle: return "EN_SINGLE";
    case InequalityId::kCSingle: return "C_SINGLE";
  }
  throw DomainError("unknown inequality id");
}

double external_eof(const DensityMatrix &rho_pair) {
  return 1.0 - max_eof_spectrum(pair_spectrum(rho_pair));
}

double external_neg(const DensityMatrix &rho_pair) {
  return 0.5 - max_negativity_spectrum(pair_spectrum(rho_pair));
}

MonogamyReport check_ef_pair(const DensityMatrix &rho_pair, double tol) {
  return make_report(InequalityId::kEfPair, eof_2q(rho_pair), external_eof(rho_pair),
                     1.0, tol);
}

MonogamyReport check_en_pair(const DensityMatrix &rho_pair, double tol) {
  const double internal = negativity(rho_pair, CutSpec{{0}, {1}});
  return make_report(InequalityId::kEnPair, internal, external_neg(rho_pair), 0.5,
                     tol);
}

MonogamyReport check_en_single(const PureState &psi, const SubsystemDims &dims,
                               double tol) {
  require_three_qubits(psi, dims, "check_en_single");
  const DensityMatrix pair = to_density(psi, dims).reduce({0, 1});
  const HermitianSpectrum spectrum = pair_spectrum(pair);
  if (spectrum[2] > kRankTol || spectrum[3] > kRankTol) {
    throw Unsupported("check_en_single needs a rank-2 A1A2 reduction");
  }
  const double internal = negativity(pair, CutSpec{{0}, {1}});
  const double cut = negativity_pure_cut(psi, dims, CutSpec{{0, 1}, {2}});
  const double external = g_neg(std::min(cut, 0.5));
  return make_report(InequalityId::kEnSingle, internal, external, 0.5, tol);
}

MonogamyReport check_c_single(const DensityMatrix &rho_pair, double tol) {
  const double internal = concurrence_2q(rho_pair);
  const HermitianSpectrum spectrum = pair_spectrum(rho_pair);
  const double l1 = std::min(std::max(spectrum[0], 0.0), 1.0);
  const double cut = 2.0 * std::sqrt(l1 * (1.0 - l1));
  const double external = g_tilde(std::min(cut, 1.0));
  return make_report(InequalityId::kCSingle, internal, external, 1.0, tol);
}

MonogamyReport check_ckw(const PureState &psi, const SubsystemDims &dims, int pivot,
                         double tol) {
  require_three_qubits(psi, dims, "check_ckw");
  if (pivot < 0 || pivot > 2) throw DomainError("pivot must be 0, 1 or 2");
  std::vector<int> others;
  for (int q = 0; q < 3; ++q) {
    if (q != pivot) others.push_back(q);
  }
  const DensityMatrix rho = to_density(psi, dims);

  double lhs = 0.0;
  for (int partner : others) {
    std::vector<int> keep{pivot, partner};
    std::sort(keep.begin(), keep.end());
    const double c = concurrence_2q(rho.reduce(keep));
    lhs += c * c;
  }
  const double c_cut = concurrence_pure_cut(psi, dims, CutSpec{{pivot}, others});
  const double rhs = c_cut * c_cut;
  MonogamyReport report =
      make_report(InequalityId::kCkw, lhs, 0.0, rhs, tol, rhs - lhs);
  return report;
}

}  // namespace entmono
