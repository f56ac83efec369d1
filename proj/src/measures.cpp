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

#include "entmono/measures.hpp"

#include <algorithm>
#include <cmath>

namespace entmono {

namespace {

constexpr double kDomainSlop = 1e-12;

double clamp01(double x, const char *what) {
  if (!std::isfinite(x) || x < -kDomainSlop || x > 1.0 + kDomainSlop) {
    throw DomainError(std::string(what) + " outside [0, 1]");
  }
  return std::min(std::max(x, 0.0), 1.0);
}

// sy tensor sy conjugation: (Y rho^* Y)_{ij} = s(i) s(j) conj(rho_{~i,~j})
// with ~i the bit-flipped index and s the parity sign.
ComplexMatrix spin_flip_2q(const ComplexMatrix &rho) {
  static const double sign[4] = {-1.0, 1.0, 1.0, -1.0};
  ComplexMatrix out(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      out.at(i, j) = sign[i] * sign[j] * std::conj(rho.at(3 - i, 3 - j));
    }
  }
  return out;
}

void require_two_qubits(const DensityMatrix &rho, const char *what) {
  if (rho.dims().count() != 2 || rho.dims().dims[0] != 2 || rho.dims().dims[1] != 2) {
    throw DimMismatch(std::string(what) + " needs a two-qubit state");
  }
}

void validate_spectrum4(const HermitianSpectrum &spectrum) {
  if (spectrum.size() != 4) {
    throw SpectrumInvalid("two-qubit spectrum must have 4 entries");
  }
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    if (spectrum[i] < -1e-9) throw SpectrumInvalid("negative spectrum entry");
    sum += spectrum[i];
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw SpectrumInvalid("spectrum does not sum to 1 within 1e-9");
  }
}

ComplexMatrix reduced_left(const PureState &psi, const SubsystemDims &dims,
                           const CutSpec &cut) {
  validate_cut(cut, dims.count());
  if (psi.dim() != dims.total()) {
    throw DimMismatch("state dimension does not match subsystem dims");
  }
  const DensityMatrix rho = to_density(psi, dims);
  return partial_trace(rho.matrix(), dims, cut.left);
}

}  // namespace

void validate_cut(const CutSpec &cut, int n_subsystems) {
  if (cut.left.empty() || cut.right.empty()) {
    throw DimMismatch("cut sides must be nonempty");
  }
  std::vector<bool> seen(n_subsystems, false);
  for (const std::vector<int> *side : {&cut.left, &cut.right}) {
    for (size_t i = 0; i < side->size(); ++i) {
      const int s = (*side)[i];
      if (s < 0 || s >= n_subsystems) throw DimMismatch("cut index out of range");
      if (seen[s]) throw DimMismatch("cut sides overlap or repeat");
      seen[s] = true;
      if (i > 0 && (*side)[i] <= (*side)[i - 1]) {
        throw DimMismatch("cut sides must be strictly increasing");
      }
    }
  }
  for (int s = 0; s < n_subsystems; ++s) {
    if (!seen[s]) throw DimMismatch("cut does not cover every subsystem");
  }
}

double binary_entropy(double x) {
  const double p = clamp01(x, "binary_entropy argument");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double f_of_concurrence(double c) {
  const double cc = clamp01(c, "concurrence");
  return binary_entropy(0.5 + 0.5 * std::sqrt(1.0 - cc * cc));
}

double concurrence_2q(const DensityMatrix &rho) {
  require_two_qubits(rho, "concurrence_2q");
  const ComplexMatrix root = sqrt_psd(rho.matrix());
  const ComplexMatrix m = root * spin_flip_2q(rho.matrix()) * root;
  const EigResult e = eig_hermitian(m);
  double mu[4];
  // Eigenvalues at rounding scale would surface as sqrt-amplified noise of
  // order 1e-8 in the difference below.
  for (int i = 0; i < 4; ++i) {
    mu[i] = e.spectrum[i] > 1e-13 ? std::sqrt(e.spectrum[i]) : 0.0;
  }
  return std::max(0.0, mu[0] - mu[1] - mu[2] - mu[3]);
}

double eof_2q(const DensityMatrix &rho) { return f_of_concurrence(concurrence_2q(rho)); }

double negativity(const DensityMatrix &rho, const CutSpec &cut) {
  validate_cut(cut, rho.dims().count());
  ComplexMatrix pt = rho.matrix();
  for (int s : cut.right) pt = partial_transpose(pt, rho.dims(), s);
  return std::max(0.0, 0.5 * (trace_norm(pt) - 1.0));
}

double concurrence_pure_cut(const PureState &psi, const SubsystemDims &dims,
                            const CutSpec &cut) {
  const ComplexMatrix red = reduced_left(psi, dims, cut);
  double p = 0.0;
  for (const Complex &z : red.entries()) p += std::norm(z);
  return std::sqrt(2.0 * std::max(0.0, 1.0 - p));
}

double negativity_pure_cut(const PureState &psi, const SubsystemDims &dims,
                           const CutSpec &cut) {
  const ComplexMatrix red = reduced_left(psi, dims, cut);
  const EigResult e = eig_hermitian(red);
  double s = 0.0;
  for (double lambda : e.spectrum.values()) {
    if (lambda > 1e-13) s += std::sqrt(lambda);
  }
  return std::max(0.0, 0.5 * (s * s - 1.0));
}

double max_eof_spectrum(const HermitianSpectrum &spectrum) {
  validate_spectrum4(spectrum);
  const double l1 = spectrum[0], l2 = spectrum[1], l3 = spectrum[2], l4 = spectrum[3];
  const double cmax =
      std::max(0.0, l1 - l3 - 2.0 * std::sqrt(std::max(l2, 0.0) * std::max(l4, 0.0)));
  return f_of_concurrence(std::min(cmax, 1.0));
}

double max_negativity_spectrum(const HermitianSpectrum &spectrum) {
  validate_spectrum4(spectrum);
  const double l1 = spectrum[0], l2 = spectrum[1], l3 = spectrum[2], l4 = spectrum[3];
  const double radius = 0.5 * std::hypot(l1 - l3, l2 - l4);
  return std::max(0.0, radius - 0.5 * (l2 + l4));
}

double g_neg(double x) {
  if (!std::isfinite(x) || x < -kDomainSlop || x > 0.5 + kDomainSlop) {
    throw DomainError("g_neg argument outside [0, 1/2]");
  }
  const double xx = std::min(std::max(x, 0.0), 0.5);
  return 0.75 - 0.5 * std::sqrt(std::max(0.0, 1.0 - 2.0 * xx * xx)) -
         0.25 * std::sqrt(std::max(0.0, 1.0 - 4.0 * xx * xx));
}

double g_tilde(double x) {
  const double xx = clamp01(x, "g_tilde argument");
  return 0.5 * (1.0 - std::sqrt(std::max(0.0, 1.0 - xx * xx)));
}

}  // namespace entmono
