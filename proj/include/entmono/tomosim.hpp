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

#ifndef ENTMONO_TOMOSIM_HPP
#define ENTMONO_TOMOSIM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "entmono/rng.hpp"
#include "entmono/states.hpp"

namespace entmono {

/// Overcomplete single-qubit projective frame, 6 states per qubit in the
/// fixed order Z+, Z-, X+, X-, Y+, Y-. For n qubits the projector index is
/// the base-6 number whose most significant digit belongs to qubit 0, e.g.
/// index s0*36 + s1*6 + s2 for three qubits. Digits sharing the same axis
/// pair (2k, 2k+1) form 3^n complete measurement bases of 2^n outcomes each.
class ProjectorSet {
 public:
  explicit ProjectorSet(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  int dim() const { return 1 << n_qubits_; }
  int size() const { return static_cast<int>(kets_.size()); }
  const std::vector<Complex> &ket(int index) const { return kets_[index]; }

  /// Which complete basis (base-3 axis word) a projector belongs to.
  int basis_of(int index) const;
  int n_bases() const;

  ComplexMatrix projector_matrix(int index) const;

 private:
  int n_qubits_;
  std::vector<std::vector<Complex>> kets_;
};

/// Born probabilities <v_k| rho |v_k> for every projector, clamped at zero.
std::vector<double> born_probs(const DensityMatrix &rho, const ProjectorSet &ps);

/// Interferometric noise model: phase damping of qubit A2 with the given
/// visibility (off-diagonal elements between A2 values shrink by v), then a
/// white-noise admixture (1 - w) rho + w I/8.
struct NoiseSpec {
  double visibility = 1.0;
  double white_noise = 0.0;
};

DensityMatrix apply_noise(const PureState &psi, const NoiseSpec &noise);

struct TomoConfig {
  long long counts_per_setting = 10000;
  uint64_t seed = 0;
  int max_iterations = 5000;
  double gradient_tolerance = 1e-8;
};

/// One projector's count. Sampled counts are integral-valued; exact expected
/// counts (the no-sampling pipeline mode) are real, hence the double.
struct CountsRecord {
  int projector_index;
  double count;
};

/// Poisson counts with mean counts_per_setting * p_k. Projector k draws from
/// the substream derive(seed, k), so the counts vector is independent of
/// evaluation order.
std::vector<CountsRecord> sample_counts(const std::vector<double> &probs,
                                        const ProjectorSet &ps,
                                        const TomoConfig &config);

/// Least-squares inversion of basis-normalized frequencies. The output is
/// Hermitian with unit trace but need not be positive; it seeds the MLE.
ComplexMatrix linear_inversion(const std::vector<CountsRecord> &counts,
                               const ProjectorSet &ps);

enum class MleStop { kGradientTolerance, kMaxIterations, kStalled };

std::string to_string(MleStop stop);

struct MleResult {
  DensityMatrix rho;
  int iterations;
  MleStop stop;
  /// Max-norm of the final scaled-objective gradient.
  double gradient_norm;
  /// Poisson negative log-likelihood at rho (unscaled).
  double nll;

  bool converged() const { return stop == MleStop::kGradientTolerance; }
};

/// Maximum-likelihood reconstruction under the Poisson counting model
///   nll(rho) = sum_k [N p_k - n_k ln(N p_k)],  p_k = <v_k|rho|v_k>,
/// minimized over the Cholesky-style parameterization rho = T^dagger T / tr
/// with L-BFGS. Internally the objective and gradient are scaled by 1/N so
/// gradient_tolerance keeps its meaning across count budgets. Probabilities
/// are clamped at 1e-12 inside the logarithm.
MleResult mle_reconstruct(const std::vector<CountsRecord> &counts,
                          const ProjectorSet &ps, const TomoConfig &config);

/// The nll above, for reporting and for monotonicity tests.
double poisson_nll(const DensityMatrix &rho, const std::vector<CountsRecord> &counts,
                   const ProjectorSet &ps, const TomoConfig &config);

}  // namespace entmono

#endif
