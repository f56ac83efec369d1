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

#ifndef ENTMONO_RNG_HPP
#define ENTMONO_RNG_HPP

#include <cstdint>
#include <vector>

#include "entmono/complex_matrix.hpp"

namespace entmono {

/// splitmix64 stream. Chosen over std::mt19937 because the whole pipeline
/// must be byte-for-byte reproducible across platforms, including the
/// distribution code built on top (std::normal_distribution and friends make
/// no such promise).
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next_u64();

  /// Uniform on [0, 1) with 53 random bits.
  double next_double();

  /// Standard normal via Box-Muller; each call burns two uniforms and keeps
  /// only the cosine branch so the draw count stays predictable.
  double next_normal();

  /// Poisson draw. Inversion by sequential search below mean 30, clamped
  /// normal approximation above. mean 0 returns 0.
  long long next_poisson(double mean);

  /// Stateless substream derivation: derive(seed, a) != derive(seed, a') for
  /// a != a', and the outputs are decorrelated by the splitmix64 finalizer.
  static uint64_t derive(uint64_t seed, uint64_t a);
  static uint64_t derive(uint64_t seed, uint64_t a, uint64_t b);

 private:
  uint64_t state_;
};

/// Haar-distributed unitary: Ginibre matrix orthonormalized by modified
/// Gram-Schmidt with a positive real diagonal in the implicit R factor.
ComplexMatrix haar_unitary(int dim, SplitMix64 &rng);

/// Haar-distributed unit vector (normalized complex Gaussian).
std::vector<Complex> haar_pure_vector(int dim, SplitMix64 &rng);

/// Uniform (flat Dirichlet) point on the probability simplex, sorted
/// nonascending.
HermitianSpectrum random_density_spectrum(int n, SplitMix64 &rng);

/// Hilbert-Schmidt random density operator G G^dagger / tr, i.e. a random
/// purification with an ancilla of equal dimension traced out.
ComplexMatrix random_density_operator(int dim, SplitMix64 &rng);

}  // namespace entmono

#endif
