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

#include "entmono/rng.hpp"

#include <algorithm>
#include <cmath>

namespace entmono {

namespace {

constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ull;
constexpr double kTwoPi = 6.283185307179586476925286766559;

uint64_t mix(uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

uint64_t absorb(uint64_t h, uint64_t v) { return mix(h + (v + 1) * kGamma); }

}  // namespace

uint64_t SplitMix64::next_u64() {
  state_ += kGamma;
  return mix(state_);
}

double SplitMix64::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SplitMix64::next_normal() {
  const double u1 = 1.0 - next_double();
  const double u2 = next_double();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

long long SplitMix64::next_poisson(double mean) {
  if (!std::isfinite(mean) || mean < 0.0) {
    throw DomainError("poisson mean must be finite and nonnegative");
  }
  if (mean == 0.0) return 0;
  if (mean < 30.0) {
    const double u = next_double();
    double p = std::exp(-mean);
    double cdf = p;
    long long k = 0;
    const long long cap = static_cast<long long>(mean + 40.0 * std::sqrt(mean) + 100.0);
    while (u > cdf && k < cap) {
      ++k;
      p *= mean / static_cast<double>(k);
      cdf += p;
    }
    return k;
  }
  while (true) {
    const double z = next_normal();
    const double k = std::floor(mean + z * std::sqrt(mean) + 0.5);
    if (k >= 0.0) return static_cast<long long>(k);
  }
}

uint64_t SplitMix64::derive(uint64_t seed, uint64_t a) { return absorb(seed, a); }

uint64_t SplitMix64::derive(uint64_t seed, uint64_t a, uint64_t b) {
  return absorb(absorb(seed, a), b);
}

ComplexMatrix haar_unitary(int dim, SplitMix64 &rng) {
  if (dim < 1) throw DimMismatch("haar_unitary dimension must be positive");
  ComplexMatrix q(dim, dim);
  std::vector<Complex> col(dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) {
      const double re = rng.next_normal();
      const double im = rng.next_normal();
      col[i] = Complex(re, im);
    }
    // two Gram-Schmidt passes keep orthogonality at machine precision
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) {
        Complex overlap = 0.0;
        for (int i = 0; i < dim; ++i) overlap += std::conj(q.at(i, k)) * col[i];
        for (int i = 0; i < dim; ++i) col[i] -= overlap * q.at(i, k);
      }
    }
    double norm2 = 0.0;
    for (int i = 0; i < dim; ++i) norm2 += std::norm(col[i]);
    const double norm = std::sqrt(norm2);
    if (norm < 1e-150) throw NoConvergence("degenerate ginibre column");
    for (int i = 0; i < dim; ++i) q.at(i, j) = col[i] / norm;
  }
  return q;
}

std::vector<Complex> haar_pure_vector(int dim, SplitMix64 &rng) {
  if (dim < 1) throw DimMismatch("haar_pure_vector dimension must be positive");
  std::vector<Complex> v(dim);
  double norm2 = 0.0;
  for (int i = 0; i < dim; ++i) {
    v[i] = Complex(rng.next_normal(), rng.next_normal());
    norm2 += std::norm(v[i]);
  }
  const double norm = std::sqrt(norm2);
  if (norm < 1e-150) throw NoConvergence("degenerate gaussian vector");
  for (Complex &z : v) z /= norm;
  return v;
}

HermitianSpectrum random_density_spectrum(int n, SplitMix64 &rng) {
  if (n < 1) throw DimMismatch("spectrum size must be positive");
  std::vector<double> v(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    v[i] = -std::log(1.0 - rng.next_double());
    sum += v[i];
  }
  for (double &x : v) x /= sum;
  std::sort(v.begin(), v.end(), std::greater<double>());
  return HermitianSpectrum(std::move(v));
}

ComplexMatrix random_density_operator(int dim, SplitMix64 &rng) {
  if (dim < 1) throw DimMismatch("density dimension must be positive");
  ComplexMatrix g(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      g.at(r, c) = Complex(rng.next_normal(), rng.next_normal());
    }
  }
  ComplexMatrix rho = g * g.adjoint();
  const double tr = rho.trace().real();
  return rho * Complex(1.0 / tr, 0.0);
}

}  // namespace entmono
