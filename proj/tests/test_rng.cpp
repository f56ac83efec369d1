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

#include <cmath>
#include <set>

#include "doctest.h"
#include "entmono/rng.hpp"

using namespace entmono;

TEST_CASE("splitmix64 reproduces the reference stream for seed 1234567") {
  // First three outputs of splitmix64 seeded with 1234567, from the
  // published reference implementation.
  SplitMix64 rng(1234567);
  CHECK(rng.next_u64() == 6457827717110365317ull);
  CHECK(rng.next_u64() == 3203168211198807973ull);
  CHECK(rng.next_u64() == 9817491932198370423ull);
}

TEST_CASE("uniform doubles stay in [0,1) and are deterministic") {
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    const double x = a.next_double();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    CHECK(x == b.next_double());
  }
}

TEST_CASE("derive separates substreams") {
  std::set<uint64_t> seen;
  for (uint64_t a = 0; a < 100; ++a) {
    for (uint64_t b = 0; b < 10; ++b) seen.insert(SplitMix64::derive(5, a, b));
  }
  CHECK(seen.size() == 1000);
  CHECK(SplitMix64::derive(5, 1) != SplitMix64::derive(6, 1));
}

TEST_CASE("normal draws have the right first two moments") {
  SplitMix64 rng(31337);
  const int n = 200000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.next_normal();
    sum += x;
    sum2 += x * x;
  }
  const double mean = sum / n;
  const double var = sum2 / n - mean * mean;
  CHECK(std::abs(mean) < 0.01);
  CHECK(std::abs(var - 1.0) < 0.02);
}

TEST_CASE("poisson draws match mean and variance in both regimes") {
  SplitMix64 rng(7);
  for (double mean : {3.0, 80.0}) {
    const int n = 100000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
      const double k = static_cast<double>(rng.next_poisson(mean));
      sum += k;
      sum2 += k * k;
    }
    const double m = sum / n;
    const double v = sum2 / n - m * m;
    CHECK(std::abs(m - mean) < 0.05 * mean);
    CHECK(std::abs(v - mean) < 0.05 * mean);
  }
  CHECK(rng.next_poisson(0.0) == 0);
  CHECK_THROWS_AS(rng.next_poisson(-1.0), DomainError);
}

TEST_CASE("haar_unitary is unitary to machine precision") {
  SplitMix64 rng(2024);
  for (int dim : {2, 4, 8}) {
    ComplexMatrix u = haar_unitary(dim, rng);
    ComplexMatrix err = u.adjoint() * u - ComplexMatrix::identity(dim);
    CHECK(err.max_abs() < 1e-13);
  }
}

TEST_CASE("haar_unitary spreads amplitude uniformly") {
  // E|u_00|^2 = 1/dim for Haar measure.
  SplitMix64 rng(555);
  const int dim = 4, n = 20000;
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    ComplexMatrix u = haar_unitary(dim, rng);
    acc += std::norm(u.at(0, 0));
  }
  CHECK(acc / n == doctest::Approx(1.0 / dim).epsilon(0.05));
}

TEST_CASE("haar_pure_vector is normalized") {
  SplitMix64 rng(99);
  auto v = haar_pure_vector(8, rng);
  double norm2 = 0.0;
  for (const Complex &z : v) norm2 += std::norm(z);
  CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("random_density_spectrum is a sorted probability vector") {
  SplitMix64 rng(123);
  for (int rep = 0; rep < 100; ++rep) {
    HermitianSpectrum s = random_density_spectrum(4, rng);
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) {
      CHECK(s[i] >= 0.0);
      sum += s[i];
      if (i > 0) CHECK(s[i - 1] >= s[i]);
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("random_density_operator is a valid state") {
  SplitMix64 rng(321);
  ComplexMatrix rho = random_density_operator(8, rng);
  CHECK(rho.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rho.is_hermitian(1e-12));
  EigResult e = eig_hermitian(rho);
  CHECK(e.spectrum[7] >= -1e-14);
}
