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

#include "doctest.h"
#include "entmono/measures.hpp"
#include "entmono/rng.hpp"

using namespace entmono;

namespace {

constexpr double kPi = 3.14159265358979323846;

double deg(double d) { return d * kPi / 180.0; }

const SubsystemDims kQ3 = SubsystemDims::qubits(3);
const CutSpec kPairCut{{0}, {1}};
const CutSpec kABvsC{{0, 1}, {2}};

DensityMatrix family_pair(double phi_deg) {
  return to_density(family_state(FamilyParams(deg(phi_deg))), kQ3).reduce({0, 1});
}

DensityMatrix bell_pair() {
  const double r = 1.0 / std::sqrt(2.0);
  return to_density(PureState({Complex(r, 0.0), 0.0, 0.0, Complex(r, 0.0)}),
                    SubsystemDims::qubits(2));
}

// closed forms for the family at theta = pi/4
double en_internal_cf(double phi) {
  return 0.25 * std::sqrt(3.0 + std::cos(4.0 * phi)) -
         0.5 * std::cos(phi) * std::cos(phi);
}

}  // namespace

TEST_CASE("binary_entropy endpoints and symmetry point") {
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(binary_entropy(0.9330127) == doctest::Approx(0.35457890985558443).epsilon(1e-12));
  CHECK_THROWS_AS(binary_entropy(1.5), DomainError);
  CHECK_THROWS_AS(binary_entropy(-0.2), DomainError);
}

TEST_CASE("f_of_concurrence frozen values") {
  CHECK(f_of_concurrence(0.0) == 0.0);
  CHECK(f_of_concurrence(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(f_of_concurrence(0.5) == doctest::Approx(0.35457890266527003).epsilon(1e-12));
  CHECK(f_of_concurrence(0.75) == doctest::Approx(0.6560575629727147).epsilon(1e-12));
  CHECK_THROWS_AS(f_of_concurrence(1.1), DomainError);
}

TEST_CASE("concurrence of the bell state is 1") {
  CHECK(concurrence_2q(bell_pair()) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(eof_2q(bell_pair()) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(negativity(bell_pair(), kPairCut) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("separable states measure zero") {
  const SubsystemDims q2 = SubsystemDims::qubits(2);
  ComplexMatrix prod(4, 4);
  prod.at(0, 0) = 0.5;
  prod.at(1, 1) = 0.5;
  DensityMatrix rho(prod, q2);
  CHECK(concurrence_2q(rho) == 0.0);
  CHECK(eof_2q(rho) == 0.0);
  CHECK(negativity(rho, kPairCut) == 0.0);
}

TEST_CASE("family pair concurrence is sin^2 phi on a degree grid") {
  for (int d = 0; d <= 90; ++d) {
    const double s = std::sin(deg(d));
    CHECK(concurrence_2q(family_pair(d)) == doctest::Approx(s * s).epsilon(1e-9));
  }
}

TEST_CASE("family pair negativity matches the closed form on a degree grid") {
  for (int d = 0; d <= 90; ++d) {
    CHECK(negativity(family_pair(d), kPairCut) ==
          doctest::Approx(en_internal_cf(deg(d))).epsilon(1e-9));
  }
}

TEST_CASE("family pair frozen values") {
  CHECK(concurrence_2q(family_pair(30.0)) == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(negativity(family_pair(30.0), kPairCut) ==
        doctest::Approx(0.0202847075210475).epsilon(1e-10));
  CHECK(negativity(family_pair(45.0), kPairCut) ==
        doctest::Approx(0.10355339059327373).epsilon(1e-10));
  CHECK(negativity(family_pair(60.0), kPairCut) ==
        doctest::Approx(0.2702847075210475).epsilon(1e-10));
  CHECK(eof_2q(family_pair(45.0)) ==
        doctest::Approx(0.35457890266527003).epsilon(1e-10));
}

TEST_CASE("pure cut measures for the family") {
  PureState psi = family_state(FamilyParams(deg(30.0)));
  CHECK(concurrence_pure_cut(psi, kQ3, kABvsC) ==
        doctest::Approx(0.8660254037844384).epsilon(1e-10));
  CHECK(negativity_pure_cut(psi, kQ3, kABvsC) ==
        doctest::Approx(0.4330127018922195).epsilon(1e-10));
  for (int d = 0; d <= 90; d += 5) {
    PureState p = family_state(FamilyParams(deg(d)));
    CHECK(negativity_pure_cut(p, kQ3, kABvsC) ==
          doctest::Approx(std::sin(deg(d)) * std::cos(deg(d))).epsilon(1e-9));
  }
}

TEST_CASE("pure cut negativity agrees with the brute-force partial transpose") {
  SplitMix64 rng(4242);
  for (int rep = 0; rep < 50; ++rep) {
    PureState psi = PureState::unchecked(haar_pure_vector(8, rng));
    const double schmidt = negativity_pure_cut(psi, kQ3, kABvsC);
    const double brute = negativity(to_density(psi, kQ3), kABvsC);
    CHECK(schmidt == doctest::Approx(brute).epsilon(1e-9));

    const CutSpec avbc{{0}, {1, 2}};
    CHECK(negativity_pure_cut(psi, kQ3, avbc) ==
          doctest::Approx(negativity(to_density(psi, kQ3), avbc)).epsilon(1e-9));
  }
}

TEST_CASE("pure cut concurrence squares to 4 det(rho_left) for one qubit") {
  SplitMix64 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    PureState psi = PureState::unchecked(haar_pure_vector(8, rng));
    const CutSpec cut{{0}, {1, 2}};
    const double c = concurrence_pure_cut(psi, kQ3, cut);
    ComplexMatrix red = partial_trace(to_density(psi, kQ3).matrix(), kQ3, {0});
    const Complex det =
        red.at(0, 0) * red.at(1, 1) - red.at(0, 1) * red.at(1, 0);
    CHECK(c * c == doctest::Approx(4.0 * det.real()).epsilon(1e-9));
  }
}

TEST_CASE("spectrum maxima frozen values") {
  HermitianSpectrum mems({0.75, 0.25, 0.0, 0.0});
  CHECK(max_eof_spectrum(mems) == doctest::Approx(0.6560575629727147).epsilon(1e-11));
  CHECK(max_negativity_spectrum(mems) ==
        doctest::Approx(0.27028470752104744).epsilon(1e-11));

  // pure spectrum reaches the bell values
  HermitianSpectrum pure({1.0, 0.0, 0.0, 0.0});
  CHECK(max_eof_spectrum(pure) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(max_negativity_spectrum(pure) == doctest::Approx(0.5).epsilon(1e-12));

  // maximally mixed cannot be entangled by any unitary
  HermitianSpectrum mixed({0.25, 0.25, 0.25, 0.25});
  CHECK(max_eof_spectrum(mixed) == 0.0);
  CHECK(max_negativity_spectrum(mixed) == 0.0);

  CHECK_THROWS_AS(max_eof_spectrum(HermitianSpectrum({0.5, 0.25, 0.25})),
                  SpectrumInvalid);
  CHECK_THROWS_AS(max_eof_spectrum(HermitianSpectrum({0.8, 0.1, 0.05, 0.0})),
                  SpectrumInvalid);
}

TEST_CASE("unitary conjugation never beats the spectrum maxima") {
  SplitMix64 rng(777);
  const SubsystemDims q2 = SubsystemDims::qubits(2);
  for (int s = 0; s < 5; ++s) {
    HermitianSpectrum spec = random_density_spectrum(4, rng);
    const double ef_bound = max_eof_spectrum(spec);
    const double en_bound = max_negativity_spectrum(spec);
    for (int t = 0; t < 2000; ++t) {
      ComplexMatrix u = haar_unitary(4, rng);
      ComplexMatrix rho(4, 4);
      for (int i = 0; i < 4; ++i) {
        for (int r = 0; r < 4; ++r) {
          for (int c = 0; c < 4; ++c) {
            rho.at(r, c) += spec[i] * u.at(r, i) * std::conj(u.at(c, i));
          }
        }
      }
      DensityMatrix dm = DensityMatrix::unchecked(rho, q2);
      CHECK(eof_2q(dm) <= ef_bound + 1e-9);
      CHECK(negativity(dm, kPairCut) <= en_bound + 1e-9);
    }
  }
}

TEST_CASE("g_neg frozen values and endpoints") {
  CHECK(g_neg(0.0) == 0.0);
  CHECK(g_neg(0.5) == doctest::Approx(0.3964466094067262).epsilon(1e-12));
  CHECK(g_neg(0.4330127018922193) ==
        doctest::Approx(0.2297152924789526).epsilon(1e-11));
  CHECK_THROWS_AS(g_neg(0.6), DomainError);
  CHECK_THROWS_AS(g_neg(-0.1), DomainError);
}

TEST_CASE("g_tilde frozen values and endpoints") {
  CHECK(g_tilde(0.0) == 0.0);
  CHECK(g_tilde(1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(g_tilde(std::sqrt(3.0) / 2.0) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK_THROWS_AS(g_tilde(1.2), DomainError);
}

TEST_CASE("cut validation rejects malformed cuts") {
  PureState psi = family_state(FamilyParams(deg(20.0)));
  CHECK_THROWS_AS(negativity_pure_cut(psi, kQ3, CutSpec{{0}, {1}}), DimMismatch);
  CHECK_THROWS_AS(negativity_pure_cut(psi, kQ3, CutSpec{{0, 1}, {1, 2}}), DimMismatch);
  CHECK_THROWS_AS(negativity_pure_cut(psi, kQ3, CutSpec{{}, {0, 1, 2}}), DimMismatch);
  CHECK_THROWS_AS(negativity_pure_cut(psi, kQ3, CutSpec{{1, 0}, {2}}), DimMismatch);
}

TEST_CASE("concurrence_2q rejects wrong shapes") {
  PureState psi = family_state(FamilyParams(deg(20.0)));
  CHECK_THROWS_AS(concurrence_2q(to_density(psi, kQ3)), DimMismatch);
}
