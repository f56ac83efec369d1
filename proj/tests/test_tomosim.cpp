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
#include <vector>

#include "doctest.h"
#include "entmono/measures.hpp"
#include "entmono/rng.hpp"
#include "entmono/tomosim.hpp"

using namespace entmono;

namespace {

constexpr double kPi = 3.14159265358979323846;

double deg(double d) { return d * kPi / 180.0; }

const SubsystemDims kQ3 = SubsystemDims::qubits(3);

DensityMatrix family_density(double phi_deg) {
  return to_density(family_state(FamilyParams(deg(phi_deg))), kQ3);
}

std::vector<CountsRecord> exact_counts(const DensityMatrix &rho,
                                       const ProjectorSet &ps,
                                       const TomoConfig &cfg) {
  const std::vector<double> probs = born_probs(rho, ps);
  std::vector<CountsRecord> counts(probs.size());
  for (size_t k = 0; k < probs.size(); ++k) {
    counts[k].projector_index = static_cast<int>(k);
    counts[k].count = probs[k] * static_cast<double>(cfg.counts_per_setting);
  }
  return counts;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
  double m = 0.0;
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) {
      m = std::max(m, std::abs(a.at(r, c) - b.at(r, c)));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("projector set layout and single-qubit kets") {
  const ProjectorSet p1(1);
  CHECK(p1.size() == 6);
  CHECK(p1.dim() == 2);
  CHECK(p1.n_bases() == 3);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(p1.ket(0)[0] == Complex(1.0, 0.0));  // Z+
  CHECK(p1.ket(1)[1] == Complex(1.0, 0.0));  // Z-
  CHECK(p1.ket(2)[1].real() == doctest::Approx(r).epsilon(1e-15));   // X+
  CHECK(p1.ket(3)[1].real() == doctest::Approx(-r).epsilon(1e-15));  // X-
  CHECK(p1.ket(4)[1].imag() == doctest::Approx(r).epsilon(1e-15));   // Y+
  CHECK(p1.ket(5)[1].imag() == doctest::Approx(-r).epsilon(1e-15));  // Y-

  const ProjectorSet p3(3);
  CHECK(p3.size() == 216);
  CHECK(p3.dim() == 8);
  CHECK(p3.n_bases() == 27);
  // index 42 = digits (1,1,0): Z- Z- Z+ = |110>
  CHECK(p3.ket(42)[6] == Complex(1.0, 0.0));
  CHECK(p3.basis_of(42) == 0);
  // digits (4,2,1) -> axes (2,1,0) -> 2*9 + 1*3 + 0
  CHECK(p3.basis_of(4 * 36 + 2 * 6 + 1) == 21);
  CHECK_THROWS_AS(p3.basis_of(216), DimMismatch);
  CHECK_THROWS_AS(p3.projector_matrix(-1), DimMismatch);
}

TEST_CASE("every axis word is a complete basis") {
  const ProjectorSet ps(3);
  std::vector<int> members(ps.n_bases(), 0);
  std::vector<ComplexMatrix> sums(ps.n_bases(), ComplexMatrix(8, 8));
  for (int k = 0; k < ps.size(); ++k) {
    const int b = ps.basis_of(k);
    ++members[b];
    sums[b] = sums[b] + ps.projector_matrix(k);
  }
  const ComplexMatrix id = ComplexMatrix::identity(8);
  for (int b = 0; b < ps.n_bases(); ++b) {
    CHECK(members[b] == 8);
    CHECK(max_abs_diff(sums[b], id) < 1e-12);
  }
}

TEST_CASE("born_probs picks out basis states and normalizes per basis") {
  const ProjectorSet ps(3);
  const DensityMatrix rho = family_density(0.0);  // |110>
  const std::vector<double> probs = born_probs(rho, ps);
  CHECK(probs[42] == doctest::Approx(1.0).epsilon(1e-12));
  for (int k = 0; k < 216; ++k) {
    if (ps.basis_of(k) == 0 && k != 42) CHECK(probs[k] < 1e-12);
  }

  SplitMix64 rng(2024);
  for (int trial = 0; trial < 3; ++trial) {
    const DensityMatrix mixed(random_density_operator(8, rng), kQ3);
    const std::vector<double> p = born_probs(mixed, ps);
    std::vector<double> basis_sum(ps.n_bases(), 0.0);
    for (int k = 0; k < ps.size(); ++k) basis_sum[ps.basis_of(k)] += p[k];
    for (double s : basis_sum) CHECK(s == doctest::Approx(1.0).epsilon(1e-9));
  }

  const DensityMatrix pair =
      to_density(PureState({1.0, 0.0, 0.0, 0.0}), SubsystemDims::qubits(2));
  CHECK_THROWS_AS(born_probs(pair, ps), DimMismatch);
}

TEST_CASE("apply_noise dephases the path qubit only") {
  const PureState psi = family_state(FamilyParams(deg(45.0)));
  const ComplexMatrix clean = to_density(psi, kQ3).matrix();

  NoiseSpec off;
  CHECK(max_abs_diff(apply_noise(psi, off).matrix(), clean) < 1e-15);

  NoiseSpec v9;
  v9.visibility = 0.9;
  const ComplexMatrix noisy = apply_noise(psi, v9).matrix();
  // |110><101| differs in a2: scaled. |110><011| keeps a2: untouched.
  CHECK(std::abs(noisy.at(6, 5) - clean.at(6, 5) * 0.9) < 1e-15);
  CHECK(std::abs(noisy.at(6, 3) - clean.at(6, 3)) < 1e-15);
  CHECK(std::abs(clean.at(6, 5)) > 0.1);
  CHECK(std::abs(clean.at(6, 3)) > 0.1);

  // full dephasing kills the internal path coherence
  NoiseSpec dead;
  dead.visibility = 0.0;
  const PureState bell_paths = family_state(FamilyParams(deg(90.0)));
  const DensityMatrix dephased = apply_noise(bell_paths, dead);
  CHECK(concurrence_2q(dephased.reduce({0, 1})) == 0.0);

  // partial dephasing of the phi=90 Bell pair scales its concurrence by v
  NoiseSpec mz;
  mz.visibility = 99.0 / 101.0;
  const DensityMatrix scaled = apply_noise(bell_paths, mz);
  CHECK(concurrence_2q(scaled.reduce({0, 1})) ==
        doctest::Approx(99.0 / 101.0).epsilon(1e-12));
}

TEST_CASE("apply_noise white-noise admixture and validation") {
  const PureState psi = family_state(FamilyParams(deg(30.0)));
  NoiseSpec spec;
  spec.white_noise = 0.2;
  const DensityMatrix out = apply_noise(psi, spec);
  const EigResult e = eig_hermitian(out.matrix());
  CHECK(e.spectrum[0] == doctest::Approx(0.8 + 0.2 / 8.0).epsilon(1e-12));
  for (int i = 1; i < 8; ++i) {
    CHECK(e.spectrum[i] == doctest::Approx(0.2 / 8.0).epsilon(1e-12));
  }

  NoiseSpec bad;
  bad.visibility = 1.5;
  CHECK_THROWS_AS(apply_noise(psi, bad), DomainError);
  bad.visibility = 1.0;
  bad.white_noise = -0.1;
  CHECK_THROWS_AS(apply_noise(psi, bad), DomainError);
  const PureState pair({1.0, 0.0, 0.0, 0.0});
  CHECK_THROWS_AS(apply_noise(pair, NoiseSpec{}), DimMismatch);
}

TEST_CASE("sample_counts is deterministic and respects zero probability") {
  const ProjectorSet ps(3);
  const std::vector<double> probs = born_probs(family_density(45.0), ps);
  TomoConfig cfg;
  cfg.seed = 77;
  const std::vector<CountsRecord> a = sample_counts(probs, ps, cfg);
  const std::vector<CountsRecord> b = sample_counts(probs, ps, cfg);
  REQUIRE(a.size() == 216);
  for (size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].projector_index == static_cast<int>(k));
    CHECK(a[k].count == b[k].count);
    CHECK(a[k].count >= 0.0);
    CHECK(a[k].count == std::floor(a[k].count));
  }

  cfg.seed = 78;
  const std::vector<CountsRecord> c = sample_counts(probs, ps, cfg);
  int differing = 0;
  for (size_t k = 0; k < a.size(); ++k) {
    if (a[k].count != c[k].count) ++differing;
  }
  CHECK(differing > 100);  // a new seed reshuffles essentially every draw

  const std::vector<double> zeros(216, 0.0);
  for (const CountsRecord &rec : sample_counts(zeros, ps, cfg)) {
    CHECK(rec.count == 0.0);
  }
}

TEST_CASE("sample_counts matches the Poisson mean and variance") {
  const ProjectorSet ps(3);
  const std::vector<double> ones(216, 1.0);
  TomoConfig cfg;
  double sum = 0.0;
  double sum_sq = 0.0;
  int n = 0;
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    cfg.seed = seed;
    for (const CountsRecord &rec : sample_counts(ones, ps, cfg)) {
      sum += rec.count;
      sum_sq += rec.count * rec.count;
      ++n;
    }
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  CHECK(mean > 9990.0);
  CHECK(mean < 10010.0);
  CHECK(var > 8500.0);
  CHECK(var < 11500.0);
}

TEST_CASE("linear_inversion recovers states from exact counts") {
  const ProjectorSet ps(3);
  const TomoConfig cfg;

  ComplexMatrix third = ComplexMatrix::identity(8) * Complex(1.0 / 8.0, 0.0);
  const DensityMatrix maximal(std::move(third), kQ3);
  const ComplexMatrix li_max = linear_inversion(exact_counts(maximal, ps, cfg), ps);
  CHECK(max_abs_diff(li_max, maximal.matrix()) < 1e-9);

  const DensityMatrix basis = family_density(0.0);
  const ComplexMatrix li_basis = linear_inversion(exact_counts(basis, ps, cfg), ps);
  CHECK(max_abs_diff(li_basis, basis.matrix()) < 1e-9);

  const DensityMatrix fam = family_density(45.0);
  const ComplexMatrix li_fam = linear_inversion(exact_counts(fam, ps, cfg), ps);
  CHECK(max_abs_diff(li_fam, fam.matrix()) < 1e-8);

  // output is Hermitian with unit trace even for noisy counts
  TomoConfig noisy = cfg;
  noisy.seed = 5;
  const std::vector<CountsRecord> counts =
      sample_counts(born_probs(fam, ps), ps, noisy);
  const ComplexMatrix li = linear_inversion(counts, ps);
  Complex tr = 0.0;
  for (int i = 0; i < 8; ++i) tr += li.at(i, i);
  CHECK(tr.real() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(max_abs_diff(li, li.adjoint()) < 1e-12);
}

TEST_CASE("linear_inversion validates its counts") {
  const ProjectorSet ps(3);
  const TomoConfig cfg;
  std::vector<CountsRecord> counts = exact_counts(family_density(30.0), ps, cfg);

  std::vector<CountsRecord> short_counts(counts.begin(), counts.end() - 1);
  CHECK_THROWS_AS(linear_inversion(short_counts, ps), DimMismatch);

  std::vector<CountsRecord> dup = counts;
  dup[7].projector_index = 6;
  CHECK_THROWS_AS(linear_inversion(dup, ps), DimMismatch);

  std::vector<CountsRecord> oob = counts;
  oob[7].projector_index = 216;
  CHECK_THROWS_AS(linear_inversion(oob, ps), DimMismatch);

  std::vector<CountsRecord> neg = counts;
  neg[7].count = -1.0;
  CHECK_THROWS_AS(linear_inversion(neg, ps), DomainError);
}

TEST_CASE("mle_reconstruct round-trips exact expected counts") {
  const ProjectorSet ps(3);
  const TomoConfig cfg;

  const DensityMatrix basis = family_density(0.0);
  const MleResult basis_fit = mle_reconstruct(exact_counts(basis, ps, cfg), ps, cfg);
  CHECK(fidelity(basis_fit.rho, basis) >= 0.9999);

  const double angles[] = {0.0, 15.0, 30.0, 45.0, 50.0, 60.0, 70.0, 80.0, 90.0};
  for (double a : angles) {
    const DensityMatrix truth = family_density(a);
    const MleResult fit = mle_reconstruct(exact_counts(truth, ps, cfg), ps, cfg);
    CHECK(fidelity(fit.rho, truth) >= 0.9999);
    CHECK(fit.iterations <= cfg.max_iterations);
  }
}

TEST_CASE("mle_reconstruct handles Poisson noise at the experimental count budget") {
  const ProjectorSet ps(3);
  TomoConfig cfg;
  cfg.seed = 11;
  const double angles[] = {0.0, 15.0, 30.0, 45.0, 50.0, 60.0, 70.0, 80.0, 90.0};
  double fid_sum = 0.0;
  for (double a : angles) {
    const DensityMatrix truth = family_density(a);
    const std::vector<CountsRecord> counts =
        sample_counts(born_probs(truth, ps), ps, cfg);
    const MleResult fit = mle_reconstruct(counts, ps, cfg);
    const double fid = fidelity(fit.rho, truth);
    CHECK(fid >= 0.98);
    fid_sum += fid;
  }
  CHECK(fid_sum / 9.0 >= 0.99);
}

TEST_CASE("mle_reconstruct stays near the maximally mixed state") {
  // Counting statistics put the reconstruction roughly 0.026 +- 0.003 away
  // in trace distance at this count budget (the unbiased linear inversion
  // lands at the same distance, so the fit adds nothing on top).
  const ProjectorSet ps(3);
  ComplexMatrix eye = ComplexMatrix::identity(8) * Complex(1.0 / 8.0, 0.0);
  const DensityMatrix maximal(std::move(eye), kQ3);
  const std::vector<double> probs = born_probs(maximal, ps);
  double total = 0.0;
  for (uint64_t seed = 1; seed <= 3; ++seed) {
    TomoConfig cfg;
    cfg.seed = seed;
    const std::vector<CountsRecord> counts = sample_counts(probs, ps, cfg);
    const MleResult fit = mle_reconstruct(counts, ps, cfg);
    const double dist = 0.5 * trace_norm(fit.rho.matrix() - maximal.matrix());
    CHECK(dist <= 0.04);
    total += dist;
  }
  CHECK(total / 3.0 <= 0.03);
}

TEST_CASE("mle_reconstruct improves on its linear-inversion initializer") {
  const ProjectorSet ps(3);
  TomoConfig cfg;
  cfg.seed = 9;
  const DensityMatrix truth = family_density(30.0);
  const std::vector<CountsRecord> counts =
      sample_counts(born_probs(truth, ps), ps, cfg);

  // rebuild the clipped-eigenvalue projection used as the initializer
  const EigResult e = eig_hermitian(linear_inversion(counts, ps));
  std::vector<double> lam(8);
  double tr = 0.0;
  for (int i = 0; i < 8; ++i) {
    lam[i] = std::max(e.spectrum[i], 1e-9);
    tr += lam[i];
  }
  ComplexMatrix init(8, 8);
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      Complex s = 0.0;
      for (int k = 0; k < 8; ++k) {
        s += e.vectors.at(r, k) * (lam[k] / tr) * std::conj(e.vectors.at(c, k));
      }
      init.at(r, c) = s;
    }
  }
  const DensityMatrix init_rho(std::move(init), kQ3);

  const MleResult fit = mle_reconstruct(counts, ps, cfg);
  CHECK(poisson_nll(fit.rho, counts, ps, cfg) <=
        poisson_nll(init_rho, counts, ps, cfg) + 1e-9);
}

TEST_CASE("mle_reconstruct output is a valid state even for adversarial counts") {
  const ProjectorSet ps(3);
  const TomoConfig cfg;
  std::vector<CountsRecord> counts(216);
  for (int k = 0; k < 216; ++k) counts[k] = CountsRecord{k, 0.0};
  CHECK_THROWS_AS(mle_reconstruct(counts, ps, cfg), DegenerateCounts);

  counts[42].count = 10000.0;  // a single lit projector
  const MleResult fit = mle_reconstruct(counts, ps, cfg);
  const EigResult e = eig_hermitian(fit.rho.matrix());
  for (int i = 0; i < 8; ++i) CHECK(e.spectrum[i] >= -1e-12);
  double tr = 0.0;
  for (int i = 0; i < 8; ++i) tr += e.spectrum[i];
  CHECK(tr == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("mle_reconstruct is a deterministic function of its counts") {
  const ProjectorSet ps(3);
  TomoConfig cfg;
  cfg.seed = 21;
  const std::vector<CountsRecord> counts =
      sample_counts(born_probs(family_density(50.0), ps), ps, cfg);
  const MleResult a = mle_reconstruct(counts, ps, cfg);
  const MleResult b = mle_reconstruct(counts, ps, cfg);
  CHECK(a.iterations == b.iterations);
  CHECK(a.stop == b.stop);
  CHECK(a.gradient_norm == b.gradient_norm);
  CHECK(a.nll == b.nll);
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      CHECK(a.rho.matrix().at(r, c) == b.rho.matrix().at(r, c));
    }
  }
}

TEST_CASE("poisson_nll stays finite under the probability clamp") {
  const ProjectorSet ps(3);
  const TomoConfig cfg;
  const DensityMatrix basis = family_density(0.0);  // p = 0 at projector 43
  std::vector<CountsRecord> counts = exact_counts(basis, ps, cfg);
  counts[43].count = 5.0;
  const double nll = poisson_nll(basis, counts, ps, cfg);
  CHECK(std::isfinite(nll));
}

TEST_CASE("MleStop names are stable") {
  CHECK(to_string(MleStop::kGradientTolerance) == "gradient_tolerance");
  CHECK(to_string(MleStop::kMaxIterations) == "max_iterations");
  CHECK(to_string(MleStop::kStalled) == "stalled");
}
