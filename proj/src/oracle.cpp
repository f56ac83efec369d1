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

#include "entmono/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "entmono/rng.hpp"

namespace entmono {

namespace {

const SubsystemDims kQ2 = SubsystemDims::qubits(2);
const SubsystemDims kQ3 = SubsystemDims::qubits(3);
const CutSpec kPairCut{{0}, {1}};

/// U diag(lambda) U^dagger without forming the diagonal matrix.
ComplexMatrix conjugate_spectrum(const ComplexMatrix &u,
                                 const std::vector<double> &lambda) {
  const int d = u.rows();
  ComplexMatrix rho(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      Complex s = 0.0;
      for (int k = 0; k < d; ++k) {
        s += u.at(r, k) * lambda[k] * std::conj(u.at(c, k));
      }
      rho.at(r, c) = s;
    }
  }
  return rho;
}

/// exp(i eps G) for a random Gaussian Hermitian G: a small random rotation.
ComplexMatrix near_identity_rotation(int d, double eps, SplitMix64 &rng) {
  ComplexMatrix g(d, d);
  for (int r = 0; r < d; ++r) {
    g.at(r, r) = rng.next_normal();
    for (int c = r + 1; c < d; ++c) {
      const Complex z(rng.next_normal(), rng.next_normal());
      g.at(r, c) = z;
      g.at(c, r) = std::conj(z);
    }
  }
  const EigResult e = eig_hermitian(g);
  ComplexMatrix rot(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      Complex s = 0.0;
      for (int k = 0; k < d; ++k) {
        const double ang = eps * e.spectrum[k];
        s += e.vectors.at(r, k) * Complex(std::cos(ang), std::sin(ang)) *
             std::conj(e.vectors.at(c, k));
      }
      rot.at(r, c) = s;
    }
  }
  return rot;
}

double pair_concurrence(const ComplexMatrix &rho) {
  return concurrence_2q(DensityMatrix::unchecked(rho, kQ2));
}

double pair_negativity(const ComplexMatrix &rho) {
  return negativity(DensityMatrix::unchecked(rho, kQ2), kPairCut);
}

/// (sy x sy) rho^* (sy x sy): both indices reverse, picking up parity signs.
ComplexMatrix spin_flip(const ComplexMatrix &rho) {
  static const double sign[4] = {-1.0, 1.0, 1.0, -1.0};
  ComplexMatrix out(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      out.at(i, j) = sign[i] * sign[j] * std::conj(rho.at(3 - i, 3 - j));
    }
  }
  return out;
}

/// sigma_1 - sigma_2 - sigma_3 - sigma_4 before the zero clamp: equals the
/// concurrence when positive and measures separable depth when negative.
/// Climbing this instead of the concurrence keeps a slope on the flat
/// separable plateau, where nearly absolutely separable spectra would
/// otherwise strand the search at zero.
double pre_concurrence(const ComplexMatrix &rho) {
  const ComplexMatrix root = sqrt_psd(rho);
  const EigResult e = eig_hermitian(root * spin_flip(rho) * root);
  double mu[4];
  for (int i = 0; i < 4; ++i) {
    mu[i] = e.spectrum[i] > 1e-13 ? std::sqrt(e.spectrum[i]) : 0.0;
  }
  return mu[0] - mu[1] - mu[2] - mu[3];
}

/// Most negative partial-transpose eigenvalue; its negation is the matching
/// smooth surrogate for negativity (a two-qubit partial transpose has at
/// most one negative eigenvalue).
double pt_min_eigenvalue(const ComplexMatrix &rho) {
  const EigResult e = eig_hermitian(partial_transpose(rho, kQ2, 1));
  return e.spectrum[3];
}

/// Refine max_U obj(U D U^dagger) from a starting unitary, updating u in
/// place. The step size anneals only when a whole epoch fails to improve, so
/// the climb tracks ridges at its own pace; the proposal budget keeps the
/// runtime bounded.
template <typename Objective>
double hill_climb(const Objective &obj, const std::vector<double> &lambda,
                  ComplexMatrix &u, double value, SplitMix64 &rng) {
  double eps = 0.05;
  int proposals = 0;
  const int kEpoch = 30;
  const int kBudget = 12000;
  while (eps > 1e-6 && proposals < kBudget) {
    bool improved = false;
    for (int t = 0; t < kEpoch && proposals < kBudget; ++t) {
      ++proposals;
      const ComplexMatrix candidate = u * near_identity_rotation(u.rows(), eps, rng);
      const double v = obj(conjugate_spectrum(candidate, lambda));
      if (v > value) {
        value = v;
        u = candidate;
        improved = true;
      }
    }
    if (!improved) eps *= 0.5;
  }
  return value;
}

}  // namespace

std::vector<HermitianSpectrum> random_spectra(int n, uint64_t seed) {
  if (n < 1) throw DomainError("spectrum count must be positive");
  SplitMix64 rng(SplitMix64::derive(seed, 0));
  std::vector<HermitianSpectrum> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(random_density_spectrum(4, rng));
  return out;
}

MemsCampaignResult run_mems_campaign(const std::vector<HermitianSpectrum> &spectra,
                                     int unitaries_per_spectrum, uint64_t seed) {
  if (spectra.empty()) throw DomainError("campaign needs at least one spectrum");
  if (unitaries_per_spectrum < 1) {
    throw DomainError("unitaries_per_spectrum must be positive");
  }

  MemsCampaignResult result;
  result.unitaries_per_spectrum = unitaries_per_spectrum;
  result.max_violation = 0.0;
  result.max_gap = 0.0;

  for (size_t s = 0; s < spectra.size(); ++s) {
    const HermitianSpectrum &spec = spectra[s];
    if (spec.size() != 4) throw DimMismatch("expected two-qubit spectra");
    const std::vector<double> lambda = spec.values();

    MemsSpectrumResult r;
    r.spectrum = lambda;
    r.ef_closed = max_eof_spectrum(spec);
    r.en_closed = max_negativity_spectrum(spec);

    // Sampling tracks the surrogate maxima; the zero-clamped measures are
    // monotone in the surrogates, so the surrogate argmax also maximizes the
    // true measures over the sample set.
    SplitMix64 sample_rng(SplitMix64::derive(seed, s, 0));
    double best_pc = -4.0;
    double best_pn = -4.0;
    ComplexMatrix best_cu(4, 4);
    ComplexMatrix best_nu(4, 4);
    for (int i = 0; i < unitaries_per_spectrum; ++i) {
      const ComplexMatrix u = haar_unitary(4, sample_rng);
      const ComplexMatrix rho = conjugate_spectrum(u, lambda);
      const double pc = pre_concurrence(rho);
      const double pn = -pt_min_eigenvalue(rho);
      if (pc > best_pc) {
        best_pc = pc;
        best_cu = u;
      }
      if (pn > best_pn) {
        best_pn = pn;
        best_nu = u;
      }
    }

    SplitMix64 climb_rng(SplitMix64::derive(seed, s, 1));
    hill_climb(pre_concurrence, lambda, best_cu, best_pc, climb_rng);
    hill_climb([](const ComplexMatrix &m) { return -pt_min_eigenvalue(m); }, lambda,
               best_nu, best_pn, climb_rng);
    const double ef_best =
        f_of_concurrence(pair_concurrence(conjugate_spectrum(best_cu, lambda)));
    const double en_best = pair_negativity(conjugate_spectrum(best_nu, lambda));

    r.ef_observed = ef_best;
    r.en_observed = en_best;
    r.ef_violation = std::max(0.0, ef_best - r.ef_closed);
    r.en_violation = std::max(0.0, en_best - r.en_closed);
    r.ef_gap = r.ef_closed - ef_best;
    r.en_gap = r.en_closed - en_best;

    result.max_violation =
        std::max({result.max_violation, r.ef_violation, r.en_violation});
    result.max_gap = std::max({result.max_gap, r.ef_gap, r.en_gap});
    result.per_spectrum.push_back(std::move(r));
  }
  return result;
}

FuzzReport run_inequality_fuzz(long long pure_samples, long long mixed_samples,
                               uint64_t seed) {
  if (pure_samples < 1 || mixed_samples < 0) {
    throw DomainError("fuzz sample counts out of range");
  }

  FuzzReport report;
  report.pure_samples = pure_samples;
  report.mixed_samples = mixed_samples;
  report.pure_min_slack_ckw = 1.0;
  report.pure_min_slack_ef_pair = 1.0;
  report.pure_min_slack_en_pair = 1.0;
  report.pure_min_slack_en_single = 1.0;
  report.pure_min_slack_c_single = 1.0;
  report.mixed_min_slack_ef_pair = 1.0;
  report.mixed_min_slack_c_single = 1.0;

  SplitMix64 pure_rng(SplitMix64::derive(seed, 2));
  for (long long i = 0; i < pure_samples; ++i) {
    const PureState psi = PureState::unchecked(haar_pure_vector(8, pure_rng));
    const DensityMatrix pair = to_density(psi, kQ3).reduce({0, 1});
    report.pure_min_slack_ef_pair =
        std::min(report.pure_min_slack_ef_pair, check_ef_pair(pair).slack);
    report.pure_min_slack_en_pair =
        std::min(report.pure_min_slack_en_pair, check_en_pair(pair).slack);
    report.pure_min_slack_c_single =
        std::min(report.pure_min_slack_c_single, check_c_single(pair).slack);
    report.pure_min_slack_en_single =
        std::min(report.pure_min_slack_en_single, check_en_single(psi, kQ3).slack);
    report.pure_min_slack_ckw =
        std::min(report.pure_min_slack_ckw, check_ckw(psi, kQ3).slack);
  }

  SplitMix64 mixed_rng(SplitMix64::derive(seed, 3));
  for (long long i = 0; i < mixed_samples; ++i) {
    const DensityMatrix rho =
        DensityMatrix::unchecked(random_density_operator(8, mixed_rng), kQ3);
    const DensityMatrix pair = rho.reduce({0, 1});
    report.mixed_min_slack_ef_pair =
        std::min(report.mixed_min_slack_ef_pair, check_ef_pair(pair).slack);
    report.mixed_min_slack_c_single =
        std::min(report.mixed_min_slack_c_single, check_c_single(pair).slack);
  }

  return report;
}

}  // namespace entmono
