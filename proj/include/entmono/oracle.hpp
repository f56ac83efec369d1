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

#ifndef ENTMONO_ORACLE_HPP
#define ENTMONO_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "entmono/monogamy.hpp"

namespace entmono {

/// Extremal-entanglement search for one two-qubit spectrum. closed is the
/// spectrum-only maximum formula, observed the best unitary conjugation
/// found (random sampling refined by hill climbing), violation the largest
/// observed excess over closed (0 when none), gap = closed - observed.
struct MemsSpectrumResult {
  std::vector<double> spectrum;
  double ef_closed;
  double ef_observed;
  double ef_violation;
  double ef_gap;
  double en_closed;
  double en_observed;
  double en_violation;
  double en_gap;
};

struct MemsCampaignResult {
  std::vector<MemsSpectrumResult> per_spectrum;
  int unitaries_per_spectrum;
  double max_violation;
  double max_gap;
};

/// n flat-simplex spectra, each sorted nonascending, from stream
/// derive(seed, 0).
std::vector<HermitianSpectrum> random_spectra(int n, uint64_t seed);

/// For every spectrum D: sample E_F and E_N of U D U^dagger over Haar
/// unitaries (stream derive(seed, s, 0) for spectrum index s), then refine
/// both maxima by hill climbing with annealed near-identity rotations
/// (stream derive(seed, s, 1)). Checks the observed values against
/// max_eof_spectrum / max_negativity_spectrum.
MemsCampaignResult run_mems_campaign(const std::vector<HermitianSpectrum> &spectra,
                                     int unitaries_per_spectrum, uint64_t seed);

/// Worst slack of every inequality over Haar-random pure three-qubit states
/// (stream derive(seed, 2)) plus the two mixed-capable checkers over
/// Hilbert-Schmidt random density operators (stream derive(seed, 3)).
struct FuzzReport {
  long long pure_samples;
  long long mixed_samples;
  double pure_min_slack_ckw;
  double pure_min_slack_ef_pair;
  double pure_min_slack_en_pair;
  double pure_min_slack_en_single;
  double pure_min_slack_c_single;
  double mixed_min_slack_ef_pair;
  double mixed_min_slack_c_single;
};

FuzzReport run_inequality_fuzz(long long pure_samples, long long mixed_samples,
                               uint64_t seed);

}  // namespace entmono

#endif
