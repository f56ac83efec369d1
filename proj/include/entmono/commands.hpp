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

#ifndef ENTMONO_COMMANDS_HPP
#define ENTMONO_COMMANDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "entmono/oracle.hpp"
#include "entmono/serialize.hpp"
#include "entmono/tomosim.hpp"

namespace entmono {

/// Master seed used by every stochastic command unless overridden; always
/// echoed in output metadata.
inline constexpr uint64_t kDefaultMasterSeed = 0xB0B5EEDull;

/// Closed-form curve sweep over the family angle phi at fixed theta.
struct SweepSpec {
  double phi_start_deg = 0.0;
  double phi_end_deg = 90.0;
  double phi_step_deg = 1.0;
  double theta_deg = 45.0;
};

/// One grid row; every quantity is analytic in the noiseless family state.
struct SweepRow {
  double phi_deg;
  double ef_internal;
  double ef_external;
  double ef_sum;
  double en_internal;
  double en_external_pair;
  double en_pair_sum;
  double en_cut_pure;
  double g_en;
  double en_single_sum;
  double c_internal;
  double c_cut_pure;
  double g_tilde_c;
  double c_single_sum;
  double ckw_lhs;
  double ckw_rhs;
  double three_tangle;
};

std::vector<SweepRow> compute_sweep(const SweepSpec &spec);
std::string sweep_csv(const SweepSpec &spec);

/// Simulated tomography experiment across a list of family angles: noise,
/// counts, reconstruction, and the monogamy quantities of the reconstructed
/// states with per-angle statistics over repeats. poisson = false replaces
/// sampling with exact expected counts (every repeat then reconstructs the
/// same state).
struct ExperimentSpec {
  std::vector<double> phi_list_deg{0.0, 15.0, 30.0, 45.0, 50.0, 60.0, 70.0, 80.0, 90.0};
  NoiseSpec noise;
  TomoConfig tomo;
  int repeats = 10;
  bool poisson = true;

  ExperimentSpec() {
    noise.visibility = 0.9802;
    tomo.seed = kDefaultMasterSeed;
  }
};

Json run_experiment(const ExperimentSpec &spec);

/// Evaluate every applicable inequality on a state file: five checkers for a
/// pure input, the three pair checkers for a density input.
struct CheckSpec {
  std::string input_path;
  bool pure = false;
};

Json run_check(const CheckSpec &spec);

/// Extremal-spectrum campaign plus inequality fuzzing.
struct OracleSpec {
  int spectra = 100;
  int samples = 10000;
  long long fuzz_pure = 100000;
  long long fuzz_mixed = 10000;
  uint64_t seed = kDefaultMasterSeed;
};

Json run_oracle(const OracleSpec &spec);

/// File-writing entry points used by the CLI.
void cmd_sweep(const SweepSpec &spec, const std::string &out_path);
void cmd_experiment(const ExperimentSpec &spec, const std::string &out_path);
void cmd_check(const CheckSpec &spec, const std::string &out_path);
void cmd_oracle(const OracleSpec &spec, const std::string &out_path);

}  // namespace entmono

#endif
