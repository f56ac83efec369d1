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

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <type_traits>
#include <vector>

#include "CLI11.hpp"

#include "entmono/commands.hpp"
#include "entmono/errors.hpp"
#include "entmono/serialize.hpp"

namespace {

using entmono::Json;

/// Every key a config file may carry; one file can drive any subcommand and
/// each subcommand reads only the keys mirroring its own flags.
const char *const kConfigKeys[] = {
    "seed",       "out",     "phi-start", "phi-end",   "phi-step",
    "theta",      "angles",  "visibility", "white-noise", "counts",
    "repeats",    "exact",   "input",     "pure",      "samples",
    "spectra",    "fuzz-pure", "fuzz-mixed"};

Json load_config(const std::string &path) {
  const Json cfg = entmono::parse_json(entmono::read_text_file(path), path);
  if (!cfg.is_object()) {
    throw entmono::ParseError("config " + path + ": top level must be an object");
  }
  for (const auto &item : cfg.items()) {
    bool known = false;
    for (const char *key : kConfigKeys) known = known || item.key() == key;
    if (!known) {
      throw entmono::ParseError("config " + path + ": unknown key \"" + item.key() + "\"");
    }
  }
  return cfg;
}

/// Copy cfg[key] into target unless the matching flag was given explicitly;
/// flags always win over the config file.
template <typename T>
void overlay(const Json &cfg, const char *key, const CLI::Option *opt, T &target) {
  if (opt != nullptr && opt->count() > 0) return;
  const auto it = cfg.find(key);
  if (it == cfg.end()) return;
  const Json &v = *it;
  const std::string where = std::string("config key \"") + key + "\"";
  if constexpr (std::is_same_v<T, bool>) {
    if (!v.is_boolean()) throw entmono::ParseError(where + ": expected a boolean");
    target = v.get<bool>();
  } else if constexpr (std::is_same_v<T, std::string>) {
    if (!v.is_string()) throw entmono::ParseError(where + ": expected a string");
    target = v.get<std::string>();
  } else if constexpr (std::is_same_v<T, std::vector<double>>) {
    if (!v.is_array() || v.empty()) {
      throw entmono::ParseError(where + ": expected a nonempty array of numbers");
    }
    std::vector<double> xs;
    for (const Json &e : v) {
      if (!e.is_number()) throw entmono::ParseError(where + ": expected a nonempty array of numbers");
      xs.push_back(e.get<double>());
    }
    target = xs;
  } else if constexpr (std::is_integral_v<T>) {
    if (!v.is_number_integer() && !v.is_number_unsigned()) {
      throw entmono::ParseError(where + ": expected an integer");
    }
    if constexpr (std::is_unsigned_v<T>) {
      if (v.is_number_integer() && !v.is_number_unsigned() && v.get<long long>() < 0) {
        throw entmono::ParseError(where + ": expected a nonnegative integer");
      }
    }
    target = v.get<T>();
  } else {
    if (!v.is_number()) throw entmono::ParseError(where + ": expected a number");
    target = v.get<double>();
  }
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{
      "entmono: internal vs external entanglement measures, monogamy checks, "
      "and a simulated photonic tomography pipeline"};
  app.require_subcommand(1);

  // sweep
  entmono::SweepSpec sweep_spec;
  std::string sweep_out = "sweep.csv";
  std::string sweep_config;
  uint64_t sweep_seed = entmono::kDefaultMasterSeed;
  CLI::App *sweep = app.add_subcommand(
      "sweep", "Closed-form monogamy curves over the family angle (CSV)");
  CLI::Option *sw_start = sweep->add_option("--phi-start", sweep_spec.phi_start_deg,
                                            "Grid start, degrees in [0, 90]");
  CLI::Option *sw_end = sweep->add_option("--phi-end", sweep_spec.phi_end_deg,
                                          "Grid end, degrees in [0, 90]");
  CLI::Option *sw_step = sweep->add_option("--phi-step", sweep_spec.phi_step_deg,
                                           "Grid step, degrees > 0");
  CLI::Option *sw_theta = sweep->add_option("--theta", sweep_spec.theta_deg,
                                            "Family angle theta, degrees in [0, 90]");
  CLI::Option *sw_out = sweep->add_option("--out", sweep_out, "Output CSV path");
  sweep->add_option("--seed", sweep_seed, "Master seed (unused; the sweep is analytic)");
  sweep->add_option("--config", sweep_config, "JSON config file; flags override it");
  sweep->callback([&]() {
    if (!sweep_config.empty()) {
      const Json cfg = load_config(sweep_config);
      overlay(cfg, "phi-start", sw_start, sweep_spec.phi_start_deg);
      overlay(cfg, "phi-end", sw_end, sweep_spec.phi_end_deg);
      overlay(cfg, "phi-step", sw_step, sweep_spec.phi_step_deg);
      overlay(cfg, "theta", sw_theta, sweep_spec.theta_deg);
      overlay(cfg, "out", sw_out, sweep_out);
    }
    entmono::cmd_sweep(sweep_spec, sweep_out);
  });

  // experiment
  entmono::ExperimentSpec exp_spec;
  bool exp_exact = false;
  std::string exp_out = "experiment.json";
  std::string exp_config;
  CLI::App *exp = app.add_subcommand(
      "experiment", "Simulated tomography runs across family angles (JSON)");
  CLI::Option *ex_angles =
      exp->add_option("--angles", exp_spec.phi_list_deg,
                      "Family angles phi, degrees in [0, 90]")
          ->delimiter(',');
  CLI::Option *ex_vis = exp->add_option("--visibility", exp_spec.noise.visibility,
                                        "Interferometer visibility in [0, 1]");
  CLI::Option *ex_white = exp->add_option("--white-noise", exp_spec.noise.white_noise,
                                          "White-noise admixture weight in [0, 1]");
  CLI::Option *ex_counts = exp->add_option("--counts", exp_spec.tomo.counts_per_setting,
                                           "Mean photon counts per projector");
  CLI::Option *ex_repeats = exp->add_option("--repeats", exp_spec.repeats,
                                            "Tomography repetitions per angle");
  CLI::Option *ex_exact = exp->add_flag("--exact", exp_exact,
                                        "Use exact expected counts instead of Poisson draws");
  CLI::Option *ex_out = exp->add_option("--out", exp_out, "Output JSON path");
  CLI::Option *ex_seed = exp->add_option("--seed", exp_spec.tomo.seed, "Master seed");
  exp->add_option("--config", exp_config, "JSON config file; flags override it");
  exp->callback([&]() {
    if (!exp_config.empty()) {
      const Json cfg = load_config(exp_config);
      overlay(cfg, "angles", ex_angles, exp_spec.phi_list_deg);
      overlay(cfg, "visibility", ex_vis, exp_spec.noise.visibility);
      overlay(cfg, "white-noise", ex_white, exp_spec.noise.white_noise);
      overlay(cfg, "counts", ex_counts, exp_spec.tomo.counts_per_setting);
      overlay(cfg, "repeats", ex_repeats, exp_spec.repeats);
      overlay(cfg, "exact", ex_exact, exp_exact);
      overlay(cfg, "seed", ex_seed, exp_spec.tomo.seed);
      overlay(cfg, "out", ex_out, exp_out);
    }
    exp_spec.poisson = !exp_exact;
    entmono::cmd_experiment(exp_spec, exp_out);
  });

  // check
  entmono::CheckSpec check_spec;
  std::string check_out;
  std::string check_config;
  uint64_t check_seed = entmono::kDefaultMasterSeed;
  CLI::App *check = app.add_subcommand(
      "check", "Evaluate every applicable inequality on a state file (JSON)");
  CLI::Option *ck_input =
      check->add_option("--input", check_spec.input_path, "State JSON file to check");
  CLI::Option *ck_pure = check->add_flag("--pure", check_spec.pure,
                                         "Treat the input as a pure state vector");
  CLI::Option *ck_out =
      check->add_option("--out", check_out, "Also write the report JSON here");
  check->add_option("--seed", check_seed, "Master seed (unused; the check is analytic)");
  check->add_option("--config", check_config, "JSON config file; flags override it");
  check->callback([&]() {
    if (!check_config.empty()) {
      const Json cfg = load_config(check_config);
      overlay(cfg, "input", ck_input, check_spec.input_path);
      overlay(cfg, "pure", ck_pure, check_spec.pure);
      overlay(cfg, "out", ck_out, check_out);
    }
    if (check_spec.input_path.empty()) {
      throw entmono::DomainError("check: --input is required (flag or config)");
    }
    const Json report = entmono::run_check(check_spec);
    std::cout << report.dump(2) << '\n';
    if (!check_out.empty()) {
      entmono::write_text_file(check_out, report.dump(2) + "\n");
    }
  });

  // oracle
  entmono::OracleSpec oracle_spec;
  std::string oracle_out = "oracle.json";
  std::string oracle_config;
  CLI::App *oracle = app.add_subcommand(
      "oracle", "Spectrum-maximum campaign plus inequality fuzzing (JSON)");
  CLI::Option *or_samples = oracle->add_option("--samples", oracle_spec.samples,
                                               "Random unitaries per spectrum");
  CLI::Option *or_spectra =
      oracle->add_option("--spectra", oracle_spec.spectra, "Number of random spectra");
  CLI::Option *or_fp = oracle->add_option("--fuzz-pure", oracle_spec.fuzz_pure,
                                          "Random pure three-qubit states to fuzz");
  CLI::Option *or_fm = oracle->add_option("--fuzz-mixed", oracle_spec.fuzz_mixed,
                                          "Random mixed three-qubit states to fuzz");
  CLI::Option *or_out = oracle->add_option("--out", oracle_out, "Output JSON path");
  CLI::Option *or_seed = oracle->add_option("--seed", oracle_spec.seed, "Master seed");
  oracle->add_option("--config", oracle_config, "JSON config file; flags override it");
  oracle->callback([&]() {
    if (!oracle_config.empty()) {
      const Json cfg = load_config(oracle_config);
      overlay(cfg, "samples", or_samples, oracle_spec.samples);
      overlay(cfg, "spectra", or_spectra, oracle_spec.spectra);
      overlay(cfg, "fuzz-pure", or_fp, oracle_spec.fuzz_pure);
      overlay(cfg, "fuzz-mixed", or_fm, oracle_spec.fuzz_mixed);
      overlay(cfg, "seed", or_seed, oracle_spec.seed);
      overlay(cfg, "out", or_out, oracle_out);
    }
    entmono::cmd_oracle(oracle_spec, oracle_out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 1;
  } catch (const entmono::ValidationError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
