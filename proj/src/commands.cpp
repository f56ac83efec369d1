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

#include "entmono/commands.hpp"

#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "entmono/errors.hpp"
#include "entmono/measures.hpp"
#include "entmono/monogamy.hpp"
#include "entmono/rng.hpp"
#include "entmono/states.hpp"

namespace entmono {

namespace {

constexpr double kPi = 3.14159265358979323846;

double deg_to_rad(double deg) { return deg * kPi / 180.0; }

const char *const kSweepColumns[] = {
    "phi_deg",     "ef_internal", "ef_external",      "ef_sum",
    "en_internal", "en_external_pair", "en_pair_sum", "en_cut_pure",
    "g_en",        "en_single_sum",    "c_internal",  "c_cut_pure",
    "g_tilde_c",   "c_single_sum",     "ckw_lhs",     "ckw_rhs",
    "three_tangle"};

constexpr int kSweepWidth = 17;

std::vector<double> row_values(const SweepRow &r) {
  return {r.phi_deg,     r.ef_internal, r.ef_external,      r.ef_sum,
          r.en_internal, r.en_external_pair, r.en_pair_sum, r.en_cut_pure,
          r.g_en,        r.en_single_sum,    r.c_internal,  r.c_cut_pure,
          r.g_tilde_c,   r.c_single_sum,     r.ckw_lhs,     r.ckw_rhs,
          r.three_tangle};
}

/// Per-trial quantities aggregated into per-angle statistics. The order here
/// fixes both the trial JSON field order and the stats block order.
const char *const kTrialStats[] = {
    "fidelity_ideal",     "fidelity_truth",      "ef_internal",
    "ef_external",        "ef_sum",              "en_pair_internal",
    "en_pair_external",   "en_pair_sum",         "en_single_internal",
    "en_single_external", "en_single_sum",       "en_cut",
    "c_internal",         "c_external",          "c_sum"};

constexpr int kNumTrialStats = 15;

struct TrialOutcome {
  int repeat;
  uint64_t seed;
  bool converged;
  MleStop stop;
  int iterations;
  double gradient_norm;
  double values[kNumTrialStats];
};

Json mean_std(const std::vector<double> &xs) {
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double var = 0.0;
  if (xs.size() > 1) {
    for (double x : xs) var += (x - mean) * (x - mean);
    var /= static_cast<double>(xs.size() - 1);
  }
  Json j = Json::object();
  j["mean"] = mean;
  j["std"] = std::sqrt(var);
  return j;
}

std::vector<CountsRecord> expected_counts(const std::vector<double> &probs,
                                          const TomoConfig &config) {
  std::vector<CountsRecord> counts;
  counts.reserve(probs.size());
  const double n = static_cast<double>(config.counts_per_setting);
  for (std::size_t k = 0; k < probs.size(); ++k) {
    counts.push_back(CountsRecord{static_cast<int>(k), n * probs[k]});
  }
  return counts;
}

}  // namespace

std::vector<SweepRow> compute_sweep(const SweepSpec &spec) {
  if (!(spec.phi_step_deg > 0.0)) {
    throw DomainError("sweep: phi step must be positive");
  }
  if (!(spec.phi_start_deg <= spec.phi_end_deg)) {
    throw DomainError("sweep: phi start must not exceed phi end");
  }
  if (spec.phi_start_deg < 0.0 || spec.phi_end_deg > 90.0) {
    throw DomainError("sweep: phi range must lie within [0, 90] degrees");
  }
  if (spec.theta_deg < 0.0 || spec.theta_deg > 90.0) {
    throw DomainError("sweep: theta must lie within [0, 90] degrees");
  }
  const SubsystemDims dims = SubsystemDims::qubits(3);
  const CutSpec pair_cut{{0, 1}, {2}};
  const double span = spec.phi_end_deg - spec.phi_start_deg;
  const int n_rows = static_cast<int>(std::floor(span / spec.phi_step_deg + 1e-9)) + 1;

  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(n_rows));
  for (int i = 0; i < n_rows; ++i) {
    const double phi_deg = spec.phi_start_deg + static_cast<double>(i) * spec.phi_step_deg;
    const FamilyParams params(deg_to_rad(phi_deg), deg_to_rad(spec.theta_deg));
    const PureState psi = family_state(params);
    const DensityMatrix pair = to_density(psi, dims).reduce({0, 1});

    const MonogamyReport ef = check_ef_pair(pair);
    const MonogamyReport enp = check_en_pair(pair);
    const MonogamyReport ens = check_en_single(psi, dims);
    const MonogamyReport cs = check_c_single(pair);
    const MonogamyReport ckw = check_ckw(psi, dims, 0);

    SweepRow row;
    row.phi_deg = phi_deg;
    row.ef_internal = ef.internal_term;
    row.ef_external = ef.external_term;
    row.ef_sum = ef.internal_term + ef.external_term;
    row.en_internal = enp.internal_term;
    row.en_external_pair = enp.external_term;
    row.en_pair_sum = enp.internal_term + enp.external_term;
    row.en_cut_pure = negativity_pure_cut(psi, dims, pair_cut);
    row.g_en = ens.external_term;
    row.en_single_sum = ens.internal_term + ens.external_term;
    row.c_internal = cs.internal_term;
    row.c_cut_pure = concurrence_pure_cut(psi, dims, pair_cut);
    row.g_tilde_c = cs.external_term;
    row.c_single_sum = cs.internal_term + cs.external_term;
    row.ckw_lhs = ckw.internal_term;
    row.ckw_rhs = ckw.bound;
    row.three_tangle = ckw.slack;
    rows.push_back(row);
  }
  return rows;
}

std::string sweep_csv(const SweepSpec &spec) {
  const std::vector<SweepRow> rows = compute_sweep(spec);
  std::ostringstream out;
  for (int c = 0; c < kSweepWidth; ++c) {
    if (c > 0) out << ',';
    out << kSweepColumns[c];
  }
  out << '\n';
  for (const SweepRow &row : rows) {
    const std::vector<double> vals = row_values(row);
    for (int c = 0; c < kSweepWidth; ++c) {
      if (c > 0) out << ',';
      out << format_double(vals[c]);
    }
    out << '\n';
  }
  return out.str();
}

Json run_experiment(const ExperimentSpec &spec) {
  if (spec.phi_list_deg.empty()) {
    throw DomainError("experiment: angle list must not be empty");
  }
  for (double phi : spec.phi_list_deg) {
    if (phi < 0.0 || phi > 90.0) {
      throw DomainError("experiment: every angle must lie within [0, 90] degrees");
    }
  }
  if (spec.repeats < 1) {
    throw DomainError("experiment: repeats must be at least 1");
  }
  if (spec.tomo.counts_per_setting < 1) {
    throw DomainError("experiment: counts per setting must be at least 1");
  }

  const SubsystemDims dims = SubsystemDims::qubits(3);
  const CutSpec pair_ab{{0}, {1}};
  const CutSpec cut{{0, 1}, {2}};
  const ProjectorSet ps(3);

  Json out = Json::object();
  out["command"] = "experiment";
  out["master_seed"] = spec.tomo.seed;
  out["poisson"] = spec.poisson;
  out["repeats"] = spec.repeats;
  Json noise = Json::object();
  noise["visibility"] = spec.noise.visibility;
  noise["white_noise"] = spec.noise.white_noise;
  out["noise"] = noise;
  Json tomo = Json::object();
  tomo["counts_per_setting"] = spec.tomo.counts_per_setting;
  tomo["max_iterations"] = spec.tomo.max_iterations;
  tomo["gradient_tolerance"] = spec.tomo.gradient_tolerance;
  out["tomo"] = tomo;

  Json angles = Json::array();
  for (std::size_t ai = 0; ai < spec.phi_list_deg.size(); ++ai) {
    const double phi_deg = spec.phi_list_deg[ai];
    const PureState psi = family_state(FamilyParams(deg_to_rad(phi_deg)));
    const DensityMatrix ideal = to_density(psi, dims);
    const DensityMatrix truth = apply_noise(psi, spec.noise);
    const std::vector<double> probs = born_probs(truth, ps);

    std::vector<TrialOutcome> trials;
    trials.reserve(static_cast<std::size_t>(spec.repeats));
    for (int r = 0; r < spec.repeats; ++r) {
      TomoConfig cfg = spec.tomo;
      cfg.seed = SplitMix64::derive(spec.tomo.seed, static_cast<uint64_t>(ai),
                                    static_cast<uint64_t>(r));
      const std::vector<CountsRecord> counts =
          spec.poisson ? sample_counts(probs, ps, cfg) : expected_counts(probs, cfg);
      const MleResult fit = mle_reconstruct(counts, ps, cfg);
      const DensityMatrix pair = fit.rho.reduce({0, 1});

      const MonogamyReport ef = check_ef_pair(pair);
      const MonogamyReport enp = check_en_pair(pair);
      const MonogamyReport cs = check_c_single(pair);
      const double en_internal = negativity(pair, pair_ab);
      const double en_cut = negativity(fit.rho, cut);
      const double g_cut = g_neg(en_cut);

      TrialOutcome t;
      t.repeat = r;
      t.seed = cfg.seed;
      t.converged = fit.converged();
      t.stop = fit.stop;
      t.iterations = fit.iterations;
      t.gradient_norm = fit.gradient_norm;
      double *v = t.values;
      v[0] = fidelity(fit.rho, ideal);
      v[1] = fidelity(fit.rho, truth);
      v[2] = ef.internal_term;
      v[3] = ef.external_term;
      v[4] = ef.internal_term + ef.external_term;
      v[5] = enp.internal_term;
      v[6] = enp.external_term;
      v[7] = enp.internal_term + enp.external_term;
      v[8] = en_internal;
      v[9] = g_cut;
      v[10] = en_internal + g_cut;
      v[11] = en_cut;
      v[12] = cs.internal_term;
      v[13] = cs.external_term;
      v[14] = cs.internal_term + cs.external_term;
      trials.push_back(t);
    }

    Json angle = Json::object();
    angle["phi_deg"] = phi_deg;
    Json stats = Json::object();
    for (int s = 0; s < kNumTrialStats; ++s) {
      std::vector<double> xs;
      xs.reserve(trials.size());
      for (const TrialOutcome &t : trials) xs.push_back(t.values[s]);
      stats[kTrialStats[s]] = mean_std(xs);
    }
    angle["stats"] = stats;
    Json jtrials = Json::array();
    for (const TrialOutcome &t : trials) {
      Json jt = Json::object();
      jt["repeat"] = t.repeat;
      jt["seed"] = t.seed;
      jt["converged"] = t.converged;
      jt["stop"] = to_string(t.stop);
      jt["iterations"] = t.iterations;
      jt["gradient_norm"] = t.gradient_norm;
      for (int s = 0; s < kNumTrialStats; ++s) jt[kTrialStats[s]] = t.values[s];
      jtrials.push_back(jt);
    }
    angle["trials"] = jtrials;
    angles.push_back(angle);
  }
  out["angles"] = angles;
  return out;
}

Json run_check(const CheckSpec &spec) {
  const Json input = parse_json(read_text_file(spec.input_path), spec.input_path);
  const SubsystemDims dims = SubsystemDims::qubits(3);

  Json out = Json::object();
  out["command"] = "check";
  out["input"] = spec.input_path;
  out["pure"] = spec.pure;
  Json reports = Json::array();

  if (spec.pure) {
    const PureState psi = pure_from_json(input);
    if (psi.dim() != 8) {
      throw DomainError("check: pure input must be a three-qubit state (dim 8)");
    }
    const DensityMatrix pair = to_density(psi, dims).reduce({0, 1});
    reports.push_back(report_to_json(check_ckw(psi, dims, 0)));
    reports.push_back(report_to_json(check_ef_pair(pair)));
    reports.push_back(report_to_json(check_en_pair(pair)));
    reports.push_back(report_to_json(check_en_single(psi, dims)));
    reports.push_back(report_to_json(check_c_single(pair)));
  } else {
    const DensityMatrix rho = density_from_json(input);
    if (rho.dims().dims != std::vector<int>{2, 2, 2}) {
      throw DomainError("check: density input must carry dims [2, 2, 2]");
    }
    const DensityMatrix pair = rho.reduce({0, 1});
    reports.push_back(report_to_json(check_ef_pair(pair)));
    reports.push_back(report_to_json(check_en_pair(pair)));
    reports.push_back(report_to_json(check_c_single(pair)));
  }

  bool all = true;
  for (const Json &r : reports) all = all && r.at("satisfied").get<bool>();
  out["reports"] = reports;
  out["all_satisfied"] = all;
  return out;
}

Json run_oracle(const OracleSpec &spec) {
  if (spec.spectra < 1 || spec.samples < 1) {
    throw DomainError("oracle: spectra and samples must be at least 1");
  }
  if (spec.fuzz_pure < 0 || spec.fuzz_mixed < 0) {
    throw DomainError("oracle: fuzz sample counts must be nonnegative");
  }
  const std::vector<HermitianSpectrum> spectra = random_spectra(spec.spectra, spec.seed);
  const MemsCampaignResult mems = run_mems_campaign(spectra, spec.samples, spec.seed);
  const FuzzReport fuzz = run_inequality_fuzz(spec.fuzz_pure, spec.fuzz_mixed, spec.seed);

  Json out = Json::object();
  out["command"] = "oracle";
  out["seed"] = spec.seed;
  out["spectra"] = spec.spectra;
  out["unitaries_per_spectrum"] = mems.unitaries_per_spectrum;

  Json jm = Json::object();
  jm["max_violation"] = mems.max_violation;
  jm["max_gap"] = mems.max_gap;
  Json per = Json::array();
  for (const MemsSpectrumResult &s : mems.per_spectrum) {
    Json js = Json::object();
    Json spectrum = Json::array();
    for (double lam : s.spectrum) spectrum.push_back(lam);
    js["spectrum"] = spectrum;
    js["ef_closed"] = s.ef_closed;
    js["ef_observed"] = s.ef_observed;
    js["ef_violation"] = s.ef_violation;
    js["ef_gap"] = s.ef_gap;
    js["en_closed"] = s.en_closed;
    js["en_observed"] = s.en_observed;
    js["en_violation"] = s.en_violation;
    js["en_gap"] = s.en_gap;
    per.push_back(js);
  }
  jm["per_spectrum"] = per;
  out["mems"] = jm;

  Json jf = Json::object();
  jf["pure_samples"] = fuzz.pure_samples;
  jf["mixed_samples"] = fuzz.mixed_samples;
  jf["pure_min_slack_ckw"] = fuzz.pure_min_slack_ckw;
  jf["pure_min_slack_ef_pair"] = fuzz.pure_min_slack_ef_pair;
  jf["pure_min_slack_en_pair"] = fuzz.pure_min_slack_en_pair;
  jf["pure_min_slack_en_single"] = fuzz.pure_min_slack_en_single;
  jf["pure_min_slack_c_single"] = fuzz.pure_min_slack_c_single;
  jf["mixed_min_slack_ef_pair"] = fuzz.mixed_min_slack_ef_pair;
  jf["mixed_min_slack_c_single"] = fuzz.mixed_min_slack_c_single;
  out["fuzz"] = jf;
  return out;
}

void cmd_sweep(const SweepSpec &spec, const std::string &out_path) {
  write_text_file(out_path, sweep_csv(spec));
}

void cmd_experiment(const ExperimentSpec &spec, const std::string &out_path) {
  write_text_file(out_path, run_experiment(spec).dump(2) + "\n");
}

void cmd_check(const CheckSpec &spec, const std::string &out_path) {
  write_text_file(out_path, run_check(spec).dump(2) + "\n");
}

void cmd_oracle(const OracleSpec &spec, const std::string &out_path) {
  write_text_file(out_path, run_oracle(spec).dump(2) + "\n");
}

}  // namespace entmono
