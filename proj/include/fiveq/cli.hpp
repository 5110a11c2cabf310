// Copyright (c) 2026 The fiveq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "fiveq/reports.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

/// Command layer behind the CLI binary. Everything here is a pure function
/// of the RunConfig (given fixed seeds), so identical configs produce
/// byte-identical reports once timestamps are suppressed.
namespace fiveq {

struct RunConfig {
  std::string command;
  int n = 2;
  int k = 0;
  std::uint64_t seed = 1;
  int trials = -1;  // -1 picks the per-command default
  double tol = kDefaultTol;
  std::string out;  // empty writes to stdout
  std::string format = "json";
  bool no_timestamp = false;
  bool allow_large_n = false;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline void validate_config(const RunConfig& cfg) {
  static const std::vector<std::string> commands{
      "encode", "verify", "circuit-check", "simulate", "optimality",
      "report-all"};
  if (std::find(commands.begin(), commands.end(), cfg.command) ==
      commands.end()) {
    throw UsageError("unknown command '" + cfg.command + "'");
  }
  const int max_n = cfg.allow_large_n ? 8 : 5;
  if (cfg.n < 2 || cfg.n > max_n) {
    throw UsageError("n must be in 2..5 (2..8 with --allow-large-n)");
  }
  if (cfg.command == "encode" && (cfg.k < 0 || cfg.k >= cfg.n)) {
    throw UsageError("k must be in 0..n-1");
  }
  if (cfg.trials != -1 && cfg.trials < 1) {
    throw UsageError("trials must be >= 1");
  }
  if (!(cfg.tol > 0.0) || cfg.tol >= 1e-6) {
    throw UsageError("tol must lie in (0, 1e-6)");
  }
  if (cfg.format != "json" && cfg.format != "text") {
    throw UsageError("format must be 'json' or 'text'");
  }
}

inline void render_text(const Json& j, std::ostream& os,
                        const std::string& prefix = "") {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      render_text(value, os, prefix.empty() ? key : prefix + "." + key);
    }
  } else if (j.is_array()) {
    const bool scalars =
        std::all_of(j.begin(), j.end(),
                    [](const Json& e) { return !e.is_structured(); });
    if (scalars) {
      os << prefix << ": " << j.dump() << "\n";
    } else {
      for (size_t i = 0; i < j.size(); ++i) {
        render_text(j[i], os, prefix + "[" + std::to_string(i) + "]");
      }
    }
  } else {
    os << prefix << ": " << j.dump() << "\n";
  }
}

struct CommandOutput {
  std::string payload;
  int status = 0;
};

inline std::string serialize(const Json& j, const std::string& format) {
  if (format == "text") {
    std::ostringstream os;
    render_text(j, os);
    return os.str();
  }
  return j.dump(2) + "\n";
}

inline CommandOutput run_encode(const RunConfig& cfg) {
  const CodeParams params = make_params(cfg.n, cfg.tol);
  Json j = codeword_json(params, cfg.k, encode(params, cfg.k));
  return {serialize(j, cfg.format), 0};
}

inline CommandOutput run_verify(const RunConfig& cfg) {
  const CodeParams params = make_params(cfg.n, cfg.tol);
  const LambdaMatrix lam =
      compute_lambda(build_codebook(params), full_pauli_error_set(params));
  Json j = verify_report_json(lam, !cfg.no_timestamp);
  if (!cfg.no_timestamp) j["generated_at"] = iso_timestamp();
  return {serialize(j, cfg.format), lambda_status(lam) == "pass" ? 0 : 1};
}

inline CommandOutput run_circuit_check(const RunConfig& cfg) {
  const CodeParams params = make_params(cfg.n, cfg.tol);
  Json j = circuit_check_report_json(params);
  if (!cfg.no_timestamp) j["generated_at"] = iso_timestamp();
  return {serialize(j, cfg.format), j["status"] == "pass" ? 0 : 1};
}

inline CommandOutput run_simulate(const RunConfig& cfg) {
  const CodeParams params = make_params(cfg.n, cfg.tol);
  const int trials = cfg.trials == -1 ? 100 : cfg.trials;
  const Codebook cb = build_codebook(params);
  const RecoveryPlan plan =
      build_recovery(cb, full_pauli_error_set(params));

  std::ostringstream os;
  double min_fidelity = 1.0;
  int undecodable = 0;
  for (int t = 0; t < trials; ++t) {
    const SimulationTrial trial =
        run_simulation_trial(cb, plan, cfg.seed + static_cast<std::uint64_t>(t));
    min_fidelity = std::min(min_fidelity, trial.fidelity);
    if (trial.undecodable) ++undecodable;
    if (cfg.format == "text") {
      os << "trial seed=" << trial.seed << " reg=" << trial.reg
         << " fidelity=" << trial.fidelity << " syndrome="
         << (trial.undecodable ? "undecodable" : trial.syndrome) << "\n";
    } else {
      os << trial_json(trial).dump() << "\n";
    }
  }
  const bool pass = undecodable == 0 && min_fidelity >= 1.0 - kLambdaPassTol;
  Json summary{{"summary",
                Json{{"n", cfg.n},
                     {"trials", trials},
                     {"min_fidelity", min_fidelity},
                     {"undecodable_count", undecodable},
                     {"status", pass ? "pass" : "fail"}}}};
  if (!cfg.no_timestamp) summary["summary"]["generated_at"] = iso_timestamp();
  if (cfg.format == "text") {
    os << "summary: trials=" << trials << " min_fidelity=" << min_fidelity
       << " status=" << (pass ? "pass" : "fail") << "\n";
  } else {
    os << summary.dump() << "\n";
  }
  return {os.str(), pass ? 0 : 1};
}

inline CommandOutput run_optimality(const RunConfig& cfg) {
  const CodeParams params = make_params(cfg.n, cfg.tol);
  const int trials = cfg.trials == -1 ? 1000 : cfg.trials;
  Json j = optimality_report_json(falsifier_sweep(params, trials, cfg.seed));
  if (!cfg.no_timestamp) j["generated_at"] = iso_timestamp();
  return {serialize(j, cfg.format), j["status"] == "pass" ? 0 : 1};
}

inline CommandOutput run_report_all(const RunConfig& cfg) {
  Json all{{"command", "report-all"}, {"seed", cfg.seed}};
  if (!cfg.no_timestamp) all["generated_at"] = iso_timestamp();
  bool ok = true;
  for (int n = 2; n <= 5; ++n) {
    const CodeParams params = make_params(n, cfg.tol);
    Json section;

    const Codebook cb = build_codebook(params);
    const ErrorSet errors = full_pauli_error_set(params);
    const LambdaMatrix lam = compute_lambda(cb, errors);
    section["verify"] = verify_report_json(lam, !cfg.no_timestamp);
    ok = ok && lambda_status(lam) == "pass";

    section["circuit_check"] = circuit_check_report_json(params);
    ok = ok && section["circuit_check"]["status"] == "pass";

    const RecoveryPlan plan = build_recovery(cb, errors);
    double min_fidelity = 1.0;
    int undecodable = 0;
    const int sim_trials = cfg.trials == -1 ? 50 : cfg.trials;
    for (int t = 0; t < sim_trials; ++t) {
      const SimulationTrial trial = run_simulation_trial(
          cb, plan, cfg.seed + static_cast<std::uint64_t>(t));
      min_fidelity = std::min(min_fidelity, trial.fidelity);
      if (trial.undecodable) ++undecodable;
    }
    const bool sim_pass =
        undecodable == 0 && min_fidelity >= 1.0 - kLambdaPassTol;
    section["simulate"] =
        Json{{"trials", sim_trials},
             {"min_fidelity", min_fidelity},
             {"undecodable_count", undecodable},
             {"corrected_dimension", total_corrected_dimension(plan)},
             {"leftover_rank", plan.leftover_projector_rank},
             {"status", sim_pass ? "pass" : "fail"}};
    ok = ok && sim_pass;

    const int falsifier_count = n == 2 ? 1000 : (n == 3 ? 200 : 50);
    section["optimality"] =
        optimality_report_json(falsifier_sweep(params, falsifier_count, cfg.seed));
    ok = ok && section["optimality"]["status"] == "pass";

    if (n == 2) {
      const PerfectCodeReport pc = perfect_code_equivalence_report(params);
      section["perfect_code"] = perfect_code_report_json(pc);
      ok = ok && pc.equivalence_established;
    }
    all["n=" + std::to_string(n)] = std::move(section);
  }
  all["overall_status"] = ok ? "pass" : "fail";
  return {serialize(all, cfg.format), ok ? 0 : 1};
}

/// Dispatches a validated config; returns the process exit status
/// (0 success, 1 threshold violation, 2 usage error).
inline int run(const RunConfig& cfg, std::ostream& diagnostics = std::cerr) {
  try {
    validate_config(cfg);
  } catch (const UsageError& e) {
    diagnostics << "usage error: " << e.what() << "\n";
    return 2;
  }
  if (cfg.n > 5) {
    diagnostics << "warning: n=" << cfg.n
                << " is beyond the tested range; sweeps over the full Pauli "
                   "set may take minutes and use substantial memory\n";
  }
  CommandOutput result;
  if (cfg.command == "encode") {
    result = run_encode(cfg);
  } else if (cfg.command == "verify") {
    result = run_verify(cfg);
  } else if (cfg.command == "circuit-check") {
    result = run_circuit_check(cfg);
  } else if (cfg.command == "simulate") {
    result = run_simulate(cfg);
  } else if (cfg.command == "optimality") {
    result = run_optimality(cfg);
  } else {
    result = run_report_all(cfg);
  }
  if (cfg.out.empty()) {
    std::cout << result.payload;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      diagnostics << "usage error: cannot open output file '" << cfg.out
                  << "'\n";
      return 2;
    }
    file << result.payload;
  }
  if (result.status != 0) {
    diagnostics << "threshold violation; see report\n";
  }
  return result.status;
}

}  // namespace fiveq
