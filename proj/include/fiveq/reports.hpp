// Copyright (c) 2026 The fiveq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "fiveq/circuit.hpp"
#include "fiveq/decoder.hpp"
#include "fiveq/lambda.hpp"
#include "fiveq/optimality.hpp"
#include "fiveq/perfect_code.hpp"

#include <json.hpp>

#include <ctime>

/// JSON report builders shared by the CLI and the test suites.
namespace fiveq {

using Json = nlohmann::ordered_json;

inline std::string iso_timestamp() {
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&now));
  return buf;
}

/// { "n": ..., "k": ..., "amps": [[re, im], ...] } in basis-index order.
inline Json codeword_json(const CodeParams& params, int k,
                          const QuditState& word) {
  Json amps = Json::array();
  for (long i = 0; i < word.dim(); ++i) {
    amps.push_back({word.amps[i].real(), word.amps[i].imag()});
  }
  return Json{{"n", params.n}, {"k", k}, {"amps", std::move(amps)}};
}

inline QuditState codeword_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  QuditState s = zero_state(n, 5);
  const auto& amps = j.at("amps");
  if (static_cast<long>(amps.size()) != s.dim()) {
    throw std::invalid_argument("codeword_from_json: amplitude count");
  }
  for (long i = 0; i < s.dim(); ++i) {
    const auto& pair = amps[static_cast<size_t>(i)];
    s.amps[i] = Complex{pair[0].get<double>(), pair[1].get<double>()};
  }
  return s;
}

inline Json verify_report_json(const LambdaMatrix& lam, bool with_timing) {
  Json j{{"n", lam.params.n},
         {"error_count", lam.error_labels.size()},
         {"diag_residual", lam.diag_residual},
         {"offdiag_residual", lam.offdiag_residual},
         {"lambda_hermiticity_residual", lam.hermiticity_residual},
         {"worst_pair",
          Json{{"labels", {lam.worst_pair.label_a, lam.worst_pair.label_b}},
               {"k", lam.worst_pair.k},
               {"k_prime", lam.worst_pair.k_prime},
               {"value", lam.worst_pair.value}}},
         {"status", lambda_status(lam)}};
  if (with_timing) j["elapsed_seconds"] = lam.elapsed_seconds;
  return j;
}

inline Json gate_json(const Gate& g) {
  switch (g.kind) {
    case Gate::Kind::GenCnot:
      return Json{{"gate", "gen_cnot"}, {"args", {g.control, g.target, g.sign}}};
    case Gate::Kind::QuditDft:
      return Json{{"gate", "qudit_dft"}, {"args", {g.target}}};
    case Gate::Kind::CtrlPhase:
      return Json{{"gate", "ctrl_phase"}, {"args", {g.control, g.target}}};
    case Gate::Kind::LocalPerm: {
      Json args = Json::array();
      args.push_back(g.target);
      args.push_back(g.perm);
      return Json{{"gate", "local_perm"}, {"args", std::move(args)}};
    }
    case Gate::Kind::LocalUnitary: {
      Json rows = Json::array();
      for (long r = 0; r < g.matrix.rows(); ++r) {
        Json row = Json::array();
        for (long c = 0; c < g.matrix.cols(); ++c) {
          row.push_back({g.matrix(r, c).real(), g.matrix(r, c).imag()});
        }
        rows.push_back(std::move(row));
      }
      return Json{{"gate", "local_unitary"},
                  {"args", {g.target}},
                  {"matrix", std::move(rows)}};
    }
  }
  throw std::logic_error("gate_json: unknown gate kind");
}

inline Json circuit_json(const Circuit& c) {
  Json gates = Json::array();
  for (const Gate& g : c.gates) gates.push_back(gate_json(g));
  return Json{{"n", c.params.n}, {"gates", std::move(gates)}};
}

/// Per-k deviation of the circuit-encoded state from the formula encoder,
/// with global phase included: |<formula|circuit> - 1|.
inline Json circuit_check_report_json(const CodeParams& params) {
  const Circuit circuit = build_encoding_circuit(params);
  Json per_k = Json::array();
  double worst = 0.0;
  for (int k = 0; k < params.n; ++k) {
    const std::array<int, 5> digits{k, 0, 0, 0, 0};
    const QuditState from_circuit =
        apply_circuit(circuit, basis_state(params.n, 5, digits));
    const QuditState from_formula = encode(params, k);
    const double dev =
        std::abs(inner_product(from_formula, from_circuit) - 1.0);
    worst = std::max(worst, dev);
    per_k.push_back(Json{{"k", k}, {"overlap_deviation", dev}});
  }
  return Json{{"n", params.n},
              {"gate_count", circuit.gates.size()},
              {"unitary_residual", circuit_unitary_check(circuit)},
              {"per_k", std::move(per_k)},
              {"max_overlap_deviation", worst},
              {"status", worst < kLambdaPassTol ? "pass" : "fail"}};
}

inline Json optimality_report_json(const FalsifierResult& r) {
  return Json{{"n", r.n},
              {"candidates", r.candidates},
              {"min_joint_residual", r.min_joint_residual},
              {"argmin_seed", r.argmin_seed},
              {"status", r.min_joint_residual > 1e-3 ? "pass" : "fail"}};
}

inline Json perfect_code_report_json(const PerfectCodeReport& r) {
  Json candidates = Json::array();
  for (const PerfectCodeCandidate& c : r.candidates) {
    candidates.push_back(
        Json{{"name", c.name},
             {"permutation", c.permutation},
             {"dev_vs_logical_variant", c.dev_vs_logical_variant},
             {"dev_vs_constant_variant", c.dev_vs_constant_variant},
             {"matches_logical", c.matches_logical},
             {"matches_constant", c.matches_constant},
             {"constant_mismatch_is_reg1_shift",
              c.constant_mismatch_is_reg1_shift},
             {"lambda_max_diff_logical", c.lambda_max_diff_logical},
             {"lambda_max_diff_constant", c.lambda_max_diff_constant}});
  }
  return Json{
      {"matching_candidate", r.matching_candidate},
      {"equivalence_established", r.equivalence_established},
      {"reference_residuals",
       Json{{"logical_variant",
             {r.logical_variant_diag_residual,
              r.logical_variant_offdiag_residual}},
            {"constant_variant",
             {r.constant_variant_diag_residual,
              r.constant_variant_offdiag_residual}}}},
      {"candidates", std::move(candidates)}};
}

struct SimulationTrial {
  std::uint64_t seed = 0;
  int reg = 0;
  std::string error_kind;
  double fidelity = 0.0;
  std::string syndrome;
  bool undecodable = false;
};

inline Json trial_json(const SimulationTrial& t) {
  return Json{{"seed", t.seed},
              {"register", t.reg},
              {"error_kind", t.error_kind},
              {"fidelity", t.fidelity},
              {"syndrome", t.undecodable ? "undecodable" : t.syndrome}};
}

/// One decoder Monte-Carlo trial: a seeded random single-register unitary
/// applied to a seeded random logical superposition.
inline SimulationTrial run_simulation_trial(const Codebook& cb,
                                            const RecoveryPlan& plan,
                                            std::uint64_t seed) {
  const int n = cb.params.n;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  Eigen::VectorXcd logical(n);
  for (int i = 0; i < n; ++i) logical(i) = complex_gaussian(rng);
  logical /= logical.norm();

  QuditState encoded = zero_state(n, 5);
  for (int k = 0; k < n; ++k) {
    encoded.amps += logical(k) * cb.words[static_cast<size_t>(k)].amps;
  }
  const RegisterError err = random_single_register_error(cb.params, seed);
  const QuditState corrupted = apply_error(err, encoded);
  const DecodeResult res = decode(plan, corrupted);

  SimulationTrial t;
  t.seed = seed;
  t.reg = err.reg;
  t.error_kind = "random_unitary";
  t.syndrome = res.syndrome_label;
  t.undecodable = res.undecodable;
  t.fidelity = res.undecodable ? 0.0 : logical_fidelity(res.state, encoded);
  return t;
}

}  // namespace fiveq
