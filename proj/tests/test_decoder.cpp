// Copyright (c) 2026 The fiveq authors
// SPDX-License-Identifier: Apache-2.0

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace fiveq;

TEST_CASE("syndrome subspaces tile the space at n=2", "[decoder]") {
  const CodeParams p = make_params(2);
  const RecoveryPlan plan =
      build_recovery(build_codebook(p), full_pauli_error_set(p));
  CHECK(plan.syndromes.size() == 16);
  CHECK(total_corrected_dimension(plan) == 32);
  CHECK(plan.leftover_projector_rank == 0);
}

TEST_CASE("corrected dimension census at n=3", "[decoder]") {
  const CodeParams p = make_params(3);
  const RecoveryPlan plan =
      build_recovery(build_codebook(p), full_pauli_error_set(p));
  CHECK(plan.syndromes.size() == 41);
  CHECK(total_corrected_dimension(plan) == 123);
  CHECK(plan.leftover_projector_rank == 120);
  // spectrum is reported, not asserted degenerate or not
  CHECK(plan.lambda_spectrum.size() == 41);
}

TEST_CASE("all syndrome basis vectors are orthonormal", "[decoder]") {
  const CodeParams p = make_params(3);
  const RecoveryPlan plan =
      build_recovery(build_codebook(p), full_pauli_error_set(p));
  Eigen::MatrixXcd all(power_long(3, 5), total_corrected_dimension(plan));
  long col = 0;
  for (const SyndromeSubspace& sub : plan.syndromes) {
    all.middleCols(col, sub.basis.cols()) = sub.basis;
    col += sub.basis.cols();
  }
  const Eigen::MatrixXcd gram = all.adjoint() * all;
  CHECK((gram - Eigen::MatrixXcd::Identity(col, col)).cwiseAbs().maxCoeff() <
        1e-8);
}

TEST_CASE("identity error decodes to the identity syndrome", "[decoder]") {
  const CodeParams p = make_params(2);
  const Codebook cb = build_codebook(p);
  const RecoveryPlan plan = build_recovery(cb, full_pauli_error_set(p));
  const QuditState psi = testing::random_encoded_state(cb, 3);
  const DecodeResult res = decode(plan, psi);
  CHECK(!res.undecodable);
  CHECK(res.syndrome_label == "I");
  CHECK(res.syndrome_index == 0);
  CHECK(logical_fidelity(res.state, psi) > 1.0 - 1e-12);
}

TEST_CASE("shift error on register 3 is corrected", "[decoder]") {
  const CodeParams p = make_params(2);
  const Codebook cb = build_codebook(p);
  const RecoveryPlan plan = build_recovery(cb, full_pauli_error_set(p));
  QuditState psi = zero_state(2, 5);
  psi.amps = (cb.words[0].amps + cb.words[1].amps) / std::sqrt(2.0);
  const QuditState corrupted = apply_error(pauli_error(3, 1, 0), psi);
  const DecodeResult res = decode(plan, corrupted);
  CHECK(!res.undecodable);
  CHECK(res.syndrome_label == "X^1 Z^0 @ reg 3");
  CHECK(logical_fidelity(res.state, psi) >= 1.0 - 1e-9);
}

TEST_CASE("all pauli errors round-trip at n=2 and n=3", "[decoder]") {
  for (int n : {2, 3}) {
    const CodeParams p = make_params(n);
    const Codebook cb = build_codebook(p);
    const ErrorSet errors = full_pauli_error_set(p);
    const RecoveryPlan plan = build_recovery(cb, errors);
    std::vector<QuditState> states;
    for (int k = 0; k < n; ++k) states.push_back(cb.words[static_cast<size_t>(k)]);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      states.push_back(testing::random_encoded_state(cb, seed));
    }
    for (const RegisterError& e : errors.errors) {
      for (const QuditState& psi : states) {
        const DecodeResult res = decode(plan, apply_error(e, psi));
        CAPTURE(n, e.label);
        REQUIRE(!res.undecodable);
        CHECK(logical_fidelity(res.state, psi) >= 1.0 - 1e-9);
      }
    }
  }
}

TEST_CASE("random unitary on register 5 is corrected at n=3", "[decoder]") {
  const CodeParams p = make_params(3);
  const Codebook cb = build_codebook(p);
  const RecoveryPlan plan = build_recovery(cb, full_pauli_error_set(p));
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    const QuditState psi = testing::random_encoded_state(cb, rng());
    const DenseOperator u = random_unitary(3, rng);
    const QuditState corrupted = apply_on_register(u, 5, psi);
    const DecodeResult res = decode(plan, corrupted);
    REQUIRE(!res.undecodable);
    CHECK(logical_fidelity(res.state, psi) >= 1.0 - 1e-9);
  }
}

TEST_CASE("weight-2 errors are not corrected and say so", "[decoder]") {
  for (int n : {2, 3}) {
    const CodeParams p = make_params(n);
    const Codebook cb = build_codebook(p);
    const RecoveryPlan plan = build_recovery(cb, full_pauli_error_set(p));
    const QuditState psi = cb.words[0];
    QuditState corrupted = apply_error(pauli_error(1, 1, 0), psi);
    corrupted = apply_error(pauli_error(2, 1, 0), corrupted);
    const DecodeResult res = decode(plan, corrupted);
    if (res.undecodable) {
      SUCCEED("weight-2 error flagged undecodable");
    } else {
      const double f = logical_fidelity(res.state, psi);
      INFO("weight-2 error decoded with fidelity " << f << " at n=" << n);
      CHECK(f < 0.99);
    }
  }
}

TEST_CASE("recovery refuses an invalid codebook", "[decoder]") {
  const CodeParams p = make_params(2);
  Codebook cb = build_codebook(p);
  cb.words[0].amps[0] = Complex{0.0, 0.0};
  CHECK_THROWS_AS(build_recovery(cb, full_pauli_error_set(p)),
                  std::runtime_error);
}

TEST_CASE("recovery handles a non-identity lambda", "[decoder]") {
  // {I, X@1, Z@1, (X+Z)/sqrt(2)@1} has lambda with off-diagonal weight, so
  // the eigenbasis route is exercised; one eigenvalue collapses to zero.
  const CodeParams p = make_params(2);
  const Codebook cb = build_codebook(p);
  const DenseOperator mix = (shift_op(2) + clock_op(2)) / std::sqrt(2.0);
  ErrorSet set{p, {identity_error(), pauli_error(1, 1, 0),
                   pauli_error(1, 0, 1),
                   arbitrary_error(1, mix, "(X+Z)/sqrt2 @ reg 1")}};
  const RecoveryPlan plan = build_recovery(cb, set);
  CHECK(plan.lambda_identity_deviation > 0.5);
  CHECK(plan.syndromes.size() == 3);  // rank of the 4x4 lambda

  // errors inside the corrected span are recovered
  const QuditState psi = testing::random_encoded_state(cb, 17);
  for (const DenseOperator& err :
       {shift_op(2), clock_op(2), mix,
        DenseOperator((shift_op(2) - clock_op(2)) / std::sqrt(2.0))}) {
    const DecodeResult res = decode(plan, apply_on_register(err, 1, psi));
    REQUIRE(!res.undecodable);
    CHECK(logical_fidelity(res.state, psi) >= 1.0 - 1e-9);
  }

  // an error on another register is orthogonal to every syndrome subspace
  const DecodeResult res = decode(plan, apply_error(pauli_error(2, 1, 0), psi));
  CHECK(res.undecodable);
  CHECK(res.syndrome_index == -1);
}

TEST_CASE("logical fidelity", "[decoder]") {
  const CodeParams p = make_params(3);
  const Codebook cb = build_codebook(p);
  CHECK(logical_fidelity(cb.words[0], cb.words[0]) ==
        Catch::Approx(1.0).margin(1e-12));
  CHECK(logical_fidelity(cb.words[0], cb.words[1]) ==
        Catch::Approx(0.0).margin(1e-12));

  QuditState phased = cb.words[0];
  phased.amps *= omega_pow(3, 1);
  CHECK(logical_fidelity(phased, cb.words[0]) ==
        Catch::Approx(1.0).margin(1e-12));

  QuditState zero = zero_state(3, 5);
  CHECK_THROWS_AS(logical_fidelity(zero, cb.words[0]),
                  std::invalid_argument);
  QuditState four = zero_state(3, 4);
  CHECK_THROWS_AS(logical_fidelity(four, cb.words[0]),
                  std::invalid_argument);
}

TEST_CASE("decode rejects zero-norm input", "[decoder]") {
  const CodeParams p = make_params(2);
  const RecoveryPlan plan =
      build_recovery(build_codebook(p), full_pauli_error_set(p));
  CHECK_THROWS_AS(decode(plan, zero_state(2, 5)), std::invalid_argument);
}
