// Copyright (c) 2026 The fiveq authors
// SPDX-License-Identifier: Apache-2.0

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>

using namespace fiveq;

TEST_CASE("qubit shift and clock are the Pauli matrices", "[pauli]") {
  DenseOperator x(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  CHECK((shift_op(2) - x).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((clock_op(2) - z).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("shift has order n", "[pauli]") {
  for (int n = 2; n <= 5; ++n) {
    DenseOperator acc = DenseOperator::Identity(n, n);
    for (int i = 0; i < n; ++i) acc = shift_op(n) * acc;
    CHECK((acc - DenseOperator::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("clock-shift commutation", "[pauli]") {
  for (int n : {2, 3, 5}) {
    const DenseOperator lhs = clock_op(n) * shift_op(n);
    const DenseOperator rhs = primitive_root(n) * (shift_op(n) * clock_op(n));
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("pauli_op equals the shift/clock product", "[pauli]") {
  for (int n : {2, 3, 4}) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        DenseOperator prod = DenseOperator::Identity(n, n);
        for (int i = 0; i < a; ++i) prod = shift_op(n) * prod;
        for (int i = 0; i < b; ++i) prod = prod * clock_op(n);
        CHECK((pauli_op(n, a, b) - prod).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }
}

TEST_CASE("pauli products are trace-orthogonal", "[pauli]") {
  for (int n : {2, 3}) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          for (int d = 0; d < n; ++d) {
            const Complex tr =
                (pauli_op(n, a, b).adjoint() * pauli_op(n, c, d)).trace();
            const double expected = (a == c && b == d) ? n : 0.0;
            CHECK(std::abs(tr - expected) < 1e-12);
          }
        }
      }
    }
  }
}

TEST_CASE("full error set size and layout", "[pauli]") {
  std::map<int, size_t> expected{{2, 16}, {3, 41}, {5, 121}};
  for (const auto& [n, count] : expected) {
    const ErrorSet set = full_pauli_error_set(make_params(n));
    CHECK(set.size() == count);
    CHECK(set.errors.front().label == "I");
    std::vector<std::string> labels;
    for (const RegisterError& e : set.errors) labels.push_back(e.label);
    std::sort(labels.begin(), labels.end());
    CHECK(std::adjacent_find(labels.begin(), labels.end()) == labels.end());
  }
}

TEST_CASE("matrix unit errors have a single unit entry", "[pauli]") {
  const DenseOperator m = operator_of(matrix_unit_error(2, 1, 2), 3);
  CHECK(std::abs(m(1, 2) - 1.0) < 1e-15);
  CHECK(m.cwiseAbs().sum() == 1.0);
}

TEST_CASE("apply_error matches the materialized embedding", "[pauli]") {
  std::mt19937_64 rng(99);
  for (int n : {2, 3}) {
    const ErrorSet set = full_pauli_error_set(make_params(n));
    QuditState s = zero_state(n, 5);
    for (long i = 0; i < s.dim(); ++i) s.amps[i] = complex_gaussian(rng);
    for (const RegisterError& e : set.errors) {
      const Eigen::VectorXcd direct = apply_error(e, s).amps;
      const Eigen::VectorXcd embedded =
          embed_on_register(operator_of(e, n), e.reg, 5) * s.amps;
      CHECK((direct - embedded).cwiseAbs().maxCoeff() < 1e-12);
    }
    // a non-Pauli kind as well
    const RegisterError arb = random_single_register_error(make_params(n), 7);
    const Eigen::VectorXcd direct = apply_error(arb, s).amps;
    const Eigen::VectorXcd embedded =
        embed_on_register(operator_of(arb, n), arb.reg, 5) * s.amps;
    CHECK((direct - embedded).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("random unitaries are unitary and deterministic", "[pauli]") {
  for (int n = 2; n <= 5; ++n) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const RegisterError e =
          random_single_register_error(make_params(n), seed);
      const DenseOperator u = operator_of(e, n);
      CHECK((u.adjoint() * u - DenseOperator::Identity(n, n))
                .cwiseAbs()
                .maxCoeff() < 1e-9);
    }
  }
  const RegisterError a = random_single_register_error(make_params(3), 42);
  const RegisterError b = random_single_register_error(make_params(3), 42);
  CHECK(a.reg == b.reg);
  CHECK((operator_of(a, 3) - operator_of(b, 3)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("random error register histogram is uniform", "[pauli]") {
  // 10^4 draws, multinomial 5-sigma band around 2000: sigma = 40
  std::array<int, 6> counts{};
  const CodeParams p = make_params(2);
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    ++counts[static_cast<size_t>(random_single_register_error(p, seed).reg)];
  }
  for (int reg = 1; reg <= 5; ++reg) {
    CHECK(std::abs(counts[static_cast<size_t>(reg)] - 2000) < 200);
  }
}

TEST_CASE("arbitrary errors reject non-finite operators", "[pauli]") {
  DenseOperator bad = DenseOperator::Zero(2, 2);
  bad(0, 0) = Complex{std::numeric_limits<double>::quiet_NaN(), 0.0};
  CHECK_THROWS_AS(arbitrary_error(1, bad, "bad"), std::invalid_argument);
}
