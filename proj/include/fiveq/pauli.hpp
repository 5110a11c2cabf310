// Copyright (c) 2026 The fiveq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "fiveq/core.hpp"

#include <cstdint>
#include <random>
#include <variant>

/// Generalized Pauli operators and single-register error sets.
///
/// shift X: |m> -> |m+1 mod n>,  clock Z: |m> -> omega^m |m>.
/// The n^2 products X^a Z^b are trace-orthogonal and span all one-register
/// operators, so verifying them verifies every single-register error.
namespace fiveq {

inline DenseOperator shift_op(int n) {
  if (n < 2) throw std::invalid_argument("shift_op: n must be >= 2");
  DenseOperator x = DenseOperator::Zero(n, n);
  for (int m = 0; m < n; ++m) {
    x((m + 1) % n, m) = Complex{1.0, 0.0};
  }
  return x;
}

inline DenseOperator clock_op(int n) {
  if (n < 2) throw std::invalid_argument("clock_op: n must be >= 2");
  DenseOperator z = DenseOperator::Zero(n, n);
  for (int m = 0; m < n; ++m) {
    z(m, m) = omega_pow(n, m);
  }
  return z;
}

/// X^a Z^b: |m> -> omega^{b m} |m+a>.
inline DenseOperator pauli_op(int n, int a, int b) {
  DenseOperator op = DenseOperator::Zero(n, n);
  for (int m = 0; m < n; ++m) {
    op((m + a) % n, m) = omega_pow(n, static_cast<long long>(b) * m);
  }
  return op;
}

struct PauliKind {
  int a = 0;  // shift exponent
  int b = 0;  // clock exponent
};

struct MatrixUnitKind {
  int i0 = 0;  // row
  int j0 = 0;  // column
};

struct ArbitraryKind {
  DenseOperator op;
};

/// A single-register error: which register it acts on plus the operator.
struct RegisterError {
  int reg = 1;  // 1..5
  std::variant<PauliKind, MatrixUnitKind, ArbitraryKind> kind;
  std::string label;
};

inline RegisterError identity_error() {
  return RegisterError{1, PauliKind{0, 0}, "I"};
}

inline RegisterError pauli_error(int reg, int a, int b) {
  return RegisterError{reg, PauliKind{a, b},
                       "X^" + std::to_string(a) + " Z^" + std::to_string(b) +
                           " @ reg " + std::to_string(reg)};
}

inline RegisterError matrix_unit_error(int reg, int i0, int j0) {
  return RegisterError{reg, MatrixUnitKind{i0, j0},
                       "E(" + std::to_string(i0) + "," + std::to_string(j0) +
                           ") @ reg " + std::to_string(reg)};
}

inline RegisterError arbitrary_error(int reg, DenseOperator op,
                                     std::string label) {
  if (!all_finite(op)) {
    throw std::invalid_argument("arbitrary_error: operator has NaN/Inf");
  }
  return RegisterError{reg, ArbitraryKind{std::move(op)}, std::move(label)};
}

/// The error's n x n single-register matrix.
inline DenseOperator operator_of(const RegisterError& e, int n) {
  if (const auto* p = std::get_if<PauliKind>(&e.kind)) {
    return pauli_op(n, p->a, p->b);
  }
  if (const auto* u = std::get_if<MatrixUnitKind>(&e.kind)) {
    DenseOperator m = DenseOperator::Zero(n, n);
    m(u->i0, u->j0) = Complex{1.0, 0.0};
    return m;
  }
  return std::get<ArbitraryKind>(e.kind).op;
}

inline QuditState apply_error(const RegisterError& e, const QuditState& s) {
  if (const auto* p = std::get_if<PauliKind>(&e.kind)) {
    if (p->a == 0 && p->b == 0) return s;  // identity regardless of register
    return apply_pauli_on_register(p->a, p->b, e.reg, s);
  }
  return apply_on_register(operator_of(e, s.n), e.reg, s);
}

/// Ordered error list; the identity always comes first.
struct ErrorSet {
  CodeParams params;
  std::vector<RegisterError> errors;

  size_t size() const { return errors.size(); }
};

/// {I} plus X^a Z^b on each register for all (a,b) != (0,0).
/// Size 1 + 5(n^2 - 1).
inline ErrorSet full_pauli_error_set(const CodeParams& params) {
  ErrorSet set{params, {}};
  const int n = params.n;
  set.errors.reserve(1 + 5 * static_cast<size_t>(n * n - 1));
  set.errors.push_back(identity_error());
  for (int reg = 1; reg <= 5; ++reg) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a == 0 && b == 0) continue;
        set.errors.push_back(pauli_error(reg, a, b));
      }
    }
  }
  return set;
}

/// Deterministic standard normal from raw 64-bit draws (Box-Muller), so
/// seeded results do not depend on the standard library's distribution
/// implementation.
inline double gaussian_sample(std::mt19937_64& rng) {
  const double scale = 1.0 / 9007199254740992.0;  // 2^-53
  double u1 = (static_cast<double>(rng() >> 11) + 0.5) * scale;
  double u2 = static_cast<double>(rng() >> 11) * scale;
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

inline Complex complex_gaussian(std::mt19937_64& rng) {
  double re = gaussian_sample(rng);
  double im = gaussian_sample(rng);
  return Complex{re, im};
}

/// Haar-like random unitary: modified Gram-Schmidt on a complex Gaussian
/// matrix. Adequate wherever only unitarity and seed determinism matter.
inline DenseOperator random_unitary(int n, std::mt19937_64& rng) {
  DenseOperator g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      g(i, j) = complex_gaussian(rng);
    }
  }
  for (int col = 0; col < n; ++col) {
    for (int prev = 0; prev < col; ++prev) {
      g.col(col) -= g.col(prev).dot(g.col(col)) * g.col(prev);
    }
    g.col(col) /= g.col(col).norm();
  }
  return g;
}

/// Random unitary on a uniformly chosen register; deterministic per seed.
inline RegisterError random_single_register_error(const CodeParams& params,
                                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int reg = 1 + static_cast<int>(rng() % 5);
  DenseOperator u = random_unitary(params.n, rng);
  return arbitrary_error(reg, std::move(u),
                         "U(seed=" + std::to_string(seed) + ") @ reg " +
                             std::to_string(reg));
}

}  // namespace fiveq
