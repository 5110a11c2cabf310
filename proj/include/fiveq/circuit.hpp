// Copyright (c) 2026 The fiveq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "fiveq/code.hpp"

#include <cstdint>
#include <random>
#include <set>

/// Gate-level encoder.
///
/// Gate vocabulary over five qudit registers:
///   gen_cnot(c, t, s):  |c>|t> -> |c>|t + s*c mod n>
///   qudit_dft(t):       |m> -> n^{-1/2} sum_j omega^{+m j} |j>
///   ctrl_phase(a, b):   |x>|y> -> omega^{x y} |x>|y>
///   local_perm(t, pi):  |m> -> |pi(m)>  (pi a bijection on 0..n-1)
///   local_unitary(t,M): arbitrary one-register matrix (mainly for tests)
///
/// The DFT kernel sign is +, which is what makes the accumulated encoder
/// phase come out as omega^{k(p+q+r)} with no compensating factors.
namespace fiveq {

struct Gate {
  enum class Kind { GenCnot, QuditDft, CtrlPhase, LocalPerm, LocalUnitary };
  Kind kind = Kind::GenCnot;
  int control = 0;  // GenCnot control; CtrlPhase first register
  int target = 0;
  int sign = 1;               // GenCnot only
  std::vector<int> perm;      // LocalPerm only
  DenseOperator matrix;       // LocalUnitary only

  static Gate gen_cnot(int control, int target, int sign = 1) {
    if (sign != 1 && sign != -1) {
      throw std::invalid_argument("gen_cnot: sign must be +1 or -1");
    }
    Gate g;
    g.kind = Kind::GenCnot;
    g.control = control;
    g.target = target;
    g.sign = sign;
    return g;
  }
  static Gate qudit_dft(int target) {
    Gate g;
    g.kind = Kind::QuditDft;
    g.target = target;
    return g;
  }
  static Gate ctrl_phase(int reg_a, int reg_b) {
    Gate g;
    g.kind = Kind::CtrlPhase;
    g.control = reg_a;
    g.target = reg_b;
    return g;
  }
  static Gate local_perm(int target, std::vector<int> perm) {
    Gate g;
    g.kind = Kind::LocalPerm;
    g.target = target;
    g.perm = std::move(perm);
    return g;
  }
  static Gate local_unitary(int target, DenseOperator m) {
    Gate g;
    g.kind = Kind::LocalUnitary;
    g.target = target;
    g.matrix = std::move(m);
    return g;
  }
};

inline DenseOperator dft_op(int n) {
  DenseOperator f(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j) {
    for (int m = 0; m < n; ++m) {
      f(j, m) = scale * omega_pow(n, static_cast<long long>(j) * m);
    }
  }
  return f;
}

inline void check_gate_register(int reg, int registers, const char* what) {
  if (reg < 1 || reg > registers) {
    throw std::out_of_range(std::string(what) + ": register index out of range");
  }
}

inline QuditState apply_gate(const CodeParams& params, const Gate& g,
                             const QuditState& s) {
  if (s.n != params.n) {
    throw std::invalid_argument("apply_gate: state/params mismatch");
  }
  const int n = s.n;
  switch (g.kind) {
    case Gate::Kind::GenCnot: {
      check_gate_register(g.control, s.registers, "gen_cnot");
      check_gate_register(g.target, s.registers, "gen_cnot");
      if (g.control == g.target) {
        throw std::invalid_argument("gen_cnot: control == target");
      }
      const long cstride = power_long(n, s.registers - g.control);
      const long tstride = power_long(n, s.registers - g.target);
      QuditState out = zero_state(n, s.registers);
      for (long idx = 0; idx < s.dim(); ++idx) {
        const int c = static_cast<int>((idx / cstride) % n);
        const int t = static_cast<int>((idx / tstride) % n);
        const int t2 = ((t + g.sign * c) % n + n) % n;
        out.amps[idx + (t2 - t) * tstride] = s.amps[idx];
      }
      return out;
    }
    case Gate::Kind::QuditDft:
      check_gate_register(g.target, s.registers, "qudit_dft");
      return apply_on_register(dft_op(n), g.target, s);
    case Gate::Kind::CtrlPhase: {
      check_gate_register(g.control, s.registers, "ctrl_phase");
      check_gate_register(g.target, s.registers, "ctrl_phase");
      const long astride = power_long(n, s.registers - g.control);
      const long bstride = power_long(n, s.registers - g.target);
      QuditState out = s;
      for (long idx = 0; idx < s.dim(); ++idx) {
        const int x = static_cast<int>((idx / astride) % n);
        const int y = static_cast<int>((idx / bstride) % n);
        out.amps[idx] *= omega_pow(n, static_cast<long long>(x) * y);
      }
      return out;
    }
    case Gate::Kind::LocalPerm: {
      check_gate_register(g.target, s.registers, "local_perm");
      if (static_cast<int>(g.perm.size()) != n) {
        throw std::invalid_argument("local_perm: permutation size != n");
      }
      std::vector<bool> seen(static_cast<size_t>(n), false);
      for (int v : g.perm) {
        if (v < 0 || v >= n || seen[static_cast<size_t>(v)]) {
          throw std::invalid_argument("local_perm: not a bijection");
        }
        seen[static_cast<size_t>(v)] = true;
      }
      DenseOperator m = DenseOperator::Zero(n, n);
      for (int src = 0; src < n; ++src) {
        m(g.perm[static_cast<size_t>(src)], src) = Complex{1.0, 0.0};
      }
      return apply_on_register(m, g.target, s);
    }
    case Gate::Kind::LocalUnitary:
      check_gate_register(g.target, s.registers, "local_unitary");
      return apply_on_register(g.matrix, g.target, s);
  }
  throw std::logic_error("apply_gate: unknown gate kind");
}

struct Circuit {
  CodeParams params;
  std::vector<Gate> gates;
};

inline QuditState apply_circuit(const Circuit& c, const QuditState& s) {
  QuditState cur = s;
  for (const Gate& g : c.gates) {
    cur = apply_gate(c.params, g, cur);
  }
  return cur;
}

/// Encoding pipeline on |k,0,0,0,0>. Index binding after the transforms:
/// register 3 holds r, register 4 holds p, register 5 holds q.
///
///   1-3   copy register 1 into 3, 4, 5          |k,0,k,k,k>
///   4-6   DFT registers 3, 4, 5                 sum omega^{k(p+q+r)} |k,0,r,p,q>
///   7     phase omega^{p r} between 4 and 3
///   8     copy register 4 into 2                |k,p,r,p,q>
///   9-12  adders: reg1 += reg4 + reg5, reg2 += reg3, reg3 += reg5
///
/// yielding omega^{k(p+q+r)+pr} |p+q+k, p+r, q+r, p, q> with the exact
/// global phase of the formula encoder.
inline Circuit build_encoding_circuit(const CodeParams& params) {
  Circuit c{params, {}};
  c.gates.push_back(Gate::gen_cnot(1, 3));
  c.gates.push_back(Gate::gen_cnot(1, 4));
  c.gates.push_back(Gate::gen_cnot(1, 5));
  c.gates.push_back(Gate::qudit_dft(3));
  c.gates.push_back(Gate::qudit_dft(4));
  c.gates.push_back(Gate::qudit_dft(5));
  c.gates.push_back(Gate::ctrl_phase(4, 3));
  c.gates.push_back(Gate::gen_cnot(4, 2));
  c.gates.push_back(Gate::gen_cnot(4, 1));
  c.gates.push_back(Gate::gen_cnot(5, 1));
  c.gates.push_back(Gate::gen_cnot(3, 2));
  c.gates.push_back(Gate::gen_cnot(5, 3));
  return c;
}

/// Max deviation of the circuit's column Gram matrix from the identity.
/// Materializes all n^5 columns for n <= 4; for larger n checks a seeded
/// sample of basis columns.
inline double circuit_unitary_check(const Circuit& c, int sample_limit = 64) {
  const int n = c.params.n;
  const long dim = power_long(n, 5);
  std::vector<long> cols;
  if (n <= 4) {
    cols.resize(static_cast<size_t>(dim));
    for (long i = 0; i < dim; ++i) cols[static_cast<size_t>(i)] = i;
  } else {
    std::mt19937_64 rng(0x5eed);
    std::set<long> picked;
    while (static_cast<int>(picked.size()) < sample_limit) {
      picked.insert(static_cast<long>(rng() % static_cast<uint64_t>(dim)));
    }
    cols.assign(picked.begin(), picked.end());
  }
  Eigen::MatrixXcd u(dim, static_cast<long>(cols.size()));
  std::array<int, 5> digits{};
  for (size_t j = 0; j < cols.size(); ++j) {
    unpack_digits(n, 5, cols[j], digits);
    u.col(static_cast<long>(j)) =
        apply_circuit(c, basis_state(n, 5, digits)).amps;
  }
  Eigen::MatrixXcd gram = u.adjoint() * u;
  gram -= Eigen::MatrixXcd::Identity(gram.rows(), gram.cols());
  return gram.cwiseAbs().maxCoeff();
}

}  // namespace fiveq
