// Copyright (c) 2026 The fiveq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

/// Core conventions used throughout the library:
///
///  * A qudit register has dimension `n >= 2` with basis |0>, ..., |n-1>.
///  * Multi-register basis kets |d1, d2, ..., dR> are indexed big-endian:
///    register 1 is the most significant digit, so
///    index = d1*n^(R-1) + d2*n^(R-2) + ... + dR.
///  * Inner products are conjugate-linear in the FIRST argument.
///  * All digit arithmetic is modulo n.
namespace fiveq {

using Complex = std::complex<double>;
using DenseOperator = Eigen::MatrixXcd;

/// Tolerance for elementwise state/operator comparisons.
inline constexpr double kDefaultTol = 1e-10;
/// Accumulated Lambda-matrix sums pass below this residual.
inline constexpr double kLambdaPassTol = 1e-9;
/// Residuals above this are a hard failure; between the two is a gray zone.
inline constexpr double kLambdaHardFailTol = 1e-6;

/// omega = exp(2*pi*i/n), the primitive n-th root of unity.
inline Complex primitive_root(int n) {
  if (n < 2) {
    throw std::invalid_argument("primitive_root: qudit dimension must be >= 2");
  }
  return std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(n));
}

struct CodeParams {
  int n = 2;
  Complex omega;
  double tol = kDefaultTol;
};

inline CodeParams make_params(int n, double tol = kDefaultTol) {
  if (n < 2) {
    throw std::invalid_argument("make_params: qudit dimension must be >= 2");
  }
  if (!(tol > 0.0) || tol >= 1e-6) {
    throw std::invalid_argument("make_params: tol must lie in (0, 1e-6)");
  }
  return CodeParams{n, primitive_root(n), tol};
}

/// omega^e for any (possibly negative) integer exponent, evaluated as a
/// fresh unit phasor so powers do not accumulate rounding.
inline Complex omega_pow(int n, long long e) {
  long long r = e % n;
  if (r < 0) r += n;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) /
                             static_cast<double>(n));
}

/// Literal character sum  sum_{m=0}^{n-1} omega^{m k}.
/// Equals n when k = 0 (mod n) and 0 otherwise; evaluated term by term so it
/// can serve as a self-test oracle for that identity.
inline Complex character_sum(int n, long long k) {
  if (n < 2) {
    throw std::invalid_argument("character_sum: qudit dimension must be >= 2");
  }
  Complex acc{0.0, 0.0};
  for (int m = 0; m < n; ++m) {
    acc += omega_pow(n, static_cast<long long>(m) * k);
  }
  return acc;
}

inline long power_long(int n, int e) {
  long v = 1;
  for (int i = 0; i < e; ++i) v *= n;
  return v;
}

/// State of `registers` qudits of dimension `n`; amps has length n^registers.
struct QuditState {
  int n = 2;
  int registers = 5;
  Eigen::VectorXcd amps;

  long dim() const { return amps.size(); }
  double norm() const { return amps.norm(); }
};

inline void check_state(const QuditState& s) {
  if (s.n < 2 || s.registers < 1) {
    throw std::invalid_argument("QuditState: bad dimensions");
  }
  if (s.amps.size() != power_long(s.n, s.registers)) {
    throw std::invalid_argument("QuditState: amplitude length != n^registers");
  }
}

inline QuditState zero_state(int n, int registers) {
  QuditState s{n, registers, Eigen::VectorXcd::Zero(power_long(n, registers))};
  return s;
}

/// Basis index of the ket with the given digits (register 1 first).
inline long pack_digits(int n, std::span<const int> digits) {
  long idx = 0;
  for (int d : digits) {
    int m = d % n;
    if (m < 0) m += n;
    idx = idx * n + m;
  }
  return idx;
}

inline void unpack_digits(int n, int registers, long index, std::span<int> out) {
  for (int i = registers - 1; i >= 0; --i) {
    out[static_cast<size_t>(i)] = static_cast<int>(index % n);
    index /= n;
  }
}

inline QuditState basis_state(int n, int registers, std::span<const int> digits) {
  QuditState s = zero_state(n, registers);
  s.amps[pack_digits(n, digits)] = Complex{1.0, 0.0};
  return s;
}

/// <a|b>, conjugate-linear in `a`.
inline Complex inner_product(const QuditState& a, const QuditState& b) {
  if (a.n != b.n || a.registers != b.registers) {
    throw std::invalid_argument("inner_product: dimension mismatch");
  }
  return a.amps.dot(b.amps);
}

/// Applies an n x n operator to one register of the state without
/// materializing the full tensor product. O(dim * n).
inline QuditState apply_on_register(const DenseOperator& op, int reg,
                                    const QuditState& s) {
  if (op.rows() != s.n || op.cols() != s.n) {
    throw std::invalid_argument("apply_on_register: operator dim != n");
  }
  if (reg < 1 || reg > s.registers) {
    throw std::out_of_range("apply_on_register: register index out of range");
  }
  const int n = s.n;
  const long stride = power_long(n, s.registers - reg);
  const long block = stride * n;
  const long dim = s.dim();
  QuditState out{s.n, s.registers, Eigen::VectorXcd::Zero(dim)};
  std::vector<Complex> in(static_cast<size_t>(n));
  for (long base = 0; base < dim; base += block) {
    for (long off = 0; off < stride; ++off) {
      for (int m = 0; m < n; ++m) {
        in[static_cast<size_t>(m)] = s.amps[base + m * stride + off];
      }
      for (int row = 0; row < n; ++row) {
        Complex acc{0.0, 0.0};
        for (int col = 0; col < n; ++col) {
          acc += op(row, col) * in[static_cast<size_t>(col)];
        }
        out.amps[base + row * stride + off] = acc;
      }
    }
  }
  return out;
}

/// Fast path for generalized Pauli X^a Z^b on one register:
/// |m> -> omega^{b m} |m + a>.
inline QuditState apply_pauli_on_register(int a, int b, int reg,
                                          const QuditState& s) {
  if (reg < 1 || reg > s.registers) {
    throw std::out_of_range("apply_pauli_on_register: register out of range");
  }
  const int n = s.n;
  const long stride = power_long(n, s.registers - reg);
  const long block = stride * n;
  const long dim = s.dim();
  QuditState out{s.n, s.registers, Eigen::VectorXcd::Zero(dim)};
  for (long base = 0; base < dim; base += block) {
    for (int m = 0; m < n; ++m) {
      const Complex phase = omega_pow(n, static_cast<long long>(b) * m);
      const long src = base + m * stride;
      const long dst = base + ((m + a) % n) * stride;
      for (long off = 0; off < stride; ++off) {
        out.amps[dst + off] = phase * s.amps[src + off];
      }
    }
  }
  return out;
}

/// I (x) ... (x) op (x) ... (x) I with `op` in slot `reg` of `registers`.
/// Materializes the full matrix; refuses above dim 4096 (use
/// apply_on_register for larger spaces).
inline DenseOperator embed_on_register(const DenseOperator& op, int reg,
                                       int registers = 5) {
  const int n = static_cast<int>(op.rows());
  if (op.rows() != op.cols()) {
    throw std::invalid_argument("embed_on_register: operator must be square");
  }
  if (reg < 1 || reg > registers) {
    throw std::out_of_range("embed_on_register: register index out of range");
  }
  const long dim = power_long(n, registers);
  if (dim > 1024) {  // n^5 with n <= 4; larger spaces stay slot-wise
    throw std::length_error(
        "embed_on_register: refusing to materialize an operator this large; "
        "use apply_on_register instead");
  }
  const long stride = power_long(n, registers - reg);
  const long block = stride * n;
  DenseOperator full = DenseOperator::Zero(dim, dim);
  for (long base = 0; base < dim; base += block) {
    for (long off = 0; off < stride; ++off) {
      for (int row = 0; row < n; ++row) {
        for (int col = 0; col < n; ++col) {
          full(base + row * stride + off, base + col * stride + off) =
              op(row, col);
        }
      }
    }
  }
  return full;
}

inline bool all_finite(const DenseOperator& m) {
  return m.allFinite();
}

}  // namespace fiveq
