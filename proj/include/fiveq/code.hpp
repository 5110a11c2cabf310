// Copyright (c) 2026 The fiveq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "fiveq/core.hpp"

#include <array>
#include <vector>

/// Five-register encoding
///
///   |k>  ->  n^{-3/2} sum_{p,q,r} omega^{k(p+q+r) + p r}
///            |p+q+k, p+r, q+r, p, q>
///
/// for k = 0..n-1, all digit arithmetic mod n. Every codeword has exactly n^3
/// nonzero amplitudes of modulus n^{-3/2}, and the ket digits determine
/// (p, q, r, k) uniquely: p = d4, q = d5, r = d2 - d4, k = d1 - d4 - d5.
namespace fiveq {

/// One term of the encoding sum for a fixed logical index.
struct EncodingTerm {
  int p = 0, q = 0, r = 0;
  int phase_exponent = 0;          // k(p+q+r) + p r  (mod n)
  std::array<int, 5> ket_digits{}; // (p+q+k, p+r, q+r, p, q)  (mod n)
};

inline std::vector<EncodingTerm> encoding_terms(const CodeParams& params, int k) {
  const int n = params.n;
  if (k < 0 || k >= n) {
    throw std::out_of_range("encoding_terms: logical index out of range");
  }
  std::vector<EncodingTerm> terms;
  terms.reserve(static_cast<size_t>(n) * n * n);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      for (int r = 0; r < n; ++r) {
        EncodingTerm t;
        t.p = p;
        t.q = q;
        t.r = r;
        t.phase_exponent = (k * (p + q + r) + p * r) % n;
        t.ket_digits = {(p + q + k) % n, (p + r) % n, (q + r) % n, p, q};
        terms.push_back(t);
      }
    }
  }
  return terms;
}

/// Digits -> (p, q, r, k) of the encoding term living at that ket, if any.
/// Returns false when the digits are not of codeword form (d3 inconsistent).
struct TermIndices {
  int p = 0, q = 0, r = 0, k = 0;
};

inline bool decode_term_digits(int n, std::span<const int> digits,
                               TermIndices& out) {
  const auto mod = [n](int v) { return ((v % n) + n) % n; };
  out.p = digits[3];
  out.q = digits[4];
  out.r = mod(digits[1] - out.p);
  out.k = mod(digits[0] - out.p - out.q);
  return digits[2] == mod(out.q + out.r);
}

inline QuditState encode(const CodeParams& params, int k) {
  const int n = params.n;
  QuditState s = zero_state(n, 5);
  const double scale = std::pow(static_cast<double>(n), -1.5);
  for (const EncodingTerm& t : encoding_terms(params, k)) {
    s.amps[pack_digits(n, t.ket_digits)] =
        scale * omega_pow(n, t.phase_exponent);
  }
  return s;
}

/// All n codewords; built once and reused by every verifier sweep.
struct Codebook {
  CodeParams params;
  std::vector<QuditState> words;
};

inline Codebook build_codebook(const CodeParams& params) {
  Codebook cb{params, {}};
  cb.words.reserve(static_cast<size_t>(params.n));
  for (int k = 0; k < params.n; ++k) {
    cb.words.push_back(encode(params, k));
  }
  return cb;
}

/// Wraps an explicit word list (e.g. a reference code family) so it can be
/// fed to the Lambda-matrix sweep. Dimensions are checked, nothing else:
/// deliberately invalid books are used as negative controls.
inline Codebook codebook_from_words(const CodeParams& params,
                                    std::vector<QuditState> words) {
  for (const QuditState& w : words) {
    check_state(w);
    if (w.n != params.n || w.registers != 5) {
      throw std::invalid_argument("codebook_from_words: dimension mismatch");
    }
  }
  return Codebook{params, std::move(words)};
}

}  // namespace fiveq
