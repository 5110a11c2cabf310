// Copyright (c) 2026 The fiveq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "fiveq/code.hpp"
#include "fiveq/pauli.hpp"

#include <chrono>
#include <utility>

/// Error-correction condition sweep.
///
/// A code corrects an error set {E_A} iff
///
///   <k_Enc| E_A^dag E_B |k'_Enc> = lambda_{A,B} delta_{k,k'}
///
/// for all pairs. lambda[A][B] is computed as the k-average of the diagonal
/// inner products; the deviation of individual k's from that average is
/// diag_residual, and the largest |<k|A^dag B|k'>| with k != k' is
/// offdiag_residual. Both below tolerance certifies the code.
namespace fiveq {

struct WorstPair {
  std::string label_a;
  std::string label_b;
  int k = 0;
  int k_prime = 0;
  double value = 0.0;
};

struct LambdaMatrix {
  CodeParams params;
  std::vector<std::string> error_labels;
  Eigen::MatrixXcd lambda;
  double diag_residual = 0.0;
  double offdiag_residual = 0.0;
  double hermiticity_residual = 0.0;
  WorstPair worst_pair;
  double elapsed_seconds = 0.0;
};

/// Columns are E_A |k_Enc> for every error in order.
inline Eigen::MatrixXcd error_image_matrix(const Codebook& cb,
                                           const ErrorSet& es, int k) {
  const long dim = cb.words[static_cast<size_t>(k)].dim();
  Eigen::MatrixXcd img(dim, static_cast<long>(es.size()));
  for (size_t a = 0; a < es.size(); ++a) {
    img.col(static_cast<long>(a)) =
        apply_error(es.errors[a], cb.words[static_cast<size_t>(k)]).amps;
  }
  return img;
}

inline LambdaMatrix compute_lambda(const Codebook& cb, const ErrorSet& es) {
  if (cb.params.n != es.params.n) {
    throw std::invalid_argument("compute_lambda: codebook/error set mismatch");
  }
  if (cb.words.empty()) {
    throw std::invalid_argument("compute_lambda: empty codebook");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const int nwords = static_cast<int>(cb.words.size());
  const long m = static_cast<long>(es.size());
  const long dim = cb.words[0].dim();

  // Precomputed images turn the whole sweep into Gram-matrix products.
  // Cache them when they fit comfortably; rebuild per pair otherwise.
  const bool cache =
      static_cast<double>(dim) * static_cast<double>(m) * nwords * 16.0 <
      2.5e8;
  std::vector<Eigen::MatrixXcd> images;
  if (cache) {
    images.reserve(static_cast<size_t>(nwords));
    for (int k = 0; k < nwords; ++k) {
      images.push_back(error_image_matrix(cb, es, k));
    }
  }
  const auto image = [&](int k) {
    return cache ? images[static_cast<size_t>(k)]
                 : error_image_matrix(cb, es, k);
  };

  LambdaMatrix out;
  out.params = cb.params;
  for (const RegisterError& e : es.errors) out.error_labels.push_back(e.label);

  std::vector<Eigen::MatrixXcd> diag_blocks;
  diag_blocks.reserve(static_cast<size_t>(nwords));
  for (int k = 0; k < nwords; ++k) {
    const Eigen::MatrixXcd img = image(k);
    diag_blocks.push_back(img.adjoint() * img);
  }
  out.lambda = Eigen::MatrixXcd::Zero(m, m);
  for (const Eigen::MatrixXcd& g : diag_blocks) out.lambda += g;
  out.lambda /= static_cast<double>(nwords);

  for (int k = 0; k < nwords; ++k) {
    for (long a = 0; a < m; ++a) {
      for (long b = 0; b < m; ++b) {
        const double dev =
            std::abs(diag_blocks[static_cast<size_t>(k)](a, b) -
                     out.lambda(a, b));
        if (dev > out.diag_residual) {
          out.diag_residual = dev;
          if (dev > out.worst_pair.value) {
            out.worst_pair = WorstPair{out.error_labels[static_cast<size_t>(a)],
                                       out.error_labels[static_cast<size_t>(b)],
                                       k, k, dev};
          }
        }
      }
    }
  }

  for (int k = 0; k < nwords; ++k) {
    const Eigen::MatrixXcd img_k = image(k);
    for (int kp = k + 1; kp < nwords; ++kp) {
      const Eigen::MatrixXcd cross = img_k.adjoint() * image(kp);
      for (long a = 0; a < m; ++a) {
        for (long b = 0; b < m; ++b) {
          const double v = std::abs(cross(a, b));
          if (v > out.offdiag_residual) {
            out.offdiag_residual = v;
            if (v > out.worst_pair.value) {
              out.worst_pair =
                  WorstPair{out.error_labels[static_cast<size_t>(a)],
                            out.error_labels[static_cast<size_t>(b)], k, kp, v};
            }
          }
        }
      }
    }
  }

  out.hermiticity_residual =
      (out.lambda - out.lambda.adjoint()).cwiseAbs().maxCoeff();
  out.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return out;
}

/// (diag_residual, offdiag_residual) of the sweep.
inline std::pair<double, double> kl_residual(const Codebook& cb,
                                             const ErrorSet& es) {
  const LambdaMatrix l = compute_lambda(cb, es);
  return {l.diag_residual, l.offdiag_residual};
}

inline std::string lambda_status(const LambdaMatrix& l) {
  const double worst = std::max(l.diag_residual, l.offdiag_residual);
  if (worst < kLambdaPassTol) return "pass";
  if (worst <= kLambdaHardFailTol) return "gray";
  return "fail";
}

// Closed-form values of lambda for specific register pairs, evaluated as
// literal sums over matrix elements. They are independent oracles for the
// corresponding compute_lambda entries (error A on the first register of the
// pair, error B on the second).

/// Registers (1,4):  (1/n^2) sum_{p,q} <p+q|Ea^dag|p+q> <p|Eb|p>.
inline Complex closed_form_lambda_14(const CodeParams& params,
                                     const DenseOperator& ea,
                                     const DenseOperator& eb) {
  const int n = params.n;
  const DenseOperator ead = ea.adjoint();
  Complex acc{0.0, 0.0};
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      acc += ead((p + q) % n, (p + q) % n) * eb(p, p);
    }
  }
  return acc / static_cast<double>(n * n);
}

/// Registers (1,2):  (1/n^2) sum_{x,y} <x|Ea^dag|x> <y|Eb|y>.
inline Complex closed_form_lambda_12(const CodeParams& params,
                                     const DenseOperator& ea,
                                     const DenseOperator& eb) {
  const int n = params.n;
  const DenseOperator ead = ea.adjoint();
  Complex acc{0.0, 0.0};
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      acc += ead(x, x) * eb(y, y);
    }
  }
  return acc / static_cast<double>(n * n);
}

/// Registers (2,3):  (1/n^3) sum_{u,x,y,z} omega^{x u}
///                      <y|Ea^dag|y+x> <z|Eb|z+x>.
/// The character sum over u kills every x != 0 term; keeping the literal
/// quadruple sum keeps this an independent route.
inline Complex closed_form_lambda_23(const CodeParams& params,
                                     const DenseOperator& ea,
                                     const DenseOperator& eb) {
  const int n = params.n;
  const DenseOperator ead = ea.adjoint();
  Complex acc{0.0, 0.0};
  for (int u = 0; u < n; ++u) {
    for (int x = 0; x < n; ++x) {
      const Complex chi = omega_pow(n, static_cast<long long>(x) * u);
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          acc += chi * ead(y, (y + x) % n) * eb(z, (z + x) % n);
        }
      }
    }
  }
  return acc / static_cast<double>(n) / static_cast<double>(n) /
         static_cast<double>(n);
}

/// Registers (4,5):  (1/n^2) sum_{p,q} <p|Ea^dag|p> <q|Eb|q>.
inline Complex closed_form_lambda_45(const CodeParams& params,
                                     const DenseOperator& ea,
                                     const DenseOperator& eb) {
  const int n = params.n;
  const DenseOperator ead = ea.adjoint();
  Complex acc{0.0, 0.0};
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      acc += ead(p, p) * eb(q, q);
    }
  }
  return acc / static_cast<double>(n * n);
}

}  // namespace fiveq
