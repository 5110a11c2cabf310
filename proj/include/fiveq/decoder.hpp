// Copyright (c) 2026 The fiveq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "fiveq/lambda.hpp"

/// Recovery from the Lambda matrix.
///
/// Diagonalizing lambda = U D U^dag gives a corrected error basis
/// F_m = sum_A U[A,m] E_A with <k|F_m^dag F_n|k'> = d_m delta_{mn}
/// delta_{kk'}. Every eigenvalue above the rank tolerance contributes a
/// syndrome subspace spanned by the orthonormal vectors F_m|k_Enc>/sqrt(d_m);
/// recovery projects onto the subspaces, picks the heaviest, and maps its
/// basis back onto the codewords.
namespace fiveq {

inline constexpr double kRankTol = 1e-8;
/// Below this captured weight the input is orthogonal to every syndrome
/// subspace, which signals an error outside the corrected set.
inline constexpr double kUndecodableTol = 1e-9;

struct SyndromeSubspace {
  std::string label;
  double weight = 0.0;        // lambda eigenvalue d_m
  Eigen::MatrixXcd basis;     // dim x N, columns F_m|k_Enc>/sqrt(d_m)
};

struct RecoveryPlan {
  CodeParams params;
  std::vector<SyndromeSubspace> syndromes;
  long leftover_projector_rank = 0;
  Eigen::MatrixXcd codewords;          // dim x N
  Eigen::VectorXd lambda_spectrum;     // ascending eigenvalues, reported as-is
  double lambda_identity_deviation = 0.0;
};

inline long total_corrected_dimension(const RecoveryPlan& plan) {
  long total = 0;
  for (const SyndromeSubspace& s : plan.syndromes) total += s.basis.cols();
  return total;
}

inline RecoveryPlan build_recovery(const Codebook& cb, const ErrorSet& es,
                                   double rank_tol = kRankTol) {
  const LambdaMatrix lam = compute_lambda(cb, es);
  const double worst = std::max(lam.diag_residual, lam.offdiag_residual);
  if (worst >= kLambdaPassTol) {
    throw std::runtime_error(
        "build_recovery: refusing to build, Lambda residual " +
        std::to_string(worst) + " is not below " +
        std::to_string(kLambdaPassTol));
  }
  const int nwords = static_cast<int>(cb.words.size());
  const long m = lam.lambda.rows();
  const long dim = cb.words[0].dim();

  RecoveryPlan plan;
  plan.params = cb.params;
  plan.codewords.resize(dim, nwords);
  for (int k = 0; k < nwords; ++k) {
    plan.codewords.col(k) = cb.words[static_cast<size_t>(k)].amps;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(lam.lambda);
  plan.lambda_spectrum = solver.eigenvalues();
  plan.lambda_identity_deviation =
      (lam.lambda - Eigen::MatrixXcd::Identity(m, m)).cwiseAbs().maxCoeff();

  // lambda within rank tolerance of the identity is maximally degenerate, so
  // any orthonormal eigenbasis is valid; the canonical choice keeps each
  // syndrome aligned with one named error.
  const bool canonical = plan.lambda_identity_deviation < rank_tol;
  Eigen::MatrixXcd mixing;
  Eigen::VectorXd weights;
  if (canonical) {
    mixing = Eigen::MatrixXcd::Identity(m, m);
    weights = Eigen::VectorXd::Ones(m);
  } else {
    mixing = solver.eigenvectors();
    weights = solver.eigenvalues();
    // largest eigenvalue first for a deterministic syndrome order
    mixing = mixing.rowwise().reverse().eval();
    weights = weights.reverse().eval();
  }

  std::vector<Eigen::MatrixXcd> images;
  images.reserve(static_cast<size_t>(nwords));
  for (int k = 0; k < nwords; ++k) {
    images.push_back(error_image_matrix(cb, es, k));
  }

  for (long col = 0; col < m; ++col) {
    const double d = weights(col);
    if (d <= rank_tol) continue;
    SyndromeSubspace sub;
    sub.weight = d;
    long dominant = 0;
    mixing.col(col).cwiseAbs().maxCoeff(&dominant);
    sub.label = lam.error_labels[static_cast<size_t>(dominant)];
    sub.basis.resize(dim, nwords);
    const double scale = 1.0 / std::sqrt(d);
    for (int k = 0; k < nwords; ++k) {
      sub.basis.col(k) =
          scale * (images[static_cast<size_t>(k)] * mixing.col(col));
    }
    plan.syndromes.push_back(std::move(sub));
  }
  plan.leftover_projector_rank = dim - total_corrected_dimension(plan);
  return plan;
}

struct DecodeResult {
  QuditState state;
  bool undecodable = false;
  int syndrome_index = -1;
  std::string syndrome_label;
  double captured_weight = 0.0;  // squared overlap with the chosen subspace
};

/// Projects the (normalized) input onto each syndrome subspace, picks the
/// one with the largest squared overlap (ties break to the lowest index),
/// and maps its coordinates back onto the codewords.
inline DecodeResult decode(const RecoveryPlan& plan,
                           const QuditState& corrupted) {
  check_state(corrupted);
  const double norm = corrupted.amps.norm();
  if (norm < 1e-100) {
    throw std::invalid_argument("decode: zero-norm input");
  }
  const Eigen::VectorXcd v = corrupted.amps / norm;

  DecodeResult result;
  result.state = zero_state(corrupted.n, corrupted.registers);
  Eigen::VectorXcd best_coords;
  for (size_t mth = 0; mth < plan.syndromes.size(); ++mth) {
    Eigen::VectorXcd coords = plan.syndromes[mth].basis.adjoint() * v;
    const double w = coords.squaredNorm();
    if (w > result.captured_weight) {
      result.captured_weight = w;
      result.syndrome_index = static_cast<int>(mth);
      best_coords = std::move(coords);
    }
  }
  if (result.syndrome_index < 0 || result.captured_weight < kUndecodableTol) {
    result.undecodable = true;
    result.syndrome_index = -1;
    return result;
  }
  result.syndrome_label =
      plan.syndromes[static_cast<size_t>(result.syndrome_index)].label;
  Eigen::VectorXcd recovered = plan.codewords * best_coords;
  result.state.amps = recovered / recovered.norm();
  return result;
}

/// |<a|b>|^2 / (<a|a><b|b>); 1 means equal up to a global phase.
inline double logical_fidelity(const QuditState& a, const QuditState& b) {
  if (a.n != b.n || a.registers != b.registers) {
    throw std::invalid_argument("logical_fidelity: dimension mismatch");
  }
  const double na = a.amps.squaredNorm();
  const double nb = b.amps.squaredNorm();
  if (na < 1e-200 || nb < 1e-200) {
    throw std::invalid_argument("logical_fidelity: zero-norm input");
  }
  return std::norm(a.amps.dot(b.amps)) / (na * nb);
}

}  // namespace fiveq
