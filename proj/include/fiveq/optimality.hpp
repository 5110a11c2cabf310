// Copyright (c) 2026 The fiveq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "fiveq/pauli.hpp"

#include <cstdint>

/// Four-register impossibility machinery.
///
/// For a hypothetical four-register code with words
/// sum_{pqrs} alpha^{(i)}_{pqrs} |p,q,r,s>, the reduced density matrices
/// rho^{(i)} over the first two registers must satisfy rho^(i) rho^(j) = 0
/// (from matrix-unit errors on registers 3 and 4) and rho^(i) = rho^(j)
/// (from errors on registers 1 and 2). A Hermitian matrix whose square
/// vanishes is itself zero, which contradicts trace(rho) = 1, so no valid
/// candidate can drive both constraint residuals to zero. This module makes
/// each step of that chain checkable on concrete candidates.
namespace fiveq {

/// N candidate words, each a vector over the n^4 four-register basis
/// (alpha^{(i)}_{pqrs} at index ((p*n+q)*n+r)*n+s).
struct CandidateCode4 {
  CodeParams params;
  std::vector<Eigen::VectorXcd> words;
};

/// Orthonormalizes n seeded Gaussian vectors into a valid isometry.
inline CandidateCode4 random_candidate(const CodeParams& params,
                                       std::uint64_t seed) {
  const int n = params.n;
  const long dim = power_long(n, 4);
  std::mt19937_64 rng(seed);
  CandidateCode4 c{params, {}};
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXcd v(dim);
    for (long j = 0; j < dim; ++j) v(j) = complex_gaussian(rng);
    for (const Eigen::VectorXcd& prev : c.words) {
      v -= prev.dot(v) * prev;
    }
    v /= v.norm();
    c.words.push_back(std::move(v));
  }
  return c;
}

/// Candidate of the form u_i (x) beta with orthonormal {u_i} on registers
/// 1,2 and a shared state beta on registers 3,4. Such words satisfy the
/// error-correction condition restricted to matrix-unit errors on registers
/// 3 and 4 exactly, so they exercise the rho^(i) rho^(j) = 0 implication.
inline CandidateCode4 product_candidate(const CodeParams& params,
                                        std::uint64_t seed) {
  const int n = params.n;
  const long d2 = static_cast<long>(n) * n;
  std::mt19937_64 rng(seed);
  std::vector<Eigen::VectorXcd> u;
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXcd v(d2);
    for (long j = 0; j < d2; ++j) v(j) = complex_gaussian(rng);
    for (const Eigen::VectorXcd& prev : u) v -= prev.dot(v) * prev;
    v /= v.norm();
    u.push_back(std::move(v));
  }
  Eigen::VectorXcd beta(d2);
  for (long j = 0; j < d2; ++j) beta(j) = complex_gaussian(rng);
  beta /= beta.norm();

  CandidateCode4 c{params, {}};
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXcd w(d2 * d2);
    for (long a = 0; a < d2; ++a) {
      for (long b = 0; b < d2; ++b) {
        w(a * d2 + b) = u[static_cast<size_t>(i)](a) * beta(b);
      }
    }
    c.words.push_back(std::move(w));
  }
  return c;
}

/// How far the candidate is from a valid isometry (max Gram deviation).
inline double candidate_isometry_residual(const CandidateCode4& c) {
  double worst = 0.0;
  for (size_t i = 0; i < c.words.size(); ++i) {
    for (size_t j = 0; j < c.words.size(); ++j) {
      const Complex g = c.words[i].dot(c.words[j]);
      worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

/// rho^{(i)}_{p'q';pq} = sum_{r,s} conj(alpha_{p'q'rs}) alpha_{pqrs},
/// computed by reshaping the word into an n^2 x n^2 matrix M with row (pq)
/// and column (rs): rho = transpose(M M^dag).
inline Eigen::MatrixXcd reduced_density(const CandidateCode4& c, int i) {
  if (i < 0 || i >= static_cast<int>(c.words.size())) {
    throw std::out_of_range("reduced_density: logical index out of range");
  }
  const long d2 = static_cast<long>(c.params.n) * c.params.n;
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      m(c.words[static_cast<size_t>(i)].data(), d2, d2);
  return (m * m.adjoint()).transpose();
}

/// Partial trace of a 4- or 5-register state down to its first two
/// registers; same index convention as reduced_density.
inline Eigen::MatrixXcd reduce_to_first_two(const QuditState& s) {
  check_state(s);
  if (s.registers < 3) {
    throw std::invalid_argument("reduce_to_first_two: need >= 3 registers");
  }
  const long rows = static_cast<long>(s.n) * s.n;
  const long cols = s.dim() / rows;
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      m(s.amps.data(), rows, cols);
  return (m * m.adjoint()).transpose();
}

/// Cross-correlation over registers 1,2 between two words:
/// T_{(rs),(r's')} = sum_{pq} conj(alpha^{(i)}_{pqrs}) alpha^{(j)}_{pqr's'}.
/// Its entries are exactly the <i|E^dag E'|j> values for matrix-unit errors
/// on registers 3 and 4, and rho^(i) rho^(j) = conj(M_i T M_j^dag).
inline Eigen::MatrixXcd cross_correlation(const CandidateCode4& c, int i,
                                          int j) {
  const long d2 = static_cast<long>(c.params.n) * c.params.n;
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      mi(c.words[static_cast<size_t>(i)].data(), d2, d2),
      mj(c.words[static_cast<size_t>(j)].data(), d2, d2);
  return mi.adjoint() * mj;
}

struct ConstraintResiduals {
  double orth = 0.0;   // max_{i != j} ||rho^(i) rho^(j)||_max
  double equal = 0.0;  // max_{i != j} ||rho^(i) - rho^(j)||_max
};

inline ConstraintResiduals kl_constraint_residuals(const CandidateCode4& c) {
  const int nw = static_cast<int>(c.words.size());
  std::vector<Eigen::MatrixXcd> rho;
  rho.reserve(static_cast<size_t>(nw));
  for (int i = 0; i < nw; ++i) rho.push_back(reduced_density(c, i));
  ConstraintResiduals r;
  for (int i = 0; i < nw; ++i) {
    for (int j = 0; j < nw; ++j) {
      if (i == j) continue;
      r.orth = std::max(
          r.orth,
          (rho[static_cast<size_t>(i)] * rho[static_cast<size_t>(j)])
              .cwiseAbs()
              .maxCoeff());
      r.equal = std::max(r.equal,
                         (rho[static_cast<size_t>(i)] -
                          rho[static_cast<size_t>(j)])
                             .cwiseAbs()
                             .maxCoeff());
    }
  }
  return r;
}

/// For Hermitian rho, (rho^2)_{ii} = sum_j |rho_ij|^2 >= ||rho||_max^2, so
/// ||rho^2||_max < tol forces ||rho||_max < sqrt(tol). Returns whether that
/// implication holds for this matrix; false would witness a nilpotent
/// Hermitian matrix that is not (nearly) zero, which cannot exist.
inline bool nilpotent_hermitian_is_zero(const Eigen::MatrixXcd& rho,
                                        double tol) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-9) {
    throw std::invalid_argument("nilpotent_hermitian_is_zero: not Hermitian");
  }
  const double sq = (rho * rho).cwiseAbs().maxCoeff();
  const double nrm = rho.cwiseAbs().maxCoeff();
  if (sq >= tol) return true;  // premise empty
  return nrm < std::sqrt(tol);
}

struct FalsifierResult {
  int n = 0;
  int candidates = 0;
  double min_joint_residual = 0.0;
  std::uint64_t argmin_seed = 0;
};

/// Hunts for a four-register candidate with both constraint residuals small.
/// The recorded minimum of max(orth, equal) stays far above zero.
inline FalsifierResult falsifier_sweep(const CodeParams& params, int count,
                                       std::uint64_t base_seed) {
  if (count < 1) {
    throw std::invalid_argument("falsifier_sweep: count must be >= 1");
  }
  FalsifierResult result;
  result.n = params.n;
  result.candidates = count;
  result.min_joint_residual = std::numeric_limits<double>::infinity();
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
    const ConstraintResiduals r =
        kl_constraint_residuals(random_candidate(params, seed));
    const double joint = std::max(r.orth, r.equal);
    if (joint < result.min_joint_residual) {
      result.min_joint_residual = joint;
      result.argmin_seed = seed;
    }
  }
  return result;
}

struct InfeasibilityBound {
  double epsilon = 0.0;      // assumed bound on both residuals
  double norm_bound = 0.0;   // implied sqrt(eps * (1 + d)) on ||rho||_max
  double trace_floor = 0.0;  // 1/d forced by trace(rho) = 1
  bool contradiction = false;
};

/// Quantitative form of the impossibility chain for an n^2 x n^2 density
/// matrix: both residuals < eps imply
///   ||rho^2||_max <= eps + d * eps  (d = n^2, entrywise product bound)
///   ||rho||_max   <= sqrt(eps (1 + d))
/// while trace(rho) = 1 forces ||rho||_max >= 1/d. The two collide whenever
/// eps < 1 / (d^2 (d + 1)).
inline InfeasibilityBound four_register_infeasibility(int n, double eps) {
  const double d = static_cast<double>(n) * n;
  InfeasibilityBound b;
  b.epsilon = eps;
  b.norm_bound = std::sqrt(eps * (1.0 + d));
  b.trace_floor = 1.0 / d;
  b.contradiction = b.norm_bound < b.trace_floor;
  return b;
}

}  // namespace fiveq
