#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lcpcert/matrix.hpp"

namespace lcpcert {

/// Empirical lower bound on max_{d in [0,1]^n} ||(I - D + DM)^-1||_inf.
struct OracleEstimate {
  double max_observed = 0.0;
  Vector argmax_d;
  std::size_t vertex_count = 0;
  std::size_t interior_samples = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kMaxOracleDim = 20;
inline constexpr std::size_t kDefaultOracleSamples = 10000;

/// ||scaled_matrix(M, d)^-1||_inf. Throws SingularMatrix or DomainError.
double norm_at_d(const Matrix& m, std::span<const double> d);

/// Evaluates every vertex of [0,1]^n followed by `interior_samples` uniform
/// points drawn from the counter-based stream keyed on `seed`. Ties keep the
/// earliest evaluation (vertices in binary order, then samples by index).
/// Throws DimensionTooLarge for n > 20.
OracleEstimate oracle_max_norm(const Matrix& m, std::size_t interior_samples,
                               std::uint64_t seed);

struct LemmaViolation {
  std::size_t trial = 0;
  Vector d;
  std::string check;  // "h_ratio", "nekrasov", "z_eta", "z_eta_ratio"
  std::size_t row = 0;  // 0-based
  double lhs = 0.0;
  double rhs = 0.0;
};

struct LemmaReport {
  std::size_t trials = 0;
  std::size_t checks = 0;
  std::vector<LemmaViolation> violations;

  bool clean() const noexcept { return violations.empty(); }
};

/// For random d (trial 0 is d = 1, trial 1 is d = 0) compares M~ = I - D + DM
/// against M row by row:
///   h_i(M~)/m~_ii <= h_i(M)/m_ii,
///   z_i(M~) <= eta_i(M),
///   z_i(M~)/m~_ii <= eta_i(M)/min(m_ii, 1),
/// and requires M~ to be Nekrasov. Each comparison allows 1e-12 relative slack.
/// Throws PreconditionFailed unless M is Nekrasov with positive diagonal.
LemmaReport lemma_property_suite(const Matrix& m, std::size_t trials, std::uint64_t seed);

/// Scalar inequalities for gamma > 0, eta >= 0, x in [0,1]:
///   1/(1 - x + gamma x) <= 1/min(gamma, 1) and eta x/(1 - x + gamma x) <= eta/gamma.
/// Returns the number of violating triples.
std::size_t scalar_lemma_violations(std::size_t trials, std::uint64_t seed);

}  // namespace lcpcert
