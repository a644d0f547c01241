#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lcpcert/matrix.hpp"
#include "lcpcert/nekrasov.hpp"

namespace lcpcert {

/// LCP(M, q): find x >= 0 with w = Mx + q >= 0 and x^T w = 0.
struct LcpInstance {
  Matrix m;
  Vector q;

  /// Throws DimensionMismatch when q does not match M.
  LcpInstance(Matrix m, Vector q);
  std::size_t size() const noexcept { return m.size(); }
};

struct LcpSolution {
  Vector x_star;
  Vector w_star;
  std::vector<std::size_t> basis;  // 0-based indices where x is basic
  double complementarity_gap = 0.0;
};

struct ErrorCertificate {
  Vector trial_x;
  double residual_norm = 0.0;
  double true_error = 0.0;
  double bound_value = 0.0;
  bool holds = false;
};

inline constexpr std::size_t kMaxLcpDim = 15;
inline constexpr std::size_t kMaxPMatrixTestDim = 12;
inline constexpr double kFeasibilityTolerance = 1e-10;

/// r(x) = min(x, Mx + q) componentwise.
Vector residual(const LcpInstance& inst, std::span<const double> x);

/// Complementary-basis enumeration over subsets in ascending cardinality and
/// then lexicographic order; returns the first feasible basis. Singular basis
/// blocks are skipped. Throws NoSolution or DimensionTooLarge (n > 15).
LcpSolution solve_lcp(const LcpInstance& inst);

/// Every feasible complementary basis in enumeration order.
std::vector<LcpSolution> enumerate_feasible_bases(const LcpInstance& inst);

/// Number of pairwise distinct x among the solutions (max-norm gap > tol).
std::size_t count_distinct_solutions(const std::vector<LcpSolution>& sols, double tol = 1e-9);

/// All principal minors exceed 1e-12 * scale^k with scale = max(1, max|m_ij|).
/// Throws DimensionTooLarge for n > 12.
bool is_p_matrix(const Matrix& m);

/// Checks ||x - x*|| <= bound * ||r(x)|| + 1e-9 against a known solution.
/// Throws InapplicableBound when the report carries no value.
ErrorCertificate certify_error_bound(const LcpInstance& inst, const LcpSolution& solution,
                                     std::span<const double> x, const BoundReport& bound);

/// Solves the instance first; solver errors propagate.
ErrorCertificate certify_error_bound(const LcpInstance& inst, std::span<const double> x,
                                     const BoundReport& bound);

/// `count` points with entries uniform in [0, 3 (1 + ||x*||_inf)].
std::vector<Vector> random_trial_points(std::span<const double> x_star, std::size_t count,
                                        std::uint64_t seed);

}  // namespace lcpcert
