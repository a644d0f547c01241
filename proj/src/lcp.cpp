#include "lcpcert/lcp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <utility>

#include "lcpcert/errors.hpp"
#include "lcpcert/random.hpp"

namespace lcpcert {

namespace {

constexpr double kCertificateSlack = 1e-9;
constexpr double kMinorTolerance = 1e-12;

// Advances idx to the next k-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (idx[pos] < n - k + pos) {
      ++idx[pos];
      for (std::size_t j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Calls visit(subset) for every subset in ascending size, then lexicographic
// order, stopping early when visit returns true.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t min_size, Visit visit) {
  for (std::size_t k = min_size; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    do {
      if (visit(std::as_const(idx))) return;
    } while (k > 0 && next_combination(idx, n));
  }
}

std::optional<LcpSolution> try_basis(const LcpInstance& inst,
                                     const std::vector<std::size_t>& basis) {
  const std::size_t n = inst.size();
  Vector x(n, 0.0);
  if (!basis.empty()) {
    const LUFactors lu = lu_factor(inst.m.principal(basis));
    if (lu.singular) return std::nullopt;
    Vector rhs(basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r) rhs[r] = -inst.q[basis[r]];
    const Vector xb = lu_solve(lu, rhs);
    for (std::size_t r = 0; r < basis.size(); ++r) x[basis[r]] = xb[r];
  }
  Vector w = inst.m * x;
  for (std::size_t i = 0; i < n; ++i) w[i] += inst.q[i];
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] < -kFeasibilityTolerance || w[i] < -kFeasibilityTolerance) return std::nullopt;
  }
  const double gap = std::abs(std::inner_product(x.begin(), x.end(), w.begin(), 0.0));
  return LcpSolution{std::move(x), std::move(w), basis, gap};
}

void require_solvable_size(const LcpInstance& inst) {
  if (inst.size() > kMaxLcpDim) {
    throw DimensionTooLarge("basis enumeration supports n <= " + std::to_string(kMaxLcpDim));
  }
}

}  // namespace

LcpInstance::LcpInstance(Matrix m_in, Vector q_in) : m(std::move(m_in)), q(std::move(q_in)) {
  if (q.size() != m.size()) {
    throw DimensionMismatch("q has length " + std::to_string(q.size()) + " but M is " +
                            std::to_string(m.size()) + "x" + std::to_string(m.size()));
  }
  for (double v : q) {
    if (!std::isfinite(v)) throw DomainError("q entries must be finite");
  }
}

Vector residual(const LcpInstance& inst, std::span<const double> x) {
  if (x.size() != inst.size()) {
    throw DimensionMismatch("x has length " + std::to_string(x.size()) + " for dimension " +
                            std::to_string(inst.size()));
  }
  Vector r = inst.m * x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(x[i], r[i] + inst.q[i]);
  return r;
}

LcpSolution solve_lcp(const LcpInstance& inst) {
  require_solvable_size(inst);
  std::optional<LcpSolution> found;
  for_each_subset(inst.size(), 0, [&](const std::vector<std::size_t>& basis) {
    found = try_basis(inst, basis);
    return found.has_value();
  });
  if (!found) throw NoSolution();
  return *std::move(found);
}

std::vector<LcpSolution> enumerate_feasible_bases(const LcpInstance& inst) {
  require_solvable_size(inst);
  std::vector<LcpSolution> out;
  for_each_subset(inst.size(), 0, [&](const std::vector<std::size_t>& basis) {
    if (auto sol = try_basis(inst, basis)) out.push_back(*std::move(sol));
    return false;
  });
  return out;
}

std::size_t count_distinct_solutions(const std::vector<LcpSolution>& sols, double tol) {
  std::vector<const Vector*> distinct;
  for (const LcpSolution& s : sols) {
    const bool seen = std::any_of(distinct.begin(), distinct.end(), [&](const Vector* v) {
      double gap = 0.0;
      for (std::size_t i = 0; i < v->size(); ++i) gap = std::max(gap, std::abs((*v)[i] - s.x_star[i]));
      return gap <= tol;
    });
    if (!seen) distinct.push_back(&s.x_star);
  }
  return distinct.size();
}

bool is_p_matrix(const Matrix& m) {
  const std::size_t n = m.size();
  if (n > kMaxPMatrixTestDim) {
    throw DimensionTooLarge("P-matrix test supports n <= " + std::to_string(kMaxPMatrixTestDim));
  }
  const double scale = std::max(1.0, m.max_abs());
  bool all_positive = true;
  for_each_subset(n, 1, [&](const std::vector<std::size_t>& idx) {
    const double minor = determinant(m.principal(idx));
    const double threshold = kMinorTolerance * std::pow(scale, static_cast<double>(idx.size()));
    all_positive = minor > threshold;
    return !all_positive;
  });
  return all_positive;
}

ErrorCertificate certify_error_bound(const LcpInstance& inst, const LcpSolution& solution,
                                     std::span<const double> x, const BoundReport& bound) {
  if (!bound.applicable()) {
    throw InapplicableBound(to_string(bound.theorem) +
                            (bound.reason ? " (" + to_string(*bound.reason) + ")" : ""));
  }
  ErrorCertificate cert;
  cert.trial_x.assign(x.begin(), x.end());
  cert.residual_norm = inf_norm(residual(inst, x));
  for (std::size_t i = 0; i < x.size(); ++i) {
    cert.true_error = std::max(cert.true_error, std::abs(x[i] - solution.x_star[i]));
  }
  cert.bound_value = *bound.value;
  cert.holds = cert.true_error <= cert.bound_value * cert.residual_norm + kCertificateSlack;
  return cert;
}

ErrorCertificate certify_error_bound(const LcpInstance& inst, std::span<const double> x,
                                     const BoundReport& bound) {
  if (!bound.applicable()) return certify_error_bound(inst, LcpSolution{}, x, bound);
  return certify_error_bound(inst, solve_lcp(inst), x, bound);
}

std::vector<Vector> random_trial_points(std::span<const double> x_star, std::size_t count,
                                        std::uint64_t seed) {
  const double upper = 3.0 * (1.0 + inf_norm(x_star));
  std::vector<Vector> points(count, Vector(x_star.size()));
  for (std::size_t k = 0; k < count; ++k)
    for (std::size_t i = 0; i < x_star.size(); ++i)
      points[k][i] = upper * counter_uniform(seed, k, i);
  return points;
}

}  // namespace lcpcert
