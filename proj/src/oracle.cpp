#include "lcpcert/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "lcpcert/errors.hpp"
#include "lcpcert/nekrasov.hpp"
#include "lcpcert/random.hpp"

namespace lcpcert {

namespace {

constexpr double kLemmaSlack = 1e-12;

bool within(double lhs, double rhs) { return lhs <= rhs + kLemmaSlack * std::max(1.0, std::abs(rhs)); }

}  // namespace

double norm_at_d(const Matrix& m, std::span<const double> d) {
  return inf_norm(inverse(scaled_matrix(m, d)));
}

OracleEstimate oracle_max_norm(const Matrix& m, std::size_t interior_samples,
                               std::uint64_t seed) {
  const std::size_t n = m.size();
  if (n > kMaxOracleDim) {
    throw DimensionTooLarge("vertex enumeration supports n <= " + std::to_string(kMaxOracleDim));
  }
  OracleEstimate est;
  est.vertex_count = std::size_t{1} << n;
  est.interior_samples = interior_samples;
  est.seed = seed;
  est.max_observed = -1.0;

  Vector d(n);
  auto consider = [&]() {
    const double v = norm_at_d(m, d);
    if (v > est.max_observed) {
      est.max_observed = v;
      est.argmax_d = d;
    }
  };

  for (std::size_t mask = 0; mask < est.vertex_count; ++mask) {
    for (std::size_t i = 0; i < n; ++i) d[i] = (mask >> i) & 1U ? 1.0 : 0.0;
    consider();
  }
  for (std::size_t k = 0; k < interior_samples; ++k) {
    for (std::size_t i = 0; i < n; ++i) d[i] = counter_uniform(seed, k, i);
    consider();
  }
  return est;
}

LemmaReport lemma_property_suite(const Matrix& m, std::size_t trials, std::uint64_t seed) {
  if (!is_nekrasov_positive_diagonal(m)) {
    throw PreconditionFailed("lemma suite needs a Nekrasov matrix with positive diagonal");
  }
  const std::size_t n = m.size();
  const Vector h = h_vector(m);
  const Vector eta = eta_vector(m);

  LemmaReport report;
  report.trials = trials;
  Vector d(n);
  for (std::size_t t = 0; t < trials; ++t) {
    if (t == 0) {
      std::fill(d.begin(), d.end(), 1.0);
    } else if (t == 1) {
      std::fill(d.begin(), d.end(), 0.0);
    } else {
      for (std::size_t i = 0; i < n; ++i) d[i] = counter_uniform(seed, t, i);
    }
    const Matrix mt = scaled_matrix(m, d);
    const NekrasovProfile pt = is_nekrasov(mt);

    auto record = [&](const char* check, std::size_t row, double lhs, double rhs) {
      ++report.checks;
      if (!within(lhs, rhs)) report.violations.push_back({t, d, check, row, lhs, rhs});
    };

    ++report.checks;
    if (!pt.is_nekrasov) report.violations.push_back({t, d, "nekrasov", 0, 0.0, 0.0});
    if (pt.zero_diagonal) continue;

    for (std::size_t i = 0; i < n; ++i) {
      const double mt_ii = mt(i, i);
      record("h_ratio", i, pt.h[i] / mt_ii, h[i] / m(i, i));
      record("z_eta", i, pt.z[i], eta[i]);
      record("z_eta_ratio", i, pt.z[i] / mt_ii, eta[i] / std::min(m(i, i), 1.0));
    }
  }
  return report;
}

std::size_t scalar_lemma_violations(std::size_t trials, std::uint64_t seed) {
  std::size_t violations = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    // gamma log-uniform over [1e-3, 1e3], eta in [0, 10], x in [0, 1].
    const double gamma = std::pow(10.0, -3.0 + 6.0 * counter_uniform(seed, t, 0));
    const double eta = 10.0 * counter_uniform(seed, t, 1);
    const double x = counter_uniform(seed, t, 2);
    const double denom = 1.0 - x + gamma * x;
    if (!within(1.0 / denom, 1.0 / std::min(gamma, 1.0))) ++violations;
    if (!within(eta * x / denom, eta / gamma)) ++violations;
  }
  return violations;
}

}  // namespace lcpcert
