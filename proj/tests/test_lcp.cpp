#include <doctest.h>

#include <random>

#include "lcpcert/bnekrasov.hpp"
#include "lcpcert/errors.hpp"
#include "lcpcert/lcp.hpp"
#include "test_support.hpp"

using namespace lcpcert;
using namespace lcpcert::testing;

namespace {

// Projected Gauss-Seidel sweeps; a solution of the LCP is a fixed point.
Vector projected_gauss_seidel(const LcpInstance& inst, Vector x, int iterations) {
  const std::size_t n = inst.size();
  for (int it = 0; it < iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double w = inst.q[i];
      for (std::size_t j = 0; j < n; ++j) w += inst.m(i, j) * x[j];
      x[i] = std::max(0.0, x[i] - w / inst.m(i, i));
    }
  }
  return x;
}

// Brute-force principal minors through cofactor expansion.
bool reference_p_matrix(const Matrix& m) {
  const std::size_t n = m.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) idx.push_back(i);
    if (!(cofactor_determinant(m.principal(idx)) > 1e-9)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("LcpInstance validates dimensions") {
  CHECK_THROWS_AS(LcpInstance(Matrix::identity(2), Vector{1.0}), DimensionMismatch);
}

TEST_CASE("residual") {
  const LcpInstance pos(Matrix::identity(2), {1, 1});
  CHECK(residual(pos, Vector{0, 0}) == Vector{0, 0});
  const LcpInstance neg(Matrix::identity(2), {-1, -1});
  CHECK(residual(neg, Vector{0, 0}) == Vector{-1, -1});
  CHECK_THROWS_AS(residual(neg, Vector{0, 0, 0}), DimensionMismatch);

  const LcpSolution sol = solve_lcp(neg);
  CHECK(inf_norm(residual(neg, sol.x_star)) == 0.0);
}

TEST_CASE("solve_lcp examples") {
  const LcpInstance neg(Matrix::identity(3), {-1, -1, -1});
  const LcpSolution a = solve_lcp(neg);
  CHECK(a.x_star == Vector{1, 1, 1});
  CHECK(a.basis == std::vector<std::size_t>{0, 1, 2});

  const LcpInstance pos(Matrix::identity(3), {1, 1, 1});
  const LcpSolution b = solve_lcp(pos);
  CHECK(b.x_star == Vector{0, 0, 0});
  CHECK(b.basis.empty());
  CHECK(b.w_star == Vector{1, 1, 1});

  // Mixed signs: the first feasible basis in enumeration order is {1, 3}.
  const LcpInstance mixed(Matrix::identity(3), {-2, 1, -3});
  const LcpSolution c = solve_lcp(mixed);
  CHECK(c.x_star == Vector{2, 0, 3});
  CHECK(c.basis == std::vector<std::size_t>{0, 2});
}

TEST_CASE("solve_lcp on the second fixture is a projected Gauss-Seidel fixed point") {
  const LcpInstance inst(example2(), {-1, -1, -1, -1});
  const LcpSolution sol = solve_lcp(inst);
  CHECK(sol.complementarity_gap <= 1e-9);
  for (double v : sol.x_star) CHECK(v >= -1e-10);
  for (double v : sol.w_star) CHECK(v >= -1e-10);

  const Vector refined = projected_gauss_seidel(inst, sol.x_star, 500);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(refined[i] - sol.x_star[i]) <= 1e-9);

  // PGS from the origin converges to the same point (M is an H-matrix with positive diagonal).
  const Vector from_zero = projected_gauss_seidel(inst, Vector(4, 0.0), 500);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(from_zero[i] - sol.x_star[i]) <= 1e-9);

  const BoundReport bound = new_nekrasov_bound(example2());
  REQUIRE(bound.applicable());
  CHECK(*bound.value == doctest::Approx(15.0));
  for (const Vector& x : random_trial_points(sol.x_star, 100, 42)) {
    const ErrorCertificate cert = certify_error_bound(inst, sol, x, bound);
    CHECK(cert.holds);
    CHECK(cert.true_error <= 15.0 * cert.residual_norm + 1e-9);
  }
}

TEST_CASE("solve_lcp errors") {
  // -I with q > 0: x = 0 works; with q < 0 no basis is feasible.
  const Matrix neg_id = -1.0 * Matrix::identity(2);
  CHECK_NOTHROW(solve_lcp(LcpInstance(neg_id, {1, 1})));
  CHECK_THROWS_AS(solve_lcp(LcpInstance(neg_id, {-1, -1})), NoSolution);
  CHECK_THROWS_AS(solve_lcp(LcpInstance(Matrix::identity(16), Vector(16, -1.0))),
                  DimensionTooLarge);
}

TEST_CASE("P-matrix inputs have exactly one feasible basis") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const Matrix m = trial % 2 == 0 ? random_nekrasov(n, rng) : random_b_nekrasov(n, rng);
    Vector q(n);
    for (double& v : q) v = u(rng);
    const LcpInstance inst(m, q);
    const std::vector<LcpSolution> all = enumerate_feasible_bases(inst);
    CHECK(all.size() == 1);
    CHECK(count_distinct_solutions(all) == 1);
    const LcpSolution first = solve_lcp(inst);
    CHECK(first.x_star == all.front().x_star);
    CHECK(inf_norm(residual(inst, first.x_star)) <= 1e-9 * (1 + inf_norm(q)));
    CHECK(first.complementarity_gap <= 1e-9 * (1 + inf_norm(q)));
  }
}

TEST_CASE("is_p_matrix") {
  CHECK(is_p_matrix(Matrix::identity(4)));
  CHECK_FALSE(is_p_matrix(Matrix{{0, 1}, {1, 0}}));
  CHECK(is_p_matrix(example3()));
  CHECK(is_p_matrix(example4()));
  CHECK(is_p_matrix(example1()));
  CHECK_THROWS_AS(is_p_matrix(Matrix::identity(13)), DimensionTooLarge);

  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int agree = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 4;
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = u(rng) + (i == j ? 0.8 : 0.0);
    agree += is_p_matrix(m) == reference_p_matrix(m);
  }
  CHECK(agree == 200);
}

TEST_CASE("B-Nekrasov fixtures are P-matrices") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix m = random_b_nekrasov(2 + trial % 6, rng);
    REQUIRE(is_b_nekrasov(m));
    CHECK(is_p_matrix(m));
  }
}

TEST_CASE("certify_error_bound") {
  SUBCASE("at the solution") {
    const LcpInstance inst(example1(), {-1, -1, -1, -1});
    const LcpSolution sol = solve_lcp(inst);
    const ErrorCertificate cert = certify_error_bound(inst, sol.x_star, new_nekrasov_bound(example1()));
    CHECK(cert.residual_norm <= 1e-12);
    CHECK(cert.true_error == 0.0);
    CHECK(cert.holds);
  }
  SUBCASE("first fixture, random trials in [0, 3]") {
    const LcpInstance inst(example1(), {-1, -1, -1, -1});
    const LcpSolution sol = solve_lcp(inst);
    const BoundReport bound = new_nekrasov_bound(example1());
    CHECK(std::abs(*bound.value - 3.6414) < 5e-5);
    std::mt19937_64 rng(34);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
      Vector x(4);
      for (double& v : x) v = u(rng);
      CHECK(certify_error_bound(inst, sol, x, bound).holds);
    }
  }
  SUBCASE("fourth fixture with its own q") {
    const LcpInstance inst(example4(), {-1, -2, -1, -2});
    const LcpSolution sol = solve_lcp(inst);
    const BoundReport bound = new_bnekrasov_bound(example4());
    CHECK(*bound.value == doctest::Approx(25.2));
    for (const Vector& x : random_trial_points(sol.x_star, 100, 7)) {
      CHECK(certify_error_bound(inst, sol, x, bound).holds);
    }
  }
  SUBCASE("inapplicable bound") {
    const LcpInstance inst(example3(), {-1, -1, -1, -1});
    CHECK_THROWS_AS(certify_error_bound(inst, Vector(4, 0.0), new_nekrasov_bound(example3())),
                    InapplicableBound);
  }
}

TEST_CASE("random trial points") {
  const Vector xs{1.0, 0.5};
  const auto pts = random_trial_points(xs, 50, 9);
  CHECK(pts.size() == 50);
  for (const Vector& p : pts)
    for (double v : p) CHECK((v >= 0.0 && v <= 6.0));
  CHECK(random_trial_points(xs, 50, 9) == pts);
  CHECK(random_trial_points(xs, 50, 10) != pts);
}
