#include <doctest.h>

#include <random>

#include "lcpcert/errors.hpp"
#include "lcpcert/nekrasov.hpp"
#include "test_support.hpp"

using namespace lcpcert;
using namespace lcpcert::testing;

// Expected values below were frozen from exact rational evaluation of the
// recursions (Python fractions), independently of this library.

namespace {

void check_vector(const Vector& got, const std::vector<double>& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    CAPTURE(i);
    CHECK(std::abs(got[i] - want[i]) <= tol);
  }
}

}  // namespace

TEST_CASE("h_vector") {
  SUBCASE("first fixture, four-decimal values") {
    check_vector(h_vector(example1()), {1.1000, 0.6220, 0.2411, 0.3410}, 5e-5);
  }
  SUBCASE("first fixture, exact values") {
    check_vector(h_vector(example1()), {11.0 / 10, 311.0 / 500, 2411.0 / 10000, 12787.0 / 37500},
                 1e-14);
  }
  SUBCASE("B+ of the fourth fixture") {
    check_vector(h_vector(example4_bplus()), {0.0, 3.0 / 5, 1.0 / 6, 1.0 / 24}, 1e-15);
  }
  SUBCASE("B+ of the third fixture") {
    check_vector(h_vector(example3_bplus()), {1.0 / 3, 3.0 / 5, 5.0 / 6, 5.0 / 24}, 1e-15);
  }
  SUBCASE("diagonal matrix") {
    const std::vector<double> diag{3.0, -2.0, 0.5};
    check_vector(h_vector(Matrix::diagonal(diag)), {0, 0, 0}, 0.0);
  }
  SUBCASE("h_1 is the off-diagonal row sum") {
    std::mt19937_64 rng(1);
    const Matrix a = random_nekrasov(6, rng);
    double off = 0.0;
    for (std::size_t j = 1; j < 6; ++j) off += std::abs(a(0, j));
    CHECK(h_vector(a)[0] == doctest::Approx(off).epsilon(1e-15));
  }
  SUBCASE("zero divisor") {
    const Matrix a{{0, 1}, {1, 1}};
    CHECK_THROWS_AS(h_vector(a), ZeroDiagonal);
    try {
      h_vector(a);
    } catch (const ZeroDiagonal& e) {
      CHECK(e.index() == 0);
    }
    // A zero in the last diagonal position is never a divisor.
    CHECK_NOTHROW(h_vector(Matrix{{1, 1}, {1, 0}}));
  }
}

TEST_CASE("is_nekrasov") {
  const NekrasovProfile p1 = is_nekrasov(example1());
  CHECK(p1.is_nekrasov);
  CHECK(p1.z[0] == 1.0);
  CHECK(p1.eta[0] == 1.0);
  CHECK_FALSE(is_nekrasov(example3()).is_nekrasov);

  const NekrasovProfile id = is_nekrasov(Matrix::identity(5));
  CHECK(id.is_nekrasov);
  check_vector(id.h, {0, 0, 0, 0, 0}, 0.0);

  const NekrasovProfile zero = is_nekrasov(Matrix{{0, 1}, {1, 1}});
  CHECK_FALSE(zero.is_nekrasov);
  CHECK(zero.zero_diagonal == std::optional<std::size_t>{0});

  // Margin exactly zero is not strict dominance.
  CHECK_FALSE(is_nekrasov(Matrix{{1, 1}, {0, 2}}).is_nekrasov);
  // Negative diagonals still count: the definition uses |a_ii|.
  CHECK(is_nekrasov(Matrix{{-3, 1}, {1, -3}}).is_nekrasov);
  CHECK_FALSE(is_nekrasov_positive_diagonal(Matrix{{-3, 1}, {1, -3}}));
}

TEST_CASE("z_vector") {
  const std::vector<double> diag{2.0, 5.0, 0.1};
  check_vector(z_vector(Matrix::diagonal(diag)), {1, 1, 1}, 0.0);
  // The fourth entry is 1/5 + (2/5)(3/2) + (2/5)(2) + 1 = 13/5.
  check_vector(z_vector(example2()), {1, 3.0 / 2, 2, 13.0 / 5}, 1e-15);
  check_vector(z_vector(example3_bplus()), {1, 1, 3, 7.0 / 4}, 1e-15);
  check_vector(z_vector(example1()), {1, 51.0 / 50, 1151.0 / 1000, 7117.0 / 3750}, 1e-15);
}

TEST_CASE("eta_vector") {
  check_vector(eta_vector(example1()), {1, 1.1, 1.61, 3.128}, 1e-14);
  check_vector(eta_vector(example2()), {1, 3.0 / 2, 2, 13.0 / 5}, 1e-15);
  const std::vector<double> diag{1.0, 4.0, 2.5};
  check_vector(eta_vector(Matrix::diagonal(diag)), {1, 1, 1}, 0.0);

  // eta >= 1 always, and eta >= z when every diagonal entry is positive.
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix a = random_nekrasov(2 + trial % 7, rng);
    const Vector eta = eta_vector(a);
    const Vector z = z_vector(a);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(eta[i] >= 1.0);
      CHECK(eta[i] >= z[i]);
    }
  }
}

TEST_CASE("kolotilina_bound") {
  CHECK(kolotilina_bound(Matrix::identity(4)).value == 1.0);
  const BoundReport r = kolotilina_bound(example2());
  REQUIRE(r.applicable());
  CHECK(*r.value == doctest::Approx(15.0).epsilon(1e-14));
  CHECK(reference_inf_norm(gauss_jordan_inverse(example2())) <= *r.value);
  CHECK(*kolotilina_bound(example1()).value == doctest::Approx(71170.0 / 32213).epsilon(1e-14));

  const BoundReport bad = kolotilina_bound(example3());
  CHECK_FALSE(bad.applicable());
  CHECK(to_string(*bad.reason) == "NotNekrasov");
}

TEST_CASE("kolotilina bound dominates the inverse norm of random Nekrasov matrices") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix a = random_nekrasov(2 + trial % 9, rng);
    const BoundReport r = kolotilina_bound(a);
    REQUIRE(r.applicable());
    CHECK(reference_inf_norm(gauss_jordan_inverse(a)) <= *r.value * (1 + 1e-9));
  }
}

TEST_CASE("scaled_matrix") {
  const Matrix m = example1();
  CHECK(scaled_matrix(m, std::vector<double>(4, 1.0)) == m);
  CHECK(scaled_matrix(m, std::vector<double>(4, 0.0)) == Matrix::identity(4));
  const Matrix half = scaled_matrix(m, std::vector<double>(4, 0.5));
  CHECK(half(0, 0) == 3.0);
  CHECK(half(0, 1) == doctest::Approx(-0.1).epsilon(1e-15));
  CHECK_THROWS_AS(scaled_matrix(m, std::vector<double>{0.5, 1.5, 0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(scaled_matrix(m, std::vector<double>{-0.1, 0.5, 0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(scaled_matrix(m, std::vector<double>{0.5}), DimensionMismatch);
}

TEST_CASE("gp_nekrasov_bound") {
  SUBCASE("upper-zero row disables the bound") {
    const BoundReport r = gp_nekrasov_bound(example2(), 0.1);
    CHECK_FALSE(r.applicable());
    CHECK(to_string(*r.reason) == "ZeroUpperRow(3)");
  }
  SUBCASE("first fixture weights") {
    const auto range = gp_nekrasov_epsilon_interval(example1());
    REQUIRE(range);
    CHECK(std::abs(range->upper - 0.7158) < 5e-5);
    for (double eps : {1e-3, 0.2, 0.5, 0.7}) {
      const BoundReport r = gp_nekrasov_bound(example1(), eps);
      REQUIRE(r.applicable());
      check_vector(r.intermediates.at("w"), {0.2200, 0.3110, 0.1607, 0.2842 + eps}, 5e-5);
    }
  }
  SUBCASE("exact value at epsilon = 7/20") {
    const BoundReport r = gp_nekrasov_bound(example1(), 0.35);
    REQUIRE(r.applicable());
    CHECK(*r.value == doctest::Approx(285370.0 / 16463).epsilon(1e-12));
    check_vector(r.intermediates.at("s"),
                 {295393.0 / 450000, 102649.0 / 225000, 16463.0 / 450000, 21.0 / 50}, 1e-14);
    CHECK(r.epsilon == std::optional<double>{0.35});
  }
  SUBCASE("blows up as epsilon tends to zero") {
    const BoundReport r = gp_nekrasov_bound(example1(), 1e-6);
    REQUIRE(r.applicable());
    CHECK(*r.value > 1e5);
  }
  SUBCASE("epsilon outside the open interval") {
    for (double eps : {0.0, -0.1, 0.7158444444444445, 0.9}) {
      CAPTURE(eps);
      const BoundReport r = gp_nekrasov_bound(example1(), eps);
      CHECK_FALSE(r.applicable());
      CHECK(to_string(*r.reason) == "EpsilonOutOfRange");
    }
  }
  SUBCASE("guards") {
    CHECK(to_string(*gp_nekrasov_bound(example3(), 0.1).reason) == "NotNekrasov");
    CHECK(to_string(*gp_nekrasov_bound(Matrix{{-3, 1}, {1, 3}}, 0.1).reason) ==
          "NonPositiveDiagonal(1)");
    CHECK(to_string(*gp_nekrasov_bound(Matrix{{2.0}}, 0.1).reason) == "DimensionTooSmall");
  }
}

TEST_CASE("new_nekrasov_bound") {
  const BoundReport r1 = new_nekrasov_bound(example1());
  REQUIRE(r1.applicable());
  CHECK(std::abs(*r1.value - 3.6414) < 5e-5);
  CHECK(*r1.value == doctest::Approx(117300.0 / 32213).epsilon(1e-14));
  CHECK_FALSE(r1.epsilon.has_value());

  const BoundReport r2 = new_nekrasov_bound(example2());
  REQUIRE(r2.applicable());
  CHECK(std::abs(*r2.value - 15.0) < 1e-9);

  CHECK(new_nekrasov_bound(Matrix::identity(3)).value == 1.0);
  CHECK(new_nekrasov_bound(Matrix{{0.5}}).value == 2.0);
  CHECK(new_nekrasov_bound(Matrix{{4.0}}).value == 1.0);
  CHECK_FALSE(new_nekrasov_bound(example3()).applicable());
  CHECK(to_string(*new_nekrasov_bound(Matrix{{-2.0}}).reason) == "NonPositiveDiagonal(1)");

  // Unit diagonal: the bound reduces to max eta_i / (1 - h_i).
  const Matrix m = example2();
  const Vector h = h_vector(m);
  const Vector eta = eta_vector(m);
  double unit = 0.0;
  for (std::size_t i = 0; i < 4; ++i) unit = std::max(unit, eta[i] / (1.0 - h[i]));
  CHECK(*r2.value == unit);
}

TEST_CASE("scaled matrices stay Nekrasov and obey the row inequalities") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    const Matrix m = random_nekrasov(2 + trial % 8, rng);
    const std::size_t n = m.size();
    const Vector h = h_vector(m);
    const Vector eta = eta_vector(m);
    const Matrix mt = scaled_matrix(m, random_unit_vector(n, rng));
    const NekrasovProfile pt = is_nekrasov(mt);
    CHECK(pt.is_nekrasov);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(pt.h[i] / mt(i, i) <= h[i] / m(i, i) + 1e-12);
      CHECK(pt.z[i] <= eta[i] + 1e-12);
      CHECK(pt.z[i] / mt(i, i) <= eta[i] / std::min(m(i, i), 1.0) + 1e-12);
    }
  }
}

TEST_CASE("scalar inequalities behind the eta bound") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> lg(-3.0, 3.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 10000; ++trial) {
    const double gamma = std::pow(10.0, lg(rng));
    const double eta = 5.0 * u(rng);
    const double x = u(rng);
    const double denom = 1.0 - x + gamma * x;
    CHECK(1.0 / denom <= 1.0 / std::min(gamma, 1.0) * (1 + 1e-12));
    CHECK(eta * x / denom <= eta / gamma * (1 + 1e-12));
  }
}

TEST_CASE("both Nekrasov bounds dominate sampled scaled inverses") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix m = random_nekrasov(2 + trial % 6, rng);
    const BoundReport fresh = new_nekrasov_bound(m);
    REQUIRE(fresh.applicable());
    const auto range = gp_nekrasov_epsilon_interval(m);
    REQUIRE(range);
    std::vector<BoundReport> gp;
    for (int k = 1; k <= 5; ++k) {
      const BoundReport r = gp_nekrasov_bound(m, range->upper * k / 6.0);
      if (r.applicable()) gp.push_back(r);
    }
    for (int s = 0; s < 20; ++s) {
      const double norm = reference_norm_at_d(m, random_unit_vector(m.size(), rng));
      CHECK(norm <= *fresh.value * (1 + 1e-9));
      for (const BoundReport& r : gp) CHECK(norm <= *r.value * (1 + 1e-9));
    }
  }
}
