#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "lcpcert/matrix.hpp"

namespace lcpcert {

/// Relative tolerance applied to every strict inequality (Nekrasov margins,
/// epsilon-interval membership, diagonal dominance). Boundary cases are
/// classified as failures.
inline constexpr double kStrictTolerance = 1e-12;

enum class Theorem {
  GpNekrasov,    // epsilon-parameterized bound for Nekrasov matrices
  NewNekrasov,   // parameter-free bound for Nekrasov matrices
  GpBNekrasov,   // epsilon-parameterized bound for B-Nekrasov matrices
  NewBNekrasov,  // parameter-free bound for B-Nekrasov matrices
  Kolotilina,    // ||A^-1||_inf bound for a single Nekrasov matrix
};

std::string to_string(Theorem t);

enum class ReasonCode {
  NotNekrasov,
  NonPositiveDiagonal,
  ZeroUpperRow,
  EpsilonOutOfRange,
  DegenerateS,
  DimensionTooSmall,
  NotBNekrasov,
  NoStrictEntry,
  WZero,
  BbarNotSDDZ,
};

/// Why a bound does not apply. `row` is 0-based; it is rendered 1-based.
struct Reason {
  ReasonCode code;
  std::optional<std::size_t> row;
};

std::string to_string(const Reason& r);

struct BoundReport {
  Theorem theorem;
  std::optional<double> value;  // present iff applicable
  std::optional<Reason> reason;  // present iff not applicable
  std::optional<double> epsilon;
  std::map<std::string, Vector> intermediates;

  bool applicable() const noexcept { return value.has_value(); }

  static BoundReport make_value(Theorem t, double v, std::optional<double> eps = {});
  static BoundReport make_inapplicable(Theorem t, Reason r, std::optional<double> eps = {});
};

struct NekrasovProfile {
  Vector h;
  Vector z;
  Vector eta;
  Vector margins;  // |a_ii| - h_i
  bool is_nekrasov = false;
  // Set when a zero diagonal stopped the recursions; vectors are then empty.
  std::optional<std::size_t> zero_diagonal;
};

/// Open interval (lower, upper) of admissible epsilon values.
struct EpsilonInterval {
  double lower = 0.0;
  double upper = 0.0;

  bool contains(double eps) const noexcept;
  double midpoint() const noexcept { return 0.5 * (lower + upper); }
};

/// h_1 = sum_{j != 1} |a_1j|,
/// h_i = sum_{j < i} |a_ij| h_j / |a_jj| + sum_{j > i} |a_ij|.
/// Throws ZeroDiagonal(j) when a divisor |a_jj| (j < n) is below 1e-300.
Vector h_vector(const Matrix& a);

/// z_1 = 1, z_i = sum_{j < i} |a_ij| z_j / |a_jj| + 1.
Vector z_vector(const Matrix& a);

/// eta_1 = 1, eta_i = sum_{j < i} |m_ij| eta_j / min(|m_jj|, 1) + 1.
Vector eta_vector(const Matrix& m);

NekrasovProfile is_nekrasov(const Matrix& a);

/// True when a is Nekrasov and every diagonal entry is strictly positive.
bool is_nekrasov_positive_diagonal(const Matrix& a);

/// max_i z_i / (|a_ii| - h_i); bounds ||A^-1||_inf for Nekrasov A.
BoundReport kolotilina_bound(const Matrix& a);

/// I - D + D M with D = diag(d). Throws DomainError unless every d_i is in [0, 1].
Matrix scaled_matrix(const Matrix& m, std::span<const double> d);

/// Admissible epsilon range (0, 1 - h_n/m_nn) of the epsilon-parameterized
/// Nekrasov bound; nullopt when M is not Nekrasov with positive diagonal.
std::optional<EpsilonInterval> gp_nekrasov_epsilon_interval(const Matrix& m);

BoundReport gp_nekrasov_bound(const Matrix& m, double epsilon);

/// max_i eta_i / min(m_ii - h_i, 1), independent of any parameter.
BoundReport new_nekrasov_bound(const Matrix& m);

}  // namespace lcpcert
