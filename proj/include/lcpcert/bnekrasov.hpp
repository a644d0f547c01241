#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcpcert/matrix.hpp"
#include "lcpcert/nekrasov.hpp"

namespace lcpcert {

/// M = B+ + C where C has the row-constant entry r_i+ = max(0, m_ij : j != i).
struct BPlusSplit {
  Matrix b_plus;
  Matrix c;
  Vector r_plus;
};

struct ClassificationReport {
  bool is_sdd = false;
  bool is_z_matrix = false;
  bool is_nekrasov = false;
  bool is_b_matrix = false;
  bool is_b_nekrasov = false;
  bool is_h_matrix = false;
  std::optional<bool> is_p_matrix;  // only evaluated for n <= 12
  std::vector<std::string> notes;
};

/// Throws DimensionTooSmall when n < 2.
BPlusSplit bplus_decompose(const Matrix& m);

bool is_strictly_diagonally_dominant(const Matrix& a);

/// n >= 2 and B+ is a Nekrasov matrix with strictly positive diagonal.
bool is_b_nekrasov(const Matrix& m);

/// <M> nonsingular with an entrywise nonnegative inverse (tolerance -1e-10).
bool is_h_matrix(const Matrix& m);

ClassificationReport classify(const Matrix& m);

/// Admissible epsilon range (0, 1 - h_n(B+)/(m_nn - r_n+)); nullopt when M
/// is not B-Nekrasov.
std::optional<EpsilonInterval> gp_bnekrasov_epsilon_interval(const Matrix& m);

BoundReport gp_bnekrasov_bound(const Matrix& m, double epsilon);

/// max_i (n-1) eta_i(B+) / min(b_ii - h_i(B+), 1).
BoundReport new_bnekrasov_bound(const Matrix& m);

}  // namespace lcpcert
