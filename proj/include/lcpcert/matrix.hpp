#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace lcpcert {

using Vector = std::vector<double>;

/// Dense real square matrix stored row-major.
///
/// Construction rejects non-finite entries and ragged input. Element access
/// through operator() is unchecked.
class Matrix {
 public:
  Matrix() = default;
  /// n x n zero matrix.
  explicit Matrix(std::size_t n);
  Matrix(std::size_t n, std::vector<double> row_major);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> diag);

  std::size_t size() const noexcept { return n_; }

  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

  std::span<const double> row(std::size_t i) const noexcept {
    return {data_.data() + i * n_, n_};
  }
  std::span<const double> data() const noexcept { return data_; }

  /// Largest absolute entry; 0 for the empty matrix.
  double max_abs() const noexcept;

  /// Principal submatrix on the given (sorted or unsorted) index set.
  Matrix principal(std::span<const std::size_t> idx) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(double c, const Matrix& a);
Vector operator*(const Matrix& a, std::span<const double> x);

struct LUFactors {
  Matrix lower;  // unit lower triangular
  Matrix upper;
  std::vector<std::size_t> permutation;  // row i of P*A is row permutation[i] of A
  bool singular = false;
  int sign = 1;  // determinant of P
};

/// Gaussian elimination with partial pivoting, P*A = L*U. A pivot smaller
/// than 1e-14 * max|A| marks the factorization singular, in which case the
/// factors must not be used for solves.
LUFactors lu_factor(const Matrix& a);

/// Solves A x = b from its factors. Throws SingularMatrix.
Vector lu_solve(const LUFactors& lu, std::span<const double> b);

double determinant(const Matrix& a);

/// Throws SingularMatrix when lu_factor flags the input.
Matrix inverse(const Matrix& a);

/// Maximum absolute row sum.
double inf_norm(const Matrix& a) noexcept;
double inf_norm(std::span<const double> v) noexcept;

/// <A>: |a_ii| on the diagonal, -|a_ij| elsewhere.
Matrix comparison_matrix(const Matrix& a);

bool is_z_matrix(const Matrix& a) noexcept;

}  // namespace lcpcert
