#include "lcpcert/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "lcpcert/errors.hpp"

namespace lcpcert {

namespace {

constexpr double kPivotTolerance = 1e-14;

void require_finite(std::span<const double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw DomainError("matrix entries must be finite");
  }
}

void require_same_size(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch(std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
}

}  // namespace

Matrix::Matrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

Matrix::Matrix(std::size_t n, std::vector<double> row_major)
    : n_(n), data_(std::move(row_major)) {
  if (data_.size() != n_ * n_) {
    throw NonSquare(std::to_string(data_.size()) + " entries for dimension " +
                    std::to_string(n_));
  }
  require_finite(data_);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : n_(rows.size()) {
  data_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw NonSquare("row length differs from row count");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  require_finite(data_);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> diag) {
  require_finite(diag);
  Matrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

double Matrix::max_abs() const noexcept {
  double best = 0.0;
  for (double v : data_) best = std::max(best, std::abs(v));
  return best;
}

Matrix Matrix::principal(std::span<const std::size_t> idx) const {
  Matrix sub(idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r) {
    for (std::size_t c = 0; c < idx.size(); ++c) sub(r, c) = (*this)(idx[r], idx[c]);
  }
  return sub;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_size(a, b);
  Matrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_size(a, b);
  Matrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_size(a, b);
  const std::size_t n = a.size();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Matrix operator*(double c, const Matrix& a) {
  Matrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = c * a(i, j);
  return out;
}

Vector operator*(const Matrix& a, std::span<const double> x) {
  if (x.size() != a.size()) {
    throw DimensionMismatch("vector of length " + std::to_string(x.size()) +
                            " for dimension " + std::to_string(a.size()));
  }
  Vector out(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) s += a(i, j) * x[j];
    out[i] = s;
  }
  return out;
}

LUFactors lu_factor(const Matrix& a) {
  const std::size_t n = a.size();
  LUFactors f{Matrix(n), a, std::vector<std::size_t>(n), false, 1};
  for (std::size_t i = 0; i < n; ++i) f.permutation[i] = i;

  Matrix& u = f.upper;
  Matrix& l = f.lower;
  const double threshold = kPivotTolerance * a.max_abs();

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(u(i, k)) > std::abs(u(p, k))) p = i;
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(u(k, j), u(p, j));
        std::swap(l(k, j), l(p, j));  // only columns < k are populated
      }
      std::swap(f.permutation[k], f.permutation[p]);
      f.sign = -f.sign;
    }
    const double pivot = u(k, k);
    if (std::abs(pivot) <= threshold || pivot == 0.0) {
      f.singular = true;
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double factor = u(i, k) / pivot;
      l(i, k) = factor;
      u(i, k) = 0.0;
      if (factor == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) u(i, j) -= factor * u(k, j);
    }
  }
  for (std::size_t i = 0; i < n; ++i) l(i, i) = 1.0;
  return f;
}

Vector lu_solve(const LUFactors& lu, std::span<const double> b) {
  const std::size_t n = lu.upper.size();
  if (b.size() != n) throw DimensionMismatch("right-hand side length");
  if (lu.singular) throw SingularMatrix();

  Vector y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[lu.permutation[i]];
    for (std::size_t j = 0; j < i; ++j) s -= lu.lower(i, j) * y[j];
    y[i] = s;
  }
  Vector x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    double s = y[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= lu.upper(ii, j) * x[j];
    x[ii] = s / lu.upper(ii, ii);
  }
  return x;
}

double determinant(const Matrix& a) {
  const LUFactors f = lu_factor(a);
  double det = f.sign;
  for (std::size_t i = 0; i < a.size(); ++i) det *= f.upper(i, i);
  return det;
}

Matrix inverse(const Matrix& a) {
  const std::size_t n = a.size();
  const LUFactors f = lu_factor(a);
  if (f.singular) throw SingularMatrix();
  Matrix inv(n);
  Vector e(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1.0;
    const Vector col = lu_solve(f, e);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
    e[j] = 0.0;
  }
  return inv;
}

double inf_norm(const Matrix& a) noexcept {
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double s = 0.0;
    for (double v : a.row(i)) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

double inf_norm(std::span<const double> v) noexcept {
  double best = 0.0;
  for (double x : v) best = std::max(best, std::abs(x));
  return best;
}

Matrix comparison_matrix(const Matrix& a) {
  Matrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      out(i, j) = i == j ? std::abs(a(i, j)) : -std::abs(a(i, j));
  return out;
}

bool is_z_matrix(const Matrix& a) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j && a(i, j) > 0.0) return false;
  return true;
}

}  // namespace lcpcert
