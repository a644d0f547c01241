#include "lcpcert/bnekrasov.hpp"

#include <algorithm>
#include <cmath>

#include "lcpcert/errors.hpp"
#include "lcpcert/lcp.hpp"

namespace lcpcert {

namespace {

constexpr double kHMatrixTolerance = -1e-10;
constexpr std::size_t kMaxPMatrixDim = 12;

bool positive_diagonal(const Matrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a(i, i) > kStrictTolerance)) return false;
  return true;
}

bool b_nekrasov_split(const Matrix& m, BPlusSplit* split) {
  if (m.size() < 2) return false;
  *split = bplus_decompose(m);
  return positive_diagonal(split->b_plus) && is_nekrasov(split->b_plus).is_nekrasov;
}

}  // namespace

BPlusSplit bplus_decompose(const Matrix& m) {
  const std::size_t n = m.size();
  if (n < 2) throw DimensionTooSmall("B+ splitting needs n >= 2");
  BPlusSplit s{Matrix(n), Matrix(n), Vector(n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) r = std::max(r, m(i, j));
    s.r_plus[i] = r;
    for (std::size_t j = 0; j < n; ++j) {
      s.b_plus(i, j) = m(i, j) - r;
      s.c(i, j) = r;
    }
  }
  return s;
}

bool is_strictly_diagonally_dominant(const Matrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    double off = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != i) off += std::abs(a(i, j));
    const double diag = std::abs(a(i, i));
    if (!(diag - off > kStrictTolerance * std::max(1.0, diag))) return false;
  }
  return true;
}

bool is_b_nekrasov(const Matrix& m) {
  BPlusSplit split;
  return b_nekrasov_split(m, &split);
}

bool is_h_matrix(const Matrix& m) {
  Matrix inv;
  try {
    inv = inverse(comparison_matrix(m));
  } catch (const SingularMatrix&) {
    return false;
  }
  for (double v : inv.data())
    if (v < kHMatrixTolerance) return false;
  return true;
}

ClassificationReport classify(const Matrix& m) {
  ClassificationReport r;
  const std::size_t n = m.size();
  r.is_sdd = is_strictly_diagonally_dominant(m);
  r.is_z_matrix = is_z_matrix(m);

  const NekrasovProfile profile = is_nekrasov(m);
  r.is_nekrasov = profile.is_nekrasov;
  if (profile.zero_diagonal) {
    r.notes.push_back("zero diagonal at row " + std::to_string(*profile.zero_diagonal + 1));
  }

  if (n >= 2) {
    const BPlusSplit split = bplus_decompose(m);
    const bool pos = positive_diagonal(split.b_plus);
    r.is_b_matrix = pos && is_strictly_diagonally_dominant(split.b_plus);
    r.is_b_nekrasov = pos && is_nekrasov(split.b_plus).is_nekrasov;
    if (!pos) r.notes.push_back("B+ has a non-positive diagonal entry");
  } else {
    r.is_b_matrix = n == 1 && m(0, 0) > kStrictTolerance;
    r.notes.push_back("B-Nekrasov class requires n >= 2");
  }

  r.is_h_matrix = is_h_matrix(m);
  if (n <= kMaxPMatrixDim) {
    r.is_p_matrix = is_p_matrix(m);
  } else {
    r.notes.push_back("P-matrix test skipped for n > 12");
  }
  return r;
}

std::optional<EpsilonInterval> gp_bnekrasov_epsilon_interval(const Matrix& m) {
  BPlusSplit split;
  if (!b_nekrasov_split(m, &split)) return std::nullopt;
  const std::size_t last = m.size() - 1;
  const Vector h = h_vector(split.b_plus);
  return EpsilonInterval{0.0, 1.0 - h[last] / split.b_plus(last, last)};
}

BoundReport gp_bnekrasov_bound(const Matrix& m, double epsilon) {
  constexpr Theorem kThm = Theorem::GpBNekrasov;
  const std::size_t n = m.size();
  if (n < 2) return BoundReport::make_inapplicable(kThm, {ReasonCode::DimensionTooSmall, {}}, epsilon);

  BPlusSplit split;
  if (!b_nekrasov_split(m, &split)) {
    return BoundReport::make_inapplicable(kThm, {ReasonCode::NotBNekrasov, {}}, epsilon);
  }
  const Matrix& b = split.b_plus;

  // Each row i < n needs an entry to the right of the diagonal strictly below r_i+.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double r = split.r_plus[i];
    const double slack = kStrictTolerance * std::max(1.0, std::abs(r));
    bool strict = false;
    for (std::size_t k = i + 1; k < n; ++k) strict = strict || m(i, k) < r - slack;
    if (!strict) return BoundReport::make_inapplicable(kThm, {ReasonCode::NoStrictEntry, i}, epsilon);
  }

  const Vector h = h_vector(b);
  const EpsilonInterval range{0.0, 1.0 - h[n - 1] / b(n - 1, n - 1)};
  if (!range.contains(epsilon)) {
    return BoundReport::make_inapplicable(kThm, {ReasonCode::EpsilonOutOfRange, {}}, epsilon);
  }

  // m_ii - r_i+ is exactly b_ii.
  Vector w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = h[i] / b(i, i);
  w[n - 1] += epsilon;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(w[i] > kStrictTolerance)) {
      BoundReport r = BoundReport::make_inapplicable(kThm, {ReasonCode::WZero, i}, epsilon);
      r.intermediates = {{"w", w}};
      return r;
    }
  }

  // B-bar = B+ W scales column j by w_j.
  Matrix bbar(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) bbar(i, j) = b(i, j) * w[j];

  Vector beta(n);
  Vector delta(n);
  for (std::size_t i = 0; i < n; ++i) {
    double off = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) off += std::abs(bbar(i, j));
    beta[i] = bbar(i, i) - off;
    delta[i] = beta[i] / w[i];
  }
  if (!is_z_matrix(bbar) || !is_strictly_diagonally_dominant(bbar) || !positive_diagonal(bbar)) {
    BoundReport r = BoundReport::make_inapplicable(kThm, {ReasonCode::BbarNotSDDZ, {}}, epsilon);
    r.intermediates = {{"w", w}, {"beta", beta}};
    return r;
  }

  const double delta_min = *std::min_element(delta.begin(), delta.end());
  const double w_max = *std::max_element(w.begin(), w.end());
  const double w_min = *std::min_element(w.begin(), w.end());
  const double value =
      static_cast<double>(n - 1) * w_max / (std::min(delta_min, 1.0) * w_min);

  BoundReport r = BoundReport::make_value(kThm, value, epsilon);
  r.intermediates = {{"h", h}, {"w", w}, {"beta", beta}, {"delta", delta}};
  return r;
}

BoundReport new_bnekrasov_bound(const Matrix& m) {
  constexpr Theorem kThm = Theorem::NewBNekrasov;
  const std::size_t n = m.size();
  if (n < 2) return BoundReport::make_inapplicable(kThm, {ReasonCode::DimensionTooSmall, {}});

  BPlusSplit split;
  if (!b_nekrasov_split(m, &split)) {
    return BoundReport::make_inapplicable(kThm, {ReasonCode::NotBNekrasov, {}});
  }
  const Matrix& b = split.b_plus;
  const Vector h = h_vector(b);
  const Vector eta = eta_vector(b);

  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, eta[i] / std::min(b(i, i) - h[i], 1.0));

  BoundReport r = BoundReport::make_value(kThm, static_cast<double>(n - 1) * worst);
  r.intermediates = {{"h", h}, {"eta", eta}, {"r_plus", split.r_plus}};
  return r;
}

}  // namespace lcpcert
