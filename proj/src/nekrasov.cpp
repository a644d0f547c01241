#include "lcpcert/nekrasov.hpp"

#include <algorithm>
#include <cmath>

#include "lcpcert/errors.hpp"

namespace lcpcert {

namespace {

constexpr double kZeroDiagonal = 1e-300;

double divisor(const Matrix& a, std::size_t j) {
  const double d = std::abs(a(j, j));
  if (d <= kZeroDiagonal) throw ZeroDiagonal(j);
  return d;
}

// Shared forward pass of the z and eta recursions; `scale` maps |a_jj| to the
// denominator used for column j.
template <typename Scale>
Vector weighted_lower_recursion(const Matrix& a, Scale scale) {
  const std::size_t n = a.size();
  Vector out(n, 1.0);
  for (std::size_t i = 1; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < i; ++j) s += std::abs(a(i, j)) / scale(divisor(a, j)) * out[j];
    out[i] = s + 1.0;
  }
  return out;
}

}  // namespace

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::GpNekrasov: return "gp_nekrasov";
    case Theorem::NewNekrasov: return "new_nekrasov";
    case Theorem::GpBNekrasov: return "gp_bnekrasov";
    case Theorem::NewBNekrasov: return "new_bnekrasov";
    case Theorem::Kolotilina: return "kolotilina";
  }
  return "unknown";
}

std::string to_string(const Reason& r) {
  std::string name;
  switch (r.code) {
    case ReasonCode::NotNekrasov: name = "NotNekrasov"; break;
    case ReasonCode::NonPositiveDiagonal: name = "NonPositiveDiagonal"; break;
    case ReasonCode::ZeroUpperRow: name = "ZeroUpperRow"; break;
    case ReasonCode::EpsilonOutOfRange: name = "EpsilonOutOfRange"; break;
    case ReasonCode::DegenerateS: name = "DegenerateS"; break;
    case ReasonCode::DimensionTooSmall: name = "DimensionTooSmall"; break;
    case ReasonCode::NotBNekrasov: name = "NotBNekrasov"; break;
    case ReasonCode::NoStrictEntry: name = "NoStrictEntry"; break;
    case ReasonCode::WZero: name = "WZero"; break;
    case ReasonCode::BbarNotSDDZ: name = "BbarNotSDDZ"; break;
  }
  if (r.row) name += "(" + std::to_string(*r.row + 1) + ")";
  return name;
}

BoundReport BoundReport::make_value(Theorem t, double v, std::optional<double> eps) {
  BoundReport r{t, v, std::nullopt, eps, {}};
  return r;
}

BoundReport BoundReport::make_inapplicable(Theorem t, Reason reason,
                                           std::optional<double> eps) {
  BoundReport r{t, std::nullopt, reason, eps, {}};
  return r;
}

bool EpsilonInterval::contains(double eps) const noexcept {
  const double slack = kStrictTolerance * std::max(std::abs(lower), std::abs(upper));
  return eps > lower + slack && eps < upper - slack;
}

Vector h_vector(const Matrix& a) {
  const std::size_t n = a.size();
  Vector h(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < i; ++j) s += std::abs(a(i, j)) / divisor(a, j) * h[j];
    for (std::size_t j = i + 1; j < n; ++j) s += std::abs(a(i, j));
    h[i] = s;
  }
  return h;
}

Vector z_vector(const Matrix& a) {
  return weighted_lower_recursion(a, [](double d) { return d; });
}

Vector eta_vector(const Matrix& m) {
  return weighted_lower_recursion(m, [](double d) { return std::min(d, 1.0); });
}

NekrasovProfile is_nekrasov(const Matrix& a) {
  NekrasovProfile p;
  try {
    p.h = h_vector(a);
    p.z = z_vector(a);
    p.eta = eta_vector(a);
  } catch (const ZeroDiagonal& e) {
    p.h.clear();
    p.z.clear();
    p.eta.clear();
    p.zero_diagonal = e.index();
    return p;
  }
  const std::size_t n = a.size();
  p.margins.resize(n);
  p.is_nekrasov = n > 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double diag = std::abs(a(i, i));
    p.margins[i] = diag - p.h[i];
    if (!(p.margins[i] > kStrictTolerance * std::max(1.0, diag))) p.is_nekrasov = false;
  }
  return p;
}

bool is_nekrasov_positive_diagonal(const Matrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a(i, i) > 0.0)) return false;
  return is_nekrasov(a).is_nekrasov;
}

BoundReport kolotilina_bound(const Matrix& a) {
  const NekrasovProfile p = is_nekrasov(a);
  if (!p.is_nekrasov) {
    return BoundReport::make_inapplicable(Theorem::Kolotilina, {ReasonCode::NotNekrasov, {}});
  }
  double value = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) value = std::max(value, p.z[i] / p.margins[i]);
  BoundReport r = BoundReport::make_value(Theorem::Kolotilina, value);
  r.intermediates = {{"h", p.h}, {"z", p.z}};
  return r;
}

Matrix scaled_matrix(const Matrix& m, std::span<const double> d) {
  const std::size_t n = m.size();
  if (d.size() != n) {
    throw DimensionMismatch("scaling vector of length " + std::to_string(d.size()) +
                            " for dimension " + std::to_string(n));
  }
  for (double di : d) {
    if (!(di >= 0.0 && di <= 1.0)) throw DomainError("d entries must lie in [0, 1]");
  }
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = d[i] * m(i, j);
    out(i, i) += 1.0 - d[i];
  }
  return out;
}

std::optional<EpsilonInterval> gp_nekrasov_epsilon_interval(const Matrix& m) {
  if (m.size() == 0 || !is_nekrasov_positive_diagonal(m)) return std::nullopt;
  const std::size_t last = m.size() - 1;
  const Vector h = h_vector(m);
  return EpsilonInterval{0.0, 1.0 - h[last] / m(last, last)};
}

BoundReport gp_nekrasov_bound(const Matrix& m, double epsilon) {
  constexpr Theorem kThm = Theorem::GpNekrasov;
  const std::size_t n = m.size();
  if (n < 2) return BoundReport::make_inapplicable(kThm, {ReasonCode::DimensionTooSmall, {}}, epsilon);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(m(i, i) > 0.0)) {
      return BoundReport::make_inapplicable(kThm, {ReasonCode::NonPositiveDiagonal, i}, epsilon);
    }
  }
  const NekrasovProfile p = is_nekrasov(m);
  if (!p.is_nekrasov) {
    return BoundReport::make_inapplicable(kThm, {ReasonCode::NotNekrasov, {}}, epsilon);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    bool has_upper = false;
    for (std::size_t j = i + 1; j < n; ++j) has_upper = has_upper || m(i, j) != 0.0;
    if (!has_upper) {
      return BoundReport::make_inapplicable(kThm, {ReasonCode::ZeroUpperRow, i}, epsilon);
    }
  }
  const EpsilonInterval range{0.0, 1.0 - p.h[n - 1] / m(n - 1, n - 1)};
  if (!range.contains(epsilon)) {
    return BoundReport::make_inapplicable(kThm, {ReasonCode::EpsilonOutOfRange, {}}, epsilon);
  }

  Vector w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = p.h[i] / m(i, i);
  w[n - 1] += epsilon;

  Vector s(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) acc += std::abs(m(i, j)) * (1.0 - w[j]);
    s[i] = acc;
  }
  s[n - 1] = epsilon * m(n - 1, n - 1);

  const auto s_min = std::min_element(s.begin(), s.end());
  if (!(*s_min > kStrictTolerance)) {
    BoundReport r = BoundReport::make_inapplicable(
        kThm, {ReasonCode::DegenerateS, static_cast<std::size_t>(s_min - s.begin())}, epsilon);
    r.intermediates = {{"w", w}, {"s", s}};
    return r;
  }
  const double w_max = *std::max_element(w.begin(), w.end());
  const double w_min = *std::min_element(w.begin(), w.end());
  const double value = std::max(w_max / *s_min, w_max / w_min);

  BoundReport r = BoundReport::make_value(kThm, value, epsilon);
  r.intermediates = {{"h", p.h}, {"w", w}, {"s", s}};
  return r;
}

BoundReport new_nekrasov_bound(const Matrix& m) {
  constexpr Theorem kThm = Theorem::NewNekrasov;
  const std::size_t n = m.size();
  if (n == 0) return BoundReport::make_inapplicable(kThm, {ReasonCode::DimensionTooSmall, {}});
  for (std::size_t i = 0; i < n; ++i) {
    if (!(m(i, i) > 0.0)) {
      return BoundReport::make_inapplicable(kThm, {ReasonCode::NonPositiveDiagonal, i});
    }
  }
  const NekrasovProfile p = is_nekrasov(m);
  if (!p.is_nekrasov) return BoundReport::make_inapplicable(kThm, {ReasonCode::NotNekrasov, {}});

  double value = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    value = std::max(value, p.eta[i] / std::min(m(i, i) - p.h[i], 1.0));
  }
  BoundReport r = BoundReport::make_value(kThm, value);
  r.intermediates = {{"h", p.h}, {"eta", p.eta}};
  return r;
}

}  // namespace lcpcert
