#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace clift::jets {

// Truncated univariate Taylor series ("jet") in a formal amplitude.
// A jet of order N carries coefficients c_0..c_N; all arithmetic truncates
// exactly at order N, so a result never references coefficients beyond N.
// Coefficient recurrences for sqrt/log/exp follow the standard scheme of
// Griewank & Walther rather than Newton iteration, so results are
// deterministic for a given order.
class Jet {
public:
  static constexpr int kMaxOrder = 16;

  Jet() : order_(0) {}

  // Constant jet: c_0 = value, all higher coefficients zero.
  Jet(int order, double value) : order_(check_order(order)) { c_[0] = value; }

  // The expansion variable itself: value + lambda.
  static Jet variable(int order, double value) {
    Jet j(order, value);
    if (order >= 1) j.c_[1] = 1.0;
    return j;
  }

  int order() const { return order_; }

  double operator[](int k) const { return c_[static_cast<size_t>(k)]; }
  double& operator[](int k) { return c_[static_cast<size_t>(k)]; }

  double constant_term() const { return c_[0]; }

  // Value of the truncated polynomial at a given amplitude.
  double eval(double lambda) const {
    double r = 0.0;
    for (int k = order_; k >= 0; --k) r = c_[static_cast<size_t>(k)] + lambda * r;
    return r;
  }

  bool all_finite() const {
    for (int k = 0; k <= order_; ++k)
      if (!std::isfinite(c_[static_cast<size_t>(k)])) return false;
    return true;
  }

private:
  static int check_order(int order) {
    if (order < 0 || order > kMaxOrder)
      throw std::invalid_argument("jet order must be in [0, 16]");
    return order;
  }

  std::array<double, kMaxOrder + 1> c_{};
  int order_ = 0;
};

namespace detail {
inline void require_same_order(const Jet& a, const Jet& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("jet order mismatch");
}
// Constant terms this small make 1/c_0 meaningless in double precision;
// fail loudly instead of producing a silent Inf.
constexpr double kDivFloor = 1e-300;
} // namespace detail

inline Jet operator+(const Jet& a, const Jet& b) {
  detail::require_same_order(a, b);
  Jet r = a;
  for (int k = 0; k <= a.order(); ++k) r[k] += b[k];
  return r;
}

inline Jet operator-(const Jet& a, const Jet& b) {
  detail::require_same_order(a, b);
  Jet r = a;
  for (int k = 0; k <= a.order(); ++k) r[k] -= b[k];
  return r;
}

inline Jet operator-(const Jet& a) {
  Jet r = a;
  for (int k = 0; k <= a.order(); ++k) r[k] = -r[k];
  return r;
}

inline Jet operator*(const Jet& a, double s) {
  Jet r = a;
  for (int k = 0; k <= a.order(); ++k) r[k] *= s;
  return r;
}
inline Jet operator*(double s, const Jet& a) { return a * s; }
inline Jet operator/(const Jet& a, double s) { return a * (1.0 / s); }

inline Jet operator+(const Jet& a, double s) {
  Jet r = a;
  r[0] += s;
  return r;
}
inline Jet operator+(double s, const Jet& a) { return a + s; }
inline Jet operator-(const Jet& a, double s) { return a + (-s); }
inline Jet operator-(double s, const Jet& a) { return (-a) + s; }

// Truncated Cauchy product.
inline Jet operator*(const Jet& a, const Jet& b) {
  detail::require_same_order(a, b);
  const int n = a.order();
  Jet r(n, 0.0);
  for (int k = 0; k <= n; ++k) {
    double acc = 0.0;
    for (int i = 0; i <= k; ++i) acc += a[i] * b[k - i];
    r[k] = acc;
  }
  return r;
}

// Quotient q with q*b == a at truncation order; requires b.c_0 != 0.
inline Jet operator/(const Jet& a, const Jet& b) {
  detail::require_same_order(a, b);
  if (std::abs(b.constant_term()) < detail::kDivFloor)
    throw std::domain_error("jet division by (near-)zero constant term");
  const int n = a.order();
  Jet q(n, 0.0);
  for (int k = 0; k <= n; ++k) {
    double acc = a[k];
    for (int i = 0; i < k; ++i) acc -= q[i] * b[k - i];
    q[k] = acc / b[0];
  }
  return q;
}

inline Jet operator/(double s, const Jet& b) {
  return Jet(b.order(), s) / b;
}

// Square root with positive branch; requires a.c_0 > 0.
inline Jet sqrt(const Jet& a) {
  if (!(a.constant_term() > 0.0))
    throw std::domain_error("jet sqrt requires positive constant term");
  const int n = a.order();
  Jet r(n, std::sqrt(a.constant_term()));
  for (int k = 1; k <= n; ++k) {
    double acc = a[k];
    for (int i = 1; i < k; ++i) acc -= r[i] * r[k - i];
    r[k] = acc / (2.0 * r[0]);
  }
  return r;
}

inline Jet log(const Jet& a) {
  if (!(a.constant_term() > 0.0))
    throw std::domain_error("jet log requires positive constant term");
  const int n = a.order();
  Jet r(n, std::log(a.constant_term()));
  for (int k = 1; k <= n; ++k) {
    double acc = a[k];
    for (int i = 1; i < k; ++i) acc -= (static_cast<double>(i) / k) * r[i] * a[k - i];
    r[k] = acc / a[0];
  }
  return r;
}

inline Jet exp(const Jet& a) {
  const int n = a.order();
  Jet r(n, std::exp(a.constant_term()));
  for (int k = 1; k <= n; ++k) {
    double acc = 0.0;
    for (int i = 1; i <= k; ++i) acc += static_cast<double>(i) * a[i] * r[k - i];
    r[k] = acc / k;
  }
  return r;
}

} // namespace clift::jets
