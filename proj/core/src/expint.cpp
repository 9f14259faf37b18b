#include "clift/expint.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace clift::numerics {

namespace detail {

constexpr double kEulerGamma = 0.5772156649015328606;

// E_1(z) = -gamma - ln z + sum_{k>=1} (-1)^{k+1} z^k / (k k!)
double e1_series(double z) {
  double term = 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 60; ++k) {
    term *= -z / k;
    const double add = -term / k;
    sum += add;
    if (std::abs(add) < 1e-18 * std::abs(sum)) break;
  }
  return -kEulerGamma - std::log(z) + sum;
}

// E_1(z) = e^{-z} / (z + 1 - 1/(z + 3 - 4/(z + 5 - 9/(...)))),
// evaluated with the modified Lentz algorithm.
double e1_continued_fraction(double z) {
  const double tiny = 1e-30;
  double b = z + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int k = 1; k <= 200; ++k) {
    const double a = -static_cast<double>(k) * k;
    b += 2.0;
    d = a * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-z) * h;
}

} // namespace detail

double e1(double z) {
  if (!(z > 0.0)) throw std::domain_error("e1 requires z > 0");
  if (z > 700.0) return 0.0; // e^{-z} underflows
  return z < 1.0 ? detail::e1_series(z) : detail::e1_continued_fraction(z);
}

double exp_integral_e(int n, double z) {
  if (n < 1) throw std::domain_error("exp_integral_e requires n >= 1");
  if (!(z > 0.0)) throw std::domain_error("exp_integral_e requires z > 0");
  double en = e1(z);
  if (n == 1) return en;
  // E_{k+1}(z) = (e^{-z} - z E_k(z)) / k, stepping up from E_1.
  const double ez = std::exp(-z);
  for (int k = 1; k < n; ++k) en = (ez - z * en) / k;
  return en;
}

} // namespace clift::numerics
