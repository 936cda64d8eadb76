#include "clausen/cl2.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "clausen/constants.hpp"

namespace clausen {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Cl2Kernel build_kernel() {
  Cl2Kernel k;
  k.split_point = kPi / 2.0;
  const double w = k.split_point;  // worst case for both halves

  for (int n = 0;; ++n) {
    const int m = 2 * n + 2;
    if (m > kMaxBernoulliIndex) throw std::logic_error("cl2: Bernoulli table too short");
    const double g = bernoulli_abs(m) / (2.0 * (n + 1) * factorial(2 * n + 3));
    if (g * std::pow(w, 2 * n + 3) < kCl2TruncationBound) break;
    k.inner_coeffs.push_back(g);
  }

  for (int n = 1;; ++n) {
    const int m = 2 * n;
    if (m > kMaxBernoulliIndex) throw std::logic_error("cl2: Bernoulli table too short");
    const double h = (std::ldexp(1.0, 2 * n) - 1.0) * bernoulli_abs(m) / (2.0 * n * factorial(2 * n + 1));
    if (h * std::pow(w, 2 * n + 1) < kCl2TruncationBound) break;
    k.outer_coeffs.push_back(h);
  }
  return k;
}

// sum_n c[n] y^n
double horner(const std::vector<double>& c, double y) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * y + *it;
  return acc;
}

}  // namespace

const Cl2Kernel& cl2_kernel() {
  static const Cl2Kernel kernel = build_kernel();
  return kernel;
}

double cl2(double x) {
  if (!(x >= 0.0 && x <= kPi)) {
    throw std::domain_error("cl2: argument outside [0, pi]");
  }
  const Cl2Kernel& k = cl2_kernel();
  if (x <= k.split_point) {
    if (x == 0.0) return 0.0;
    const double x2 = x * x;
    return x - x * std::log(x) + x * x2 * horner(k.inner_coeffs, x2);
  }
  // pi - x with the low word of pi restored.
  const double u = (kPi - x) + kPiLow;
  const double u2 = u * u;
  return u * (std::numbers::ln2 - u2 * horner(k.outer_coeffs, u2));
}

}  // namespace clausen
