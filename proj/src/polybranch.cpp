#include "clausen/polybranch.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "clausen/constants.hpp"

namespace clausen {

namespace {

constexpr int kMaxPolyOrder = 10;
constexpr double kTwoPi = 2.0 * kPi;

bool buildable(TrigKind kind, int j) {
  if (kind == TrigKind::Cos) return j >= 2 && j <= kMaxPolyOrder && j % 2 == 0;
  return j >= 3 && j < kMaxPolyOrder && j % 2 == 1;
}

}  // namespace

Poly build_poly(TrigKind kind, int j) {
  if (!buildable(kind, j)) {
    throw std::domain_error("build_poly: no polynomial form for order " + std::to_string(j) +
                            (kind == TrigKind::Sin ? " (sin)" : " (cos)"));
  }

  Poly p{{zeta(2), -kPi / 2.0, 0.25}, 2, TrigKind::Cos};
  while (p.order != j || p.kind != kind) {
    // C_m -> S_{m+1} = int_0^x C_m;  S_m -> C_{m+1} = zeta(m+1) - int_0^x S_m.
    const bool to_sin = p.kind == TrigKind::Cos;
    const double sign = to_sin ? 1.0 : -1.0;
    std::vector<double> next(p.coeffs.size() + 1, 0.0);
    for (std::size_t m = 0; m < p.coeffs.size(); ++m) {
      next[m + 1] = sign * p.coeffs[m] / static_cast<double>(m + 1);
    }
    ++p.order;
    next[0] = to_sin ? 0.0 : zeta(p.order);
    p.coeffs = std::move(next);
    p.kind = to_sin ? TrigKind::Sin : TrigKind::Cos;
  }
  return p;
}

const Poly& cached_poly(TrigKind kind, int j) {
  // Index by order; magic statics make the first build thread-safe.
  static const std::array<Poly, kMaxPolyOrder + 1> table = [] {
    std::array<Poly, kMaxPolyOrder + 1> t{};
    for (int m = 2; m <= kMaxPolyOrder; ++m) {
      t[static_cast<std::size_t>(m)] = build_poly(m % 2 == 0 ? TrigKind::Cos : TrigKind::Sin, m);
    }
    return t;
  }();
  if (!buildable(kind, j)) {
    throw std::domain_error("cached_poly: no polynomial form for order " + std::to_string(j));
  }
  return table[static_cast<std::size_t>(j)];
}

double eval_poly(const Poly& p, double x) {
  if (x > kTwoPi && x <= kTwoPi + 4.0 * (std::nextafter(kTwoPi, 8.0) - kTwoPi)) {
    x = kTwoPi;
  }
  if (!(x >= 0.0 && x <= kTwoPi)) {
    throw std::domain_error("eval_poly: argument outside [0, 2pi]");
  }
  double acc = 0.0;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

}  // namespace clausen
