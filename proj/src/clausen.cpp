#include "clausen/clausen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "clausen/bootstrap.hpp"
#include "clausen/constants.hpp"

namespace clausen {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kTwoPiHi = 6.283185307179586;
constexpr double kTwoPiLo = 2.4492935982947064e-16;
constexpr int kMinDirectTerms = 5;

}  // namespace

ReducedArg reduce(double x, TrigKind kind) {
  if (!std::isfinite(x)) return {kNaN, 1.0};

  // Nearest multiple of 2pi leaves r in [-pi, pi]; the fold is then r -> |r|.
  const double n = std::nearbyint(x / kTwoPiHi);
  double r = x;
  if (n != 0.0) r = std::fma(-n, kTwoPiHi, x) - n * kTwoPiLo;

  ReducedArg out{std::abs(r), (kind == TrigKind::Sin && r < 0.0) ? -1.0 : 1.0};
  if (n != 0.0) {
    // Below half an ulp of x the argument cannot tell x from n * 2pi.
    const double ax = std::abs(x);
    const double half_ulp = 0.5 * (std::nextafter(ax, std::numeric_limits<double>::infinity()) - ax);
    if (out.xr < half_ulp) out.xr = 0.0;
  }
  out.xr = std::min(out.xr, kPi);
  return out;
}

int terms_needed(int j) {
  if (j <= kMaxSeriesOrder) {
    throw std::domain_error("terms_needed: direct summation is only used above order 10");
  }
  // Tail sum_{k>N} k^-j <= N^(1-j) / (j-1) < eps.
  const double eps = std::ldexp(1.0, -53);
  const double n = std::ceil(std::pow(eps * (j - 1), -1.0 / (j - 1)));
  return std::max(kMinDirectTerms, static_cast<int>(n));
}

double direct_sum(TrigKind kind, int j, double xr) {
  const int terms = terms_needed(j);
  double sum = 0.0;
  for (int k = terms; k >= 1; --k) {
    const double kx = k * xr;
    const double trig = kind == TrigKind::Sin ? std::sin(kx) : std::cos(kx);
    sum += trig / std::pow(static_cast<double>(k), j);
  }
  return sum;
}

double clausen_sin(int j, double x) {
  if (j < 1 || !std::isfinite(x)) return kNaN;
  const auto [xr, sign] = reduce(x, TrigKind::Sin);
  if (xr == 0.0) return 0.0;  // also the sawtooth's midpoint for j = 1

  if (j == 1) return sign * (kPi - xr) / 2.0;
  if (j > kMaxSeriesOrder) return sign * direct_sum(TrigKind::Sin, j, xr);
  if (j % 2 == 1) return sign * eval_poly(cached_poly(TrigKind::Sin, j), xr);
  return sign * clausen_cheby(j, xr);
}

double clausen_cos(int j, double x) {
  if (j < 1 || !std::isfinite(x)) return kNaN;
  const double xr = reduce(x, TrigKind::Cos).xr;

  if (j == 1) {
    if (xr == 0.0) return kNaN;  // zeta(1)
    return -std::log(2.0 * std::sin(xr / 2.0));
  }
  if (j > kMaxSeriesOrder) return direct_sum(TrigKind::Cos, j, xr);
  if (j % 2 == 0) return eval_poly(cached_poly(TrigKind::Cos, j), xr);
  return clausen_cheby(j, xr);
}

double clausen(int j, double x) {
  return j % 2 == 0 ? clausen_sin(j, x) : clausen_cos(j, x);
}

double evaluate(const EvalRequest& request) {
  switch (request.kind) {
    case Kind::SinSum:
      return clausen_sin(request.order, request.x);
    case Kind::CosSum:
      return clausen_cos(request.order, request.x);
    case Kind::Clausen:
      return clausen(request.order, request.x);
  }
  return kNaN;
}

}  // namespace clausen
