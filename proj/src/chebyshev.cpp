#include "clausen/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace clausen {

namespace {
constexpr double kClampSlack = 1e-12;
}

ChebSeries::ChebSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::domain_error("ChebSeries: empty coefficient vector");
  }
  if (!std::ranges::all_of(coeffs_, [](double c) { return std::isfinite(c); })) {
    throw std::domain_error("ChebSeries: non-finite coefficient");
  }
}

double eval_cheby(const ChebSeries& series, double t) {
  if (!(std::abs(t) <= 1.0 + kClampSlack)) {
    throw std::domain_error("eval_cheby: argument outside [-1, 1]");
  }
  t = std::clamp(t, -1.0, 1.0);

  const auto c = series.coeffs();
  const double two_t = 2.0 * t;
  double b1 = 0.0;  // b_{k+1}
  double b2 = 0.0;  // b_{k+2}
  for (std::size_t k = c.size() - 1; k >= 1; --k) {
    const double b0 = c[k] + two_t * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  // Full-weight c_0.
  return c[0] + t * b1 - b2;
}

ChebSeries integrate_cheby(const ChebSeries& series) {
  const auto c = series.coeffs();
  std::vector<double> out(c.size() + 1, 0.0);

  for (std::size_t k = 0; k < c.size(); ++k) {
    const double cn = c[k];
    if (cn == 0.0) continue;
    const auto n = static_cast<double>(k);
    if (k == 0) {
      out[1] += cn;
    } else if (k == 1) {
      out[2] += cn / 4.0;
      out[0] += cn / 4.0;
    } else {
      out[k + 1] += cn / (2.0 * (n + 1.0));
      out[k - 1] -= cn / (2.0 * (n - 1.0));
      if (k % 2 == 1) {
        // T_{n+1}(0) and T_{n-1}(0) do not cancel for odd n; pin the value at 0.
        const double sign = ((k - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
        out[0] += sign * n / (n * n - 1.0) * cn;
      }
    }
  }
  return ChebSeries(std::move(out));
}

ChebSeries add_constant(ChebSeries series, double c) {
  std::vector<double> coeffs(series.coeffs().begin(), series.coeffs().end());
  coeffs[0] += c;
  return ChebSeries(std::move(coeffs));
}

ChebSeries scale(ChebSeries series, double factor) {
  std::vector<double> coeffs(series.coeffs().begin(), series.coeffs().end());
  for (double& v : coeffs) v *= factor;
  return ChebSeries(std::move(coeffs));
}

}  // namespace clausen
