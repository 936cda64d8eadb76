#pragma once

#include <span>
#include <vector>

namespace clausen {

/// Chebyshev series sum_r c_r T_r(t) in the scaled argument t = x / pi.
///
/// Coefficients use the full-weight convention: c_0 multiplies T_0 = 1 as is,
/// it is NOT halved as in many classical tables. Construction rejects empty or
/// non-finite coefficient vectors with std::domain_error.
class ChebSeries {
 public:
  explicit ChebSeries(std::vector<double> coeffs);

  [[nodiscard]] std::span<const double> coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }
  [[nodiscard]] double operator[](std::size_t r) const { return coeffs_[r]; }

 private:
  std::vector<double> coeffs_;
};

/// Backward (Clenshaw) recurrence, highest index first. |t| is clamped to 1
/// when it exceeds 1 by at most 1e-12; larger |t| throws std::domain_error.
double eval_cheby(const ChebSeries& series, double t);

/// Coefficients of t -> integral_0^t p(u) du, same variable t, one term longer.
/// The result vanishes at t = 0.
ChebSeries integrate_cheby(const ChebSeries& series);

/// Shifts the series by c everywhere (c_0 += c).
ChebSeries add_constant(ChebSeries series, double c);

/// Multiplies every coefficient by factor.
ChebSeries scale(ChebSeries series, double factor);

}  // namespace clausen
