#pragma once

#include <vector>

namespace clausen {

/// Power-series weights for Cl_2 on the two halves of [0, pi].
///
/// Below the split:  Cl_2(x) = x - x ln x + x^3 sum_n inner[n] x^(2n)
/// Above the split:  Cl_2(x) = u (ln 2 - sum_n outer[n-1] u^(2n)),  u = pi - x, n >= 1
///
/// with inner[n] = |B_{2n+2}| / (2 (n+1) (2n+3)!) and
///      outer[n-1] = (2^(2n) - 1) |B_{2n}| / (2n (2n+1)!).
/// Both vectors stop once the next term, bounded at the split point, drops below
/// kCl2TruncationBound.
struct Cl2Kernel {
  std::vector<double> inner_coeffs;
  std::vector<double> outer_coeffs;
  double split_point = 0.0;
};

inline constexpr double kCl2TruncationBound = 1e-18;

const Cl2Kernel& cl2_kernel();

/// Cl_2(x) = S_2(x) for 0 <= x <= pi; throws std::domain_error otherwise.
double cl2(double x);

}  // namespace clausen
