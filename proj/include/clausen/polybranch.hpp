#pragma once

#include <vector>

namespace clausen {

enum class TrigKind { Sin, Cos };

/// Exact power-basis form of S_j (odd j) or C_j (even j), valid on [0, 2pi].
struct Poly {
  std::vector<double> coeffs;  // a_0..a_j, value = sum a_m x^m
  int order = 0;
  TrigKind kind = TrigKind::Cos;
};

/// Builds the polynomial by integrating up from C_2 = zeta(2) - pi x / 2 + x^2 / 4.
/// Accepts (Cos, even 2..10) and (Sin, odd 3..9); throws std::domain_error otherwise.
Poly build_poly(TrigKind kind, int j);

/// Same as build_poly but served from a build-once cache shared by all threads.
const Poly& cached_poly(TrigKind kind, int j);

/// Horner evaluation for x in [0, 2pi]. x up to 4 ulp above 2pi is clamped;
/// anything else outside the range throws std::domain_error.
double eval_poly(const Poly& p, double x);

}  // namespace clausen
