#pragma once

// Public entry points for the trigonometric Clausen sums
//
//   C_j(x)  = sum_{k>=1} cos(kx) / k^j
//   S_j(x)  = sum_{k>=1} sin(kx) / k^j
//   Cl_j(x) = S_j(x) for even j, C_j(x) for odd j
//
// for integer j >= 1 and real x. All three are total over (int, double):
// they return NaN for j < 1, for non-finite x, and for C_1 at x = 0 (mod 2pi),
// and never throw. They are safe to call concurrently from any number of threads.

#include "clausen/polybranch.hpp"

namespace clausen {

enum class Kind { SinSum, CosSum, Clausen };

struct EvalRequest {
  Kind kind = Kind::Clausen;
  int order = 1;
  double x = 0.0;
};

/// x reduced to [0, pi]; `sign` is the factor the sin-kind value picks up.
struct ReducedArg {
  double xr = 0.0;
  double sign = 1.0;
};

/// Maps x into [0, pi] by 2pi-periodicity and the fold x -> 2pi - x.
/// A two-word 2pi keeps |x| <= 1e8 accurate to about 1e-9 absolute. When x is
/// the double nearest a nonzero multiple of 2pi the result is exactly 0.
ReducedArg reduce(double x, TrigKind kind);

/// Number of leading terms for which the dropped tail of sum k^-j is below 2^-53.
/// Requires j >= 11 (the direct-summation orders).
int terms_needed(int j);

/// Truncated direct sum for j >= 11, xr in [0, pi], accumulated smallest term first.
double direct_sum(TrigKind kind, int j, double xr);

double clausen_sin(int j, double x);
double clausen_cos(int j, double x);
double clausen(int j, double x);

double evaluate(const EvalRequest& request);

/// Orders above this are served by direct_sum.
inline constexpr int kMaxSeriesOrder = 10;

}  // namespace clausen
