#pragma once

#include <numbers>

namespace clausen {

inline constexpr double kPi = std::numbers::pi;
// pi - kPi, the part of pi below double resolution.
inline constexpr double kPiLow = 1.2246467991473532e-16;

/// Riemann zeta at integer order, 2 <= j <= kMaxZetaOrder.
/// Throws std::domain_error outside that range.
double zeta(int j);

/// |B_m| for even 2 <= m <= kMaxBernoulliIndex.
/// Throws std::domain_error for odd or out-of-range m.
double bernoulli_abs(int m);

inline constexpr int kMaxZetaOrder = 64;
inline constexpr int kMaxBernoulliIndex = 60;

}  // namespace clausen
