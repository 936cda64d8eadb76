#pragma once

#include "clausen/chebyshev.hpp"

namespace clausen {

/// x^n (-ln x / n! + alpha): the log kernel of Cl_2 after n - 1 integrations.
struct LogTerm {
  int n = 1;
  double alpha = 0.0;
};

/// Integral from 0 to x of the term, in the same form with n + 1.
/// Throws std::domain_error when (n + 1)! would overflow a double.
LogTerm lift_log_term(LogTerm term);

/// Value of the term at x >= 0 (zero at x = 0).
double eval_log_term(LogTerm term, double x);

/// m-fold repeated integral of -t ln t from 0 to x. Throws for m < 0 or x < 0.
double repeat_log_int(int m, double x);

/// Full-period expansion Cl_2(x) = -x ln x + sum_r alpha_r T_r(x / pi), -pi <= x <= pi.
/// Even-index entries are exactly zero.
struct AlphaTable {
  ChebSeries alphas;
  int r_max;
  double tol;
};

inline constexpr double kAlphaTolerance = 1e-18;

/// Generates alpha_r from the zeta-series expansion of the non-logarithmic part of Cl_2.
/// Odd r are kept while |alpha_r| >= tol |alpha_1|. Requires 0 < tol <= 1e-12.
AlphaTable compute_alphas(double tol);

/// Shared table built with kAlphaTolerance.
const AlphaTable& alpha_table();

/// Chebyshev part of Cl_s(pi t), obtained by integrating the alpha series s - 2 times.
/// Requires 3 <= s <= 10.
ChebSeries lift_alphas(const AlphaTable& table, int target_s);

/// Sign picked up by the log kernel on the way from Cl_2 to Cl_s.
double log_kernel_sign(int s);

/// Cl_s(x) for 2 <= s <= 10 and 0 <= x <= pi. s = 2 goes through cl2().
double clausen_cheby(int s, double x);

}  // namespace clausen
