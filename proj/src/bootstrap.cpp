#include "clausen/bootstrap.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "clausen/cl2.hpp"
#include "clausen/constants.hpp"

namespace clausen {

namespace {

constexpr int kMinLiftOrder = 3;
constexpr int kMaxLiftOrder = 10;
// (n + 1)! overflows a double beyond this.
constexpr int kMaxLogPower = 169;

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// Inner sum over n for one odd r, in units of alpha_r / pi and without the delta term.
double alpha_inner_sum(int r, double tol) {
  const int n0 = r >= 3 ? (r - 3) / 2 : 0;
  double sum = 0.0;
  for (int n = n0;; ++n) {
    if (2 * n + 2 > kMaxZetaOrder) {
      throw std::logic_error("compute_alphas: zeta table too short for tolerance");
    }
    const double term = binomial(2 * n + 3, n + (3 - r) / 2) * zeta(2 * n + 2) /
                        ((n + 1.0) * (2.0 * n + 3.0) * std::ldexp(1.0, 4 * n + 4));
    sum += term;
    if (term < tol / 10.0) break;
  }
  return sum;
}

void check_lift_order(int s, const char* who) {
  if (s < kMinLiftOrder || s > kMaxLiftOrder) {
    throw std::domain_error(std::string(who) + ": order " + std::to_string(s) + " outside [3, 10]");
  }
}

}  // namespace

LogTerm lift_log_term(LogTerm term) {
  if (term.n < 1 || term.n > kMaxLogPower) {
    throw std::domain_error("lift_log_term: power out of range");
  }
  const int n1 = term.n + 1;
  const double f = factorial(n1);
  return {n1, (1.0 + term.alpha * f) / (f * n1)};
}

double eval_log_term(LogTerm term, double x) {
  if (x == 0.0) return 0.0;
  return std::pow(x, term.n) * (-std::log(x) / factorial(term.n) + term.alpha);
}

double repeat_log_int(int m, double x) {
  if (m < 0) throw std::domain_error("repeat_log_int: negative depth");
  if (!(x >= 0.0)) throw std::domain_error("repeat_log_int: negative argument");
  LogTerm term;
  for (int i = 0; i < m; ++i) term = lift_log_term(term);
  return eval_log_term(term, x);
}

AlphaTable compute_alphas(double tol) {
  if (!(tol > 0.0 && tol <= 1e-12)) {
    throw std::domain_error("compute_alphas: tolerance must lie in (0, 1e-12]");
  }
  std::vector<double> alphas{0.0};
  const double alpha1 = kPi * (1.0 + alpha_inner_sum(1, tol));
  alphas.push_back(alpha1);
  for (int r = 3;; r += 2) {
    const double a = kPi * alpha_inner_sum(r, tol);
    if (std::abs(a) < tol * std::abs(alpha1)) break;
    alphas.push_back(0.0);
    alphas.push_back(a);
  }
  const int r_max = static_cast<int>(alphas.size()) - 1;
  return {ChebSeries(std::move(alphas)), r_max, tol};
}

const AlphaTable& alpha_table() {
  static const AlphaTable table = compute_alphas(kAlphaTolerance);
  return table;
}

double log_kernel_sign(int s) {
  double sign = 1.0;
  for (int j = 2; j < s; ++j) sign *= (j % 2 == 0) ? -1.0 : 1.0;
  return sign;
}

ChebSeries lift_alphas(const AlphaTable& table, int target_s) {
  check_lift_order(target_s, "lift_alphas");
  ChebSeries series = table.alphas;
  for (int j = 2; j < target_s; ++j) {
    // Cl_{j+1}(x) = Cl_{j+1}(0) - (-1)^j int_0^x Cl_j, with dx = pi dt.
    const double sign = (j % 2 == 0) ? -1.0 : 1.0;
    series = scale(integrate_cheby(series), sign * kPi);
    if ((j + 1) % 2 == 1) series = add_constant(std::move(series), zeta(j + 1));
  }
  return series;
}

namespace {

const ChebSeries& lifted_series(int s) {
  static const auto table = [] {
    std::array<std::optional<ChebSeries>, kMaxLiftOrder + 1> t;
    for (int order = kMinLiftOrder; order <= kMaxLiftOrder; ++order) {
      t[static_cast<std::size_t>(order)] = lift_alphas(alpha_table(), order);
    }
    return t;
  }();
  return *table[static_cast<std::size_t>(s)];
}

}  // namespace

double clausen_cheby(int s, double x) {
  if (s < 2 || s > kMaxLiftOrder) {
    throw std::domain_error("clausen_cheby: order " + std::to_string(s) + " outside [2, 10]");
  }
  if (!(x >= 0.0 && x <= kPi)) {
    throw std::domain_error("clausen_cheby: argument outside [0, pi]");
  }
  if (s == 2) return cl2(x);
  return log_kernel_sign(s) * repeat_log_int(s - 2, x) + eval_cheby(lifted_series(s), x / kPi);
}

}  // namespace clausen
