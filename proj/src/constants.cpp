#include "clausen/constants.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace clausen {
namespace {
#include "constants_table.inc"

static_assert(kZetaTable.size() == kMaxZetaOrder - 1);
static_assert(kBernoulliAbsTable.size() == kMaxBernoulliIndex / 2);
}  // namespace

double zeta(int j) {
  if (j < 2 || j > kMaxZetaOrder) {
    throw std::domain_error("zeta: order " + std::to_string(j) + " outside table");
  }
  return kZetaTable[static_cast<std::size_t>(j - 2)];
}

double bernoulli_abs(int m) {
  if (m < 2 || m > kMaxBernoulliIndex || m % 2 != 0) {
    throw std::domain_error("bernoulli_abs: index " + std::to_string(m) +
                            " must be even and within the table");
  }
  return kBernoulliAbsTable[static_cast<std::size_t>(m / 2 - 1)];
}

}  // namespace clausen
