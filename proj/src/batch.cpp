#include "clausen/batch.hpp"

#include <cstddef>
#include <stdexcept>

namespace clausen {

namespace {

void check_sizes(std::span<const double> xs, std::span<double> out) {
  if (xs.size() != out.size()) {
    throw std::invalid_argument("evaluate_batch: input and output lengths differ");
  }
}

}  // namespace

void evaluate_batch(Kind kind, int order, std::span<const double> xs, std::span<double> out) {
  check_sizes(xs, out);
  // Publish the lazily built tables before the threads fan out.
  if (!xs.empty()) out[0] = evaluate({kind, order, xs[0]});

  const auto n = static_cast<std::ptrdiff_t>(xs.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 1; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = evaluate({kind, order, xs[static_cast<std::size_t>(i)]});
  }
}

void evaluate_batch_serial(Kind kind, int order, std::span<const double> xs, std::span<double> out) {
  check_sizes(xs, out);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out[i] = evaluate({kind, order, xs[i]});
  }
}

}  // namespace clausen
