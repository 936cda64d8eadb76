#pragma once

#include <span>

#include "clausen/clausen.hpp"

namespace clausen {

/// out[i] = evaluate({kind, order, xs[i]}), OpenMP-parallel over i.
/// Results are bit-identical to the serial kernel. Throws std::invalid_argument
/// when the spans differ in length.
void evaluate_batch(Kind kind, int order, std::span<const double> xs, std::span<double> out);

/// Single-threaded reference for evaluate_batch.
void evaluate_batch_serial(Kind kind, int order, std::span<const double> xs, std::span<double> out);

}  // namespace clausen
