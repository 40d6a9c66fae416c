#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vulnkit/arith.hpp"

namespace vulnkit {

using IndexSet = std::vector<std::size_t>;

/// Indices whose weight sum is the smallest value >= target (empty when
/// target <= 0). Weights must be positive; throws std::invalid_argument if
/// the total is below target. O(target * r) table.
IndexSet minsup(std::span<const Weight> weights, Weight target);

/// Indices whose weight sum is the largest value <= cap. Requires cap >= 0.
IndexSet maxinf(std::span<const Weight> weights, Weight cap);

Weight sum_at(std::span<const Weight> weights, const IndexSet& indices);

} // namespace vulnkit
