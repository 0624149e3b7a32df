#pragma once

// Data-parallel kernels. Every OpenMP kernel has a `_serial` twin with the
// same contract; the tests compare them element for element and the
// benchmark target times them against each other.

#include <cstddef>
#include <span>
#include <vector>

#include "mostn/core.hpp"

namespace mostn::kernels {

/// Pairwise dominance structure used by fast non-dominated sorting.
/// `dominated_by_count[i]` is how many points dominate i; `dominates_list[i]`
/// lists the points i dominates in ascending index order.
struct DominanceTable {
    std::vector<int> dominated_by_count;
    std::vector<std::vector<std::size_t>> dominates_list;
};

DominanceTable dominance_table(std::span<const ObjectiveVector> pts);
DominanceTable dominance_table_serial(std::span<const ObjectiveVector> pts);

/// Below this many points `dominance_table` runs serially; thread start-up
/// costs more than the work.
inline constexpr std::size_t kParallelDominanceThreshold = 512;

/// For every reference point, the Euclidean distance to its nearest
/// approximation point.
std::vector<double> nearest_distances(std::span<const ObjectiveVector> reference,
                                      std::span<const ObjectiveVector> approx);
std::vector<double> nearest_distances_serial(std::span<const ObjectiveVector> reference,
                                             std::span<const ObjectiveVector> approx);

}  // namespace mostn::kernels
