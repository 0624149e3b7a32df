#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mostn/core.hpp"
#include "mostn/problems.hpp"

namespace mostn {

/// Rank-0 subset of `points`, with equal vectors collapsed to their first
/// occurrence. Input order is kept.
std::vector<ObjectiveVector> filter_nondominated(std::span<const ObjectiveVector> points);

struct HypervolumeResult {
    double volume = 0.0;
    std::size_t retained = 0;  ///< points strictly inside the reference box; 0 means nothing counted

    bool empty() const { return retained == 0; }
};

/// Exact dominated volume bounded by `ref`. Points that do not strictly
/// dominate `ref` are dropped first. Sweep for two objectives, slicing on the
/// last objective above that.
HypervolumeResult hypervolume(std::span<const ObjectiveVector> points, std::span<const double> ref);

/// Mean distance from each reference point to its nearest approximation point.
double igd(std::span<const ObjectiveVector> approx, std::span<const ObjectiveVector> front);

/// Reference point (1.1, ..., 1.1) for m objectives.
ObjectiveVector default_hv_reference(int m);

}  // namespace mostn
