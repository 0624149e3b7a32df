#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mostn/core.hpp"

namespace mostn {

/// Nonnegative weights summing to one.
using WeightVector = std::vector<double>;

/// Componentwise best objective value seen so far in a run.
class IdealPoint {
public:
    IdealPoint() = default;
    explicit IdealPoint(std::size_t m);

    void update(std::span<const double> f);
    std::span<const double> values() const { return z_; }
    std::size_t size() const { return z_.size(); }
    bool initialized() const { return seen_; }

private:
    std::vector<double> z_;
    bool seen_ = false;
};

/// Full simplex lattice {k/H} in m dimensions, C(H+m-1, m-1) vectors,
/// in lexicographic order of the numerators.
std::vector<WeightVector> simplex_lattice(int m, int divisions);

/// Lattice with the largest H whose size does not exceed `target`.
std::vector<WeightVector> sld_weights(int m, int target);

/// Exactly `n` weight vectors from a good-lattice-point uniform design
/// mapped onto the simplex. For m = 2 the first components increase.
std::vector<WeightVector> uniform_design_weights(int m, int n);

/// Exactly `k` simplex points: the largest simplex lattice that fits,
/// topped up with uniform-design points. k < m returns the first k corners.
std::vector<WeightVector> simplex_points(int m, std::size_t k);

/// Weighted Tchebycheff aggregation max_i w_i |f_i - z_i|.
double tchebycheff(std::span<const double> f, std::span<const double> w, std::span<const double> z);

}  // namespace mostn
