#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mostn {

using DecisionVector = std::vector<double>;
using ObjectiveVector = std::vector<double>;

/// Thrown when two vectors that must agree in length do not.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A candidate solution. `birth` is the iteration in which it was created
/// (0 for the initial population).
struct Solution {
    DecisionVector x;
    ObjectiveVector f;
    int birth = 0;
};

enum class Dominance { ADominatesB, BDominatesA, Incomparable, Equal };

/// Pareto comparison under minimization.
Dominance dominates(std::span<const double> a, std::span<const double> b);

/// True iff a Pareto-dominates b (strictly better somewhere, no worse anywhere).
bool strictly_dominates(std::span<const double> a, std::span<const double> b);

struct RankedPopulation {
    std::vector<Solution> solutions;
    std::vector<int> rank;

    int front_count() const;
    /// Indices of solutions with the given rank, in input order.
    std::vector<std::size_t> front(int r) const;
};

/// Front index (0 = non-dominated) of every objective vector. Within a rank
/// the input order is preserved by construction.
std::vector<int> non_dominated_ranks(std::span<const ObjectiveVector> objectives);

RankedPopulation non_dominated_sort(std::vector<Solution> pop);

/// Fronts as index lists, ascending rank.
std::vector<std::vector<std::size_t>> fronts_from_ranks(std::span<const int> ranks);

}  // namespace mostn
