#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mostn/core.hpp"
#include "mostn/decomposition.hpp"
#include "mostn/moead.hpp"
#include "mostn/operators.hpp"
#include "mostn/problems.hpp"

namespace mostn {

struct Nsga2Config {
    int population = 250;
    int tournament_size = 2;
    double f_scale = 0.25;
    double pm_eta = 3.0;
    double pm_prob = 0.1;
    long budget = 30000;
    std::uint64_t seed = 1;

    void validate() const;
    std::string describe() const;
};

/// Per-objective normalized neighbor gaps; boundary points are infinite.
/// Objectives with zero range contribute nothing.
std::vector<double> crowding_distance(std::span<const ObjectiveVector> front);

struct CrowdedPopulation {
    std::vector<Solution> solutions;
    std::vector<int> rank;
    std::vector<double> crowding;

    static CrowdedPopulation from(std::vector<Solution> pop);
};

/// Binary tournament: lower rank, then larger crowding, then a coin flip.
/// Returns the winner's index.
std::size_t tournament_select(const CrowdedPopulation& pop, Rng& rng);

/// Keeps `n` of `combined`: whole fronts by ascending rank, the split front by
/// descending crowding distance (stable).
std::vector<Solution> survival(std::vector<Solution> combined, std::size_t n);

class Nsga2 {
public:
    Nsga2(ProblemSpec problem, Nsga2Config cfg);

    void initialize();
    void iterate();
    bool done() const { return evaluations_ >= cfg_.budget; }

    const std::vector<Solution>& population() const { return pop_.solutions; }
    const CrowdedPopulation& crowded() const { return pop_; }
    const IdealPoint& ideal() const { return ideal_; }
    long evaluations() const { return evaluations_; }
    int iteration() const { return iteration_; }

private:
    ProblemSpec problem_;
    Nsga2Config cfg_;
    Rng rng_;
    CrowdedPopulation pop_;
    IdealPoint ideal_;
    long evaluations_ = 0;
    int iteration_ = 0;
};

RunResult run_nsga2(const ProblemSpec& problem, const Nsga2Config& cfg, const IterationObserver& observer = {});

}  // namespace mostn
