#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mostn/core.hpp"
#include "mostn/decomposition.hpp"
#include "mostn/operators.hpp"
#include "mostn/problems.hpp"

namespace mostn {

/// Called after every iteration with the current population and ideal point.
using IterationObserver =
    std::function<void(int iteration, std::span<const Solution> population, std::span<const double> ideal)>;

struct MoeadConfig {
    int population = 250;  ///< offspring per iteration and SLD target
    double f_scale = 0.25;
    double pm_eta = 20.0;
    double pm_prob = 0.01;
    int nr = 2;
    double delta_p = 0.9;
    double neighborhood_fraction = 0.2;
    long budget = 30000;
    std::uint64_t seed = 1;

    void validate() const;
    std::string describe() const;
};

struct RunResult {
    std::vector<Solution> population;
    long evaluations = 0;  ///< excluding the initial population
    int iterations = 0;
};

/// MOEA/D with DE rand/1 variation, polynomial mutation, neighborhood mating
/// and restricted replacement. One iteration produces `population` offspring,
/// visiting subproblems cyclically.
class Moead {
public:
    Moead(ProblemSpec problem, MoeadConfig cfg);

    void initialize();
    void iterate();
    bool done() const { return evaluations_ >= cfg_.budget; }

    const std::vector<Solution>& population() const { return pop_; }
    const std::vector<WeightVector>& weights() const { return weights_; }
    const std::vector<std::vector<std::size_t>>& neighbors() const { return neighbors_; }
    const IdealPoint& ideal() const { return ideal_; }
    long evaluations() const { return evaluations_; }
    int iteration() const { return iteration_; }
    std::size_t neighborhood_size() const { return neighborhood_size_; }

    /// Offers `child` to the subproblems in `scope`, visited in random order.
    /// An incumbent is replaced only on strict improvement of its own
    /// Tchebycheff score; at most nr replacements. Returns the count.
    int restricted_update(const Solution& child, std::span<const std::size_t> scope);

    /// Direct state injection for tests.
    void set_population(std::vector<Solution> pop);

private:
    Solution make_offspring(std::size_t subproblem, std::vector<std::size_t>& scope);

    ProblemSpec problem_;
    MoeadConfig cfg_;
    Rng rng_;
    std::vector<WeightVector> weights_;
    std::vector<std::vector<std::size_t>> neighbors_;
    std::vector<std::size_t> everyone_;
    std::size_t neighborhood_size_ = 0;
    std::vector<Solution> pop_;
    IdealPoint ideal_;
    long evaluations_ = 0;
    int iteration_ = 0;
    std::size_t cursor_ = 0;
};

RunResult run_moead(const ProblemSpec& problem, const MoeadConfig& cfg, const IterationObserver& observer = {});

}  // namespace mostn
