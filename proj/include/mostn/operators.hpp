#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "mostn/core.hpp"
#include "mostn/problems.hpp"

namespace mostn {

/// Run-local random stream. Floating draws are built from raw engine bits so
/// that a seed gives the same sequence on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    /// Uniform in {0, ..., n-1}.
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }
    bool coin() { return uniform() < 0.5; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[index(i)]);
    }

private:
    std::mt19937_64 engine_;
};

/// Clamp every coordinate into the problem box.
void clip_to_bounds(DecisionVector& x, const ProblemSpec& spec);

/// Uniform random point in the problem box.
DecisionVector random_point(const ProblemSpec& spec, Rng& rng);

/// base + F (a - b), clipped to the box.
DecisionVector de_mutant(const DecisionVector& base, const DecisionVector& a, const DecisionVector& b, double f_scale,
                         const ProblemSpec& spec);

/// DE rand/1 mutant x_r1 + F (x_r2 - x_r3) with r1, r2, r3 distinct members of
/// `pool` (indices into `pop`), drawn in that order. Clipped to the box.
DecisionVector de_rand1(std::span<const Solution> pop, std::span<const std::size_t> pool, double f_scale,
                        const ProblemSpec& spec, Rng& rng);

/// Bounded polynomial mutation: each coordinate is perturbed with
/// probability `prob` using distribution index `eta`.
DecisionVector polynomial_mutation(DecisionVector x, double eta, double prob, const ProblemSpec& spec, Rng& rng);

}  // namespace mostn
