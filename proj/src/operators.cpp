#include "mostn/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mostn {

void clip_to_bounds(DecisionVector& x, const ProblemSpec& spec) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], spec.lower[i], spec.upper[i]);
}

DecisionVector random_point(const ProblemSpec& spec, Rng& rng) {
    DecisionVector x(static_cast<std::size_t>(spec.dimension));
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = spec.lower[i] + rng.uniform() * (spec.upper[i] - spec.lower[i]);
    return x;
}

DecisionVector de_mutant(const DecisionVector& base, const DecisionVector& a, const DecisionVector& b, double f_scale,
                         const ProblemSpec& spec) {
    DecisionVector y(base.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = base[i] + f_scale * (a[i] - b[i]);
    clip_to_bounds(y, spec);
    return y;
}

DecisionVector de_rand1(std::span<const Solution> pop, std::span<const std::size_t> pool, double f_scale,
                        const ProblemSpec& spec, Rng& rng) {
    if (pool.size() < 3) throw std::invalid_argument("DE rand/1 needs a pool of at least 3 members");
    // Three distinct positions in the pool, without replacement.
    const std::size_t a = rng.index(pool.size());
    std::size_t b = rng.index(pool.size() - 1);
    if (b >= a) ++b;
    std::size_t c = rng.index(pool.size() - 2);
    for (std::size_t taken : {std::min(a, b), std::max(a, b)})
        if (c >= taken) ++c;

    return de_mutant(pop[pool[a]].x, pop[pool[b]].x, pop[pool[c]].x, f_scale, spec);
}

DecisionVector polynomial_mutation(DecisionVector x, double eta, double prob, const ProblemSpec& spec, Rng& rng) {
    const double power = 1.0 / (eta + 1.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(rng.uniform() < prob)) continue;
        const double lo = spec.lower[i];
        const double hi = spec.upper[i];
        const double range = hi - lo;
        if (range <= 0.0) continue;
        const double y = x[i];
        const double d1 = (y - lo) / range;
        const double d2 = (hi - y) / range;
        const double r = rng.uniform();
        double dq;
        if (r < 0.5) {
            const double v = 2.0 * r + (1.0 - 2.0 * r) * std::pow(1.0 - d1, eta + 1.0);
            dq = std::pow(v, power) - 1.0;
        } else {
            const double v = 2.0 * (1.0 - r) + 2.0 * (r - 0.5) * std::pow(1.0 - d2, eta + 1.0);
            dq = 1.0 - std::pow(v, power);
        }
        x[i] = std::clamp(y + dq * range, lo, hi);
    }
    return x;
}

}  // namespace mostn
