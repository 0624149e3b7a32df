#include "mostn/nsga2.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mostn {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void Nsga2Config::validate() const {
    if (population < 4 || population % 2 != 0) throw std::invalid_argument("nsga2: population must be even and >= 4");
    if (tournament_size != 2) throw std::invalid_argument("nsga2: only binary tournaments are supported");
    if (budget <= 0 || budget % population != 0)
        throw std::invalid_argument("nsga2: budget must be a positive multiple of the population");
    if (pm_prob < 0.0 || pm_prob > 1.0 || pm_eta < 0.0) throw std::invalid_argument("nsga2: bad mutation settings");
}

std::string Nsga2Config::describe() const {
    std::ostringstream os;
    os << "nsga2 pop=" << population << " tour=" << tournament_size << " F=" << f_scale << " eta=" << pm_eta
       << " pm=" << pm_prob << " budget=" << budget;
    return os.str();
}

std::vector<double> crowding_distance(std::span<const ObjectiveVector> front) {
    const std::size_t n = front.size();
    std::vector<double> d(n, 0.0);
    if (n <= 2) {
        std::fill(d.begin(), d.end(), kInf);
        return d;
    }
    const std::size_t m = front.front().size();
    std::vector<std::size_t> order(n);
    for (std::size_t k = 0; k < m; ++k) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return front[a][k] < front[b][k]; });
        const double lo = front[order.front()][k];
        const double hi = front[order.back()][k];
        const double range = hi - lo;
        if (!(range > 0.0)) continue;
        d[order.front()] = kInf;
        d[order.back()] = kInf;
        for (std::size_t i = 1; i + 1 < n; ++i)
            d[order[i]] += (front[order[i + 1]][k] - front[order[i - 1]][k]) / range;
    }
    return d;
}

CrowdedPopulation CrowdedPopulation::from(std::vector<Solution> pop) {
    CrowdedPopulation out;
    std::vector<ObjectiveVector> objs;
    objs.reserve(pop.size());
    for (const auto& s : pop) objs.push_back(s.f);
    out.rank = non_dominated_ranks(objs);
    out.crowding.assign(pop.size(), 0.0);
    for (const auto& front : fronts_from_ranks(out.rank)) {
        std::vector<ObjectiveVector> fo;
        fo.reserve(front.size());
        for (auto i : front) fo.push_back(objs[i]);
        const auto cd = crowding_distance(fo);
        for (std::size_t k = 0; k < front.size(); ++k) out.crowding[front[k]] = cd[k];
    }
    out.solutions = std::move(pop);
    return out;
}

std::size_t tournament_select(const CrowdedPopulation& pop, Rng& rng) {
    const std::size_t n = pop.solutions.size();
    if (n == 0) throw std::invalid_argument("tournament on an empty population");
    if (n == 1) return 0;
    const std::size_t a = rng.index(n);
    std::size_t b = rng.index(n - 1);
    if (b >= a) ++b;
    if (pop.rank[a] != pop.rank[b]) return pop.rank[a] < pop.rank[b] ? a : b;
    if (pop.crowding[a] != pop.crowding[b]) return pop.crowding[a] > pop.crowding[b] ? a : b;
    return rng.coin() ? a : b;
}

std::vector<Solution> survival(std::vector<Solution> combined, std::size_t n) {
    if (combined.size() < n) throw std::invalid_argument("survival: fewer candidates than survivors");
    std::vector<ObjectiveVector> objs;
    objs.reserve(combined.size());
    for (const auto& s : combined) objs.push_back(s.f);
    const auto ranks = non_dominated_ranks(objs);
    std::vector<Solution> out;
    out.reserve(n);
    for (const auto& front : fronts_from_ranks(ranks)) {
        if (out.size() == n) break;
        if (out.size() + front.size() <= n) {
            for (auto i : front) out.push_back(std::move(combined[i]));
            continue;
        }
        std::vector<ObjectiveVector> fo;
        fo.reserve(front.size());
        for (auto i : front) fo.push_back(objs[i]);
        const auto cd = crowding_distance(fo);
        std::vector<std::size_t> order(front.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return cd[a] > cd[b]; });
        for (std::size_t k = 0; out.size() < n; ++k) out.push_back(std::move(combined[front[order[k]]]));
    }
    return out;
}

Nsga2::Nsga2(ProblemSpec problem, Nsga2Config cfg)
    : problem_(std::move(problem)), cfg_(cfg), rng_(cfg.seed), ideal_(static_cast<std::size_t>(problem_.objectives)) {
    cfg_.validate();
}

void Nsga2::initialize() {
    std::vector<Solution> pop;
    pop.reserve(static_cast<std::size_t>(cfg_.population));
    for (int i = 0; i < cfg_.population; ++i) {
        Solution s;
        s.x = random_point(problem_, rng_);
        s.f = evaluate(problem_, s.x);
        s.birth = 0;
        ideal_.update(s.f);
        pop.push_back(std::move(s));
    }
    pop_ = CrowdedPopulation::from(std::move(pop));
    evaluations_ = 0;
    iteration_ = 0;
}

void Nsga2::iterate() {
    if (pop_.solutions.empty()) throw std::logic_error("nsga2: iterate() before initialize()");
    const std::size_t n = pop_.solutions.size();
    std::vector<Solution> combined = pop_.solutions;
    combined.reserve(2 * n);
    for (std::size_t k = 0; k < n && !done(); ++k) {
        // Base parent by tournament, difference pair uniform; all three distinct.
        const std::size_t r1 = tournament_select(pop_, rng_);
        std::size_t r2 = rng_.index(n - 1);
        if (r2 >= r1) ++r2;
        std::size_t r3 = rng_.index(n - 2);
        for (std::size_t taken : {std::min(r1, r2), std::max(r1, r2)})
            if (r3 >= taken) ++r3;
        const auto& p = pop_.solutions;
        Solution child;
        child.x = de_mutant(p[r1].x, p[r2].x, p[r3].x, cfg_.f_scale, problem_);
        child.x = polynomial_mutation(std::move(child.x), cfg_.pm_eta, cfg_.pm_prob, problem_, rng_);
        child.f = evaluate(problem_, child.x);
        child.birth = iteration_ + 1;
        ++evaluations_;
        ideal_.update(child.f);
        combined.push_back(std::move(child));
    }
    pop_ = CrowdedPopulation::from(survival(std::move(combined), n));
    ++iteration_;
}

RunResult run_nsga2(const ProblemSpec& problem, const Nsga2Config& cfg, const IterationObserver& observer) {
    Nsga2 algo(problem, cfg);
    algo.initialize();
    while (!algo.done()) {
        algo.iterate();
        if (observer) observer(algo.iteration(), algo.population(), algo.ideal().values());
    }
    return {algo.population(), algo.evaluations(), algo.iteration()};
}

}  // namespace mostn
