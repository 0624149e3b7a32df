#include "mostn/moead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mostn {

void MoeadConfig::validate() const {
    if (population < 3) throw std::invalid_argument("moead: population must be at least 3");
    if (!(delta_p > 0.0 && delta_p <= 1.0)) throw std::invalid_argument("moead: delta_p must lie in (0, 1]");
    if (nr < 1) throw std::invalid_argument("moead: nr must be at least 1");
    if (!(neighborhood_fraction > 0.0 && neighborhood_fraction <= 1.0))
        throw std::invalid_argument("moead: neighborhood fraction must lie in (0, 1]");
    if (budget <= 0 || budget % population != 0)
        throw std::invalid_argument("moead: budget must be a positive multiple of the population");
    if (pm_prob < 0.0 || pm_prob > 1.0 || pm_eta < 0.0) throw std::invalid_argument("moead: bad mutation settings");
}

std::string MoeadConfig::describe() const {
    std::ostringstream os;
    os << "moead pop=" << population << " F=" << f_scale << " eta=" << pm_eta << " pm=" << pm_prob << " nr=" << nr
       << " delta=" << delta_p << " T=" << neighborhood_fraction << " budget=" << budget;
    return os.str();
}

Moead::Moead(ProblemSpec problem, MoeadConfig cfg)
    : problem_(std::move(problem)), cfg_(cfg), rng_(cfg.seed), ideal_(static_cast<std::size_t>(problem_.objectives)) {
    cfg_.validate();
    weights_ = sld_weights(problem_.objectives, cfg_.population);
    const std::size_t n = weights_.size();
    neighborhood_size_ = std::max<std::size_t>(
        3, static_cast<std::size_t>(std::lround(cfg_.neighborhood_fraction * static_cast<double>(n))));
    neighborhood_size_ = std::min(neighborhood_size_, n);

    everyone_.resize(n);
    std::iota(everyone_.begin(), everyone_.end(), 0);
    neighbors_.resize(n);
    std::vector<double> dist(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < weights_[i].size(); ++k) {
                const double d = weights_[i][k] - weights_[j][k];
                s += d * d;
            }
            dist[j] = s;
        }
        auto order = everyone_;
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return dist[a] < dist[b]; });
        order.resize(neighborhood_size_);
        neighbors_[i] = std::move(order);
    }
}

void Moead::initialize() {
    pop_.clear();
    pop_.reserve(weights_.size());
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        Solution s;
        s.x = random_point(problem_, rng_);
        s.f = evaluate(problem_, s.x);
        s.birth = 0;
        ideal_.update(s.f);
        pop_.push_back(std::move(s));
    }
    evaluations_ = 0;
    iteration_ = 0;
    cursor_ = 0;
}

void Moead::set_population(std::vector<Solution> pop) {
    if (pop.size() != weights_.size()) throw std::invalid_argument("moead: one incumbent per weight vector required");
    pop_ = std::move(pop);
    ideal_ = IdealPoint(static_cast<std::size_t>(problem_.objectives));
    for (const auto& s : pop_) ideal_.update(s.f);
}

Solution Moead::make_offspring(std::size_t subproblem, std::vector<std::size_t>& scope) {
    const bool local = rng_.uniform() < cfg_.delta_p;
    const auto& pool = local ? neighbors_[subproblem] : everyone_;
    scope.assign(pool.begin(), pool.end());
    Solution child;
    child.x = de_rand1(pop_, scope, cfg_.f_scale, problem_, rng_);
    child.x = polynomial_mutation(std::move(child.x), cfg_.pm_eta, cfg_.pm_prob, problem_, rng_);
    child.f = evaluate(problem_, child.x);
    ++evaluations_;
    child.birth = iteration_ + 1;
    return child;
}

int Moead::restricted_update(const Solution& child, std::span<const std::size_t> scope) {
    std::vector<std::size_t> order(scope.begin(), scope.end());
    rng_.shuffle(order);
    const auto z = ideal_.values();
    int replaced = 0;
    for (auto j : order) {
        if (replaced >= cfg_.nr) break;
        if (tchebycheff(child.f, weights_[j], z) < tchebycheff(pop_[j].f, weights_[j], z)) {
            pop_[j] = child;
            ++replaced;
        }
    }
    return replaced;
}

void Moead::iterate() {
    if (pop_.empty()) throw std::logic_error("moead: iterate() before initialize()");
    std::vector<std::size_t> scope;
    for (int k = 0; k < cfg_.population && !done(); ++k) {
        const std::size_t i = cursor_;
        cursor_ = (cursor_ + 1) % weights_.size();
        Solution child = make_offspring(i, scope);
        ideal_.update(child.f);
        restricted_update(child, scope);
    }
    ++iteration_;
}

RunResult run_moead(const ProblemSpec& problem, const MoeadConfig& cfg, const IterationObserver& observer) {
    Moead algo(problem, cfg);
    algo.initialize();
    while (!algo.done()) {
        algo.iterate();
        if (observer) observer(algo.iteration(), algo.population(), algo.ideal().values());
    }
    return {algo.population(), algo.evaluations(), algo.iteration()};
}

}  // namespace mostn
