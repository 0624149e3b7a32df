#include "mostn/core.hpp"

#include <algorithm>

#include "mostn/kernels.hpp"

namespace mostn {

Dominance dominates(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw DimensionError("dominance check on vectors of different length");
    bool a_better = false;
    bool b_better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) a_better = true;
        else if (b[i] < a[i]) b_better = true;
        if (a_better && b_better) return Dominance::Incomparable;
    }
    if (a_better) return Dominance::ADominatesB;
    if (b_better) return Dominance::BDominatesA;
    return Dominance::Equal;
}

bool strictly_dominates(std::span<const double> a, std::span<const double> b) {
    return dominates(a, b) == Dominance::ADominatesB;
}

int RankedPopulation::front_count() const {
    return rank.empty() ? 0 : *std::max_element(rank.begin(), rank.end()) + 1;
}

std::vector<std::size_t> RankedPopulation::front(int r) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rank.size(); ++i)
        if (rank[i] == r) out.push_back(i);
    return out;
}

std::vector<int> non_dominated_ranks(std::span<const ObjectiveVector> objectives) {
    if (objectives.empty()) throw std::invalid_argument("non-dominated sort of an empty population");
    const std::size_t m = objectives.front().size();
    for (const auto& f : objectives)
        if (f.size() != m) throw DimensionError("inconsistent objective counts in population");

    auto table = kernels::dominance_table(objectives);
    std::vector<int> rank(objectives.size(), -1);
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < objectives.size(); ++i)
        if (table.dominated_by_count[i] == 0) current.push_back(i);

    int r = 0;
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (auto i : current) {
            rank[i] = r;
            for (auto j : table.dominates_list[i])
                if (--table.dominated_by_count[j] == 0) next.push_back(j);
        }
        std::sort(next.begin(), next.end());
        current = std::move(next);
        ++r;
    }
    return rank;
}

RankedPopulation non_dominated_sort(std::vector<Solution> pop) {
    std::vector<ObjectiveVector> objs;
    objs.reserve(pop.size());
    for (const auto& s : pop) objs.push_back(s.f);
    RankedPopulation out;
    out.rank = non_dominated_ranks(objs);
    out.solutions = std::move(pop);
    return out;
}

std::vector<std::vector<std::size_t>> fronts_from_ranks(std::span<const int> ranks) {
    std::vector<std::vector<std::size_t>> fronts;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        const auto r = static_cast<std::size_t>(ranks[i]);
        if (fronts.size() <= r) fronts.resize(r + 1);
        fronts[r].push_back(i);
    }
    return fronts;
}

}  // namespace mostn
