#include "mostn/kernels.hpp"

#include <cmath>
#include <limits>

namespace mostn::kernels {

namespace {

// Row i of the table: who i dominates, and how many dominate i.
void fill_row(std::span<const ObjectiveVector> pts, std::size_t i, DominanceTable& t) {
    auto& out = t.dominates_list[i];
    int count = 0;
    for (std::size_t j = 0; j < pts.size(); ++j) {
        if (j == i) continue;
        switch (dominates(pts[i], pts[j])) {
            case Dominance::ADominatesB: out.push_back(j); break;
            case Dominance::BDominatesA: ++count; break;
            default: break;
        }
    }
    t.dominated_by_count[i] = count;
}

DominanceTable empty_table(std::size_t n) {
    DominanceTable t;
    t.dominated_by_count.assign(n, 0);
    t.dominates_list.resize(n);
    return t;
}

double squared_distance(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.size() != b.size()) throw DimensionError("objective vectors differ in length");
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return s;
}

double nearest(const ObjectiveVector& r, std::span<const ObjectiveVector> approx) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& a : approx) {
        const double d = squared_distance(r, a);
        if (d < best) best = d;
    }
    return std::sqrt(best);
}

}  // namespace

DominanceTable dominance_table_serial(std::span<const ObjectiveVector> pts) {
    auto t = empty_table(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) fill_row(pts, i, t);
    return t;
}

DominanceTable dominance_table(std::span<const ObjectiveVector> pts) {
    if (pts.size() < kParallelDominanceThreshold) return dominance_table_serial(pts);
    for (const auto& p : pts)
        if (p.size() != pts.front().size()) throw DimensionError("objective vectors differ in length");
    auto t = empty_table(pts.size());
    const auto n = static_cast<std::ptrdiff_t>(pts.size());
    // Rows are independent; each thread writes only its own row.
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < n; ++i) fill_row(pts, static_cast<std::size_t>(i), t);
    return t;
}

std::vector<double> nearest_distances_serial(std::span<const ObjectiveVector> reference,
                                             std::span<const ObjectiveVector> approx) {
    std::vector<double> out(reference.size());
    for (std::size_t i = 0; i < reference.size(); ++i) out[i] = nearest(reference[i], approx);
    return out;
}

std::vector<double> nearest_distances(std::span<const ObjectiveVector> reference,
                                      std::span<const ObjectiveVector> approx) {
    // Exceptions must not escape the parallel region, so check shapes first.
    const std::size_t m = reference.empty() ? 0 : reference.front().size();
    for (const auto& r : reference)
        if (r.size() != m) throw DimensionError("objective vectors differ in length");
    for (const auto& a : approx)
        if (a.size() != m) throw DimensionError("objective vectors differ in length");
    std::vector<double> out(reference.size());
    const auto n = static_cast<std::ptrdiff_t>(reference.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = nearest(reference[static_cast<std::size_t>(i)], approx);
    }
    return out;
}

}  // namespace mostn::kernels
