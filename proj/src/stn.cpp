#include "mostn/stn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace mostn {

namespace {

double trace_precision(const RunTrace& t) { return t.meta ? t.meta->precision : kDefaultPrecision; }

bool same_precision(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b)); }

void add_objectives(NodeAttrs& n, const ObjectiveVector& f) {
    if (std::find(n.objectives.begin(), n.objectives.end(), f) == n.objectives.end()) n.objectives.push_back(f);
}

// Union-find over node positions, for weak connectivity.
struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

StnGraph build_vector_stn(const RunTrace& trace, int vector) {
    std::map<int, std::vector<const TraceRecord*>> paths;  // one trajectory per run
    for (const auto& r : trace.records)
        if (r.vector == vector) paths[r.run].push_back(&r);
    if (paths.empty()) throw std::invalid_argument("vector " + std::to_string(vector) + " is absent from the trace");

    StnGraph g;
    g.precision = trace_precision(trace);
    for (auto& [run, path] : paths) {
        std::stable_sort(path.begin(), path.end(), [](auto* a, auto* b) { return a->iter < b->iter; });
        for (std::size_t i = 0; i < path.size(); ++i) {
            const auto& r = *path[i];
            auto& node = g.nodes[r.loc];
            ++node.count;
            node.vectors.insert(r.vector);
            node.runs.insert(r.run);
            add_objectives(node, r.f);
            if (i > 0 && path[i - 1]->loc != r.loc) ++g.edges[{path[i - 1]->loc, r.loc}];
        }
        g.nodes[path.front()->loc].is_start = true;
        g.nodes[path.back()->loc].is_end = true;
    }
    return g;
}

StnGraph merge_stns(std::span<const StnGraph> graphs) {
    StnGraph out;
    if (graphs.empty()) return out;
    out.precision = graphs.front().precision;
    for (const auto& g : graphs) {
        if (!same_precision(g.precision, out.precision))
            throw std::invalid_argument("cannot merge graphs built at different precisions");
        for (const auto& [key, attrs] : g.nodes) {
            auto& n = out.nodes[key];
            n.count += attrs.count;
            n.vectors.insert(attrs.vectors.begin(), attrs.vectors.end());
            n.runs.insert(attrs.runs.begin(), attrs.runs.end());
            n.is_start = n.is_start || attrs.is_start;
            n.is_end = n.is_end || attrs.is_end;
            n.is_optimal = n.is_optimal || attrs.is_optimal;
            for (const auto& f : attrs.objectives) add_objectives(n, f);
        }
        for (const auto& [e, w] : g.edges) out.edges[e] += w;
    }
    return out;
}

StnGraph build_merged_stn(std::span<const RunTrace> traces) {
    std::vector<StnGraph> parts;
    for (const auto& t : traces) {
        std::set<int> vectors;
        for (const auto& r : t.records) vectors.insert(r.vector);
        for (int v : vectors) parts.push_back(build_vector_stn(t, v));
    }
    return merge_stns(parts);
}

std::size_t mark_optimal_nodes(StnGraph& g, const ReferenceFront& front, double tol) {
    if (front.empty()) throw std::invalid_argument("optimal-node marking needs a nonempty reference front");
    if (!(tol >= 0.0)) throw std::invalid_argument("optimal-node tolerance must be nonnegative");
    std::size_t flagged = 0;
    for (auto& [key, node] : g.nodes) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& f : node.objectives) {
            for (const auto& p : front) {
                if (p.size() != f.size()) throw DimensionError("front and node objectives differ in length");
                double s = 0.0;
                for (std::size_t k = 0; k < f.size(); ++k) s += (f[k] - p[k]) * (f[k] - p[k]);
                best = std::min(best, s);
            }
        }
        node.is_optimal = std::sqrt(best) <= tol;
        if (node.is_optimal) ++flagged;
    }
    return flagged;
}

StnMetrics compute_stn_metrics(const StnGraph& g) {
    if (g.nodes.empty()) throw std::invalid_argument("metrics of an empty graph");
    StnMetrics m;
    m.nodes = g.nodes.size();
    m.edges = g.edges.size();

    std::map<LocationKey, std::size_t> position;
    for (const auto& [key, node] : g.nodes) {
        position.emplace(key, position.size());
        if (node.shared()) ++m.shared;
        if (node.is_optimal) ++m.optimal;
    }

    std::vector<long> in_w(m.nodes, 0), out_w(m.nodes, 0), in_u(m.nodes, 0), out_u(m.nodes, 0);
    DisjointSets sets(m.nodes);
    for (const auto& [e, w] : g.edges) {
        const auto s = position.at(e.first);
        const auto t = position.at(e.second);
        out_w[s] += w;
        in_w[t] += w;
        ++out_u[s];
        ++in_u[t];
        m.total_weight += w;
        sets.unite(s, t);
    }
    for (std::size_t i = 0; i < m.nodes; ++i)
        if (sets.find(i) == i) ++m.components;

    const double n = static_cast<double>(m.nodes);
    m.edge_ratio = static_cast<double>(m.edges) / n;
    m.shared_ratio = static_cast<double>(m.shared) / n;
    m.mean_in = static_cast<double>(m.total_weight) / n;
    m.mean_out = m.mean_in;
    m.max_in = *std::max_element(in_w.begin(), in_w.end());
    m.max_out = *std::max_element(out_w.begin(), out_w.end());
    m.max_in_unweighted = *std::max_element(in_u.begin(), in_u.end());
    m.max_out_unweighted = *std::max_element(out_u.begin(), out_u.end());
    return m;
}

long count_location_changes(const RunTrace& trace) {
    std::map<std::pair<int, int>, std::vector<const TraceRecord*>> paths;
    for (const auto& r : trace.records) paths[{r.run, r.vector}].push_back(&r);
    long changes = 0;
    for (auto& [id, path] : paths) {
        std::stable_sort(path.begin(), path.end(), [](auto* a, auto* b) { return a->iter < b->iter; });
        for (std::size_t i = 1; i < path.size(); ++i)
            if (path[i]->loc != path[i - 1]->loc) ++changes;
    }
    return changes;
}

}  // namespace mostn
