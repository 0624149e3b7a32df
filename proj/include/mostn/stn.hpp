#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mostn/problems.hpp"
#include "mostn/trace.hpp"

namespace mostn {

struct NodeAttrs {
    long count = 0;  ///< trace records that landed here
    std::set<int> vectors;
    std::set<int> runs;
    bool is_start = false;
    bool is_end = false;
    bool is_optimal = false;
    /// Distinct objective vectors recorded at this location; the one nearest
    /// the reference front decides optimality.
    std::vector<ObjectiveVector> objectives;

    bool shared() const { return vectors.size() > 1; }
    bool operator==(const NodeAttrs&) const = default;
};

using Edge = std::pair<LocationKey, LocationKey>;

/// Directed weighted graph of locations. Self-loops are never stored.
struct StnGraph {
    double precision = kDefaultPrecision;
    std::map<LocationKey, NodeAttrs> nodes;
    std::map<Edge, long> edges;

    bool operator==(const StnGraph&) const = default;
};

struct StnMetrics {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    double edge_ratio = 0.0;
    std::size_t shared = 0;
    double shared_ratio = 0.0;
    std::size_t optimal = 0;
    std::size_t components = 0;
    long total_weight = 0;
    double mean_in = 0.0;
    double mean_out = 0.0;
    long max_in = 0;
    long max_out = 0;
    long max_in_unweighted = 0;
    long max_out_unweighted = 0;

    bool operator==(const StnMetrics&) const = default;
};

/// Graph of one tracking vector's trajectory within one run.
StnGraph build_vector_stn(const RunTrace& trace, int vector);

/// Graph union: nodes united, edge weights summed, flags OR-ed.
StnGraph merge_stns(std::span<const StnGraph> graphs);

/// Union over every vector of every trace.
StnGraph build_merged_stn(std::span<const RunTrace> traces);

/// Flags nodes whose best recorded objectives lie within `tol` (Euclidean)
/// of the front. Returns the number flagged.
std::size_t mark_optimal_nodes(StnGraph& g, const ReferenceFront& front, double tol);

StnMetrics compute_stn_metrics(const StnGraph& g);

/// Weighted location changes in a trace (consecutive records of the same
/// vector at different locations).
long count_location_changes(const RunTrace& trace);

enum class GraphFormat { GraphML, Dot, EdgeListCsv };

GraphFormat parse_graph_format(std::string_view name);
std::string_view file_extension(GraphFormat f);

void export_graph(const StnGraph& g, GraphFormat format, std::ostream& out);

/// Reads the edge-list CSV written by export_graph. Node attributes other
/// than identity are left empty.
StnGraph import_edgelist(std::istream& in);

/// Reads the GraphML written by export_graph, restoring every exported
/// attribute (recorded objectives are not exported).
StnGraph import_graphml(std::istream& in);

/// Malformed input; the message carries source and line.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

RunTrace read_trace(std::istream& in, std::string_view source);

/// Re-bins the trace onto a coarser grid (integer multiple of its precision).
RunTrace with_precision(const RunTrace& trace, double precision);

}  // namespace mostn
