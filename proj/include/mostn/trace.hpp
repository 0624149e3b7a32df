#pragma once

// Representative tracking for multiobjective search trajectories.
//
// Every iteration the population is peeled into non-dominated ranks until at
// least n candidates are available. Each of the n tracking vectors then picks
// the candidate with the lowest Tchebycheff score; ties go to the newest
// solution, skipping the one the vector held in the previous iteration. The
// chosen solution is mapped to its hypercube in decision space and logged.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mostn/core.hpp"
#include "mostn/decomposition.hpp"

namespace mostn {

/// Hypercube index of a point: floor(x_i / precision) per coordinate.
struct LocationKey {
    std::vector<std::int64_t> cells;

    auto operator<=>(const LocationKey&) const = default;
    bool operator==(const LocationKey&) const = default;

    /// Cells joined by '_', e.g. "123_-1_999".
    std::string str() const;
    static LocationKey parse(std::string_view text);
};

inline constexpr double kDefaultPrecision = 1e-3;

LocationKey location_of(std::span<const double> x, double precision);

/// Re-bins a key computed at `from` onto the coarser grid `to`. Requires
/// `to / from` to be a positive integer.
LocationKey coarsen(const LocationKey& key, double from, double to);

/// Indices into `pop` of the rank 0..r solutions, r minimal such that at
/// least n are collected. Rank-major, population order within a rank.
std::vector<std::size_t> select_candidates(std::span<const Solution> pop, std::size_t n);

/// Population index of the representative for each vector. `previous[v]`
/// holds the decision vector vector v was assigned last iteration, if any.
std::vector<std::size_t> assign_representatives(std::span<const Solution> pop,
                                                 std::span<const std::size_t> candidates,
                                                 std::span<const WeightVector> vectors,
                                                 std::span<const double> ideal,
                                                 std::span<const std::optional<DecisionVector>> previous);

struct TraceRecord {
    std::string algo;
    std::string problem;
    int run = 0;
    int iter = 0;
    int vector = 0;
    LocationKey loc;
    ObjectiveVector f;
    double scalar = 0.0;
    int birth = 0;

    bool operator==(const TraceRecord&) const = default;
};

/// Per-run metadata, written as a leading comment line.
struct TraceMeta {
    std::uint64_t seed = 0;
    double precision = kDefaultPrecision;
    std::string config;

    bool operator==(const TraceMeta&) const = default;
};

struct RunTrace {
    std::vector<TraceRecord> records;
    std::optional<TraceMeta> meta;

    bool operator==(const RunTrace&) const = default;
};

struct TraceSettings {
    std::string algo;
    std::string problem;
    int run = 0;
    std::size_t n_vectors = 5;
    double precision = kDefaultPrecision;
};

/// Turns per-iteration population snapshots into trace records.
class TraceRecorder {
public:
    TraceRecorder(TraceSettings settings, int objectives);

    void observe(int iteration, std::span<const Solution> pop, std::span<const double> ideal);

    const std::vector<WeightVector>& vectors() const { return vectors_; }
    const RunTrace& trace() const { return trace_; }
    RunTrace take() { return std::move(trace_); }
    void set_meta(TraceMeta meta) { trace_.meta = std::move(meta); }

private:
    TraceSettings settings_;
    std::vector<WeightVector> vectors_;
    std::vector<std::optional<DecisionVector>> previous_;
    RunTrace trace_;
};

inline constexpr std::string_view kTraceHeader = "algo,problem,run,iter,vector,loc,f1,f2,f3,scalar,birth";

/// CSV with the header above; reals use 17 significant digits.
void write_trace(const RunTrace& trace, std::ostream& out);

/// Shortest-exact rendering used in all CSV outputs ("%.17g").
std::string format_real(double v);

}  // namespace mostn
