#include "mostn/trace.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace mostn {

std::string LocationKey::str() const {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += '_';
        out += std::to_string(cells[i]);
    }
    return out;
}

LocationKey LocationKey::parse(std::string_view text) {
    LocationKey key;
    if (text.empty()) throw std::invalid_argument("empty location key");
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('_', pos);
        if (end == std::string_view::npos) end = text.size();
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, v);
        if (ec != std::errc{} || ptr != text.data() + end)
            throw std::invalid_argument("bad location key '" + std::string(text) + "'");
        key.cells.push_back(v);
        pos = end + 1;
    }
    return key;
}

LocationKey location_of(std::span<const double> x, double precision) {
    if (!(precision > 0.0)) throw std::invalid_argument("precision must be positive");
    LocationKey key;
    key.cells.reserve(x.size());
    for (double v : x) {
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite coordinate in location mapping");
        auto k = static_cast<std::int64_t>(std::floor(v / precision));
        // Cube k is [k*precision, (k+1)*precision) with the products rounded as
        // computed here, so a cube corner always maps back to its own cube.
        if (static_cast<double>(k + 1) * precision <= v) ++k;
        else if (static_cast<double>(k) * precision > v) --k;
        key.cells.push_back(k);
    }
    return key;
}

LocationKey coarsen(const LocationKey& key, double from, double to) {
    const double ratio = to / from;
    const double r = std::round(ratio);
    if (!(r >= 1.0) || std::abs(ratio - r) > 1e-9 * r)
        throw std::invalid_argument("coarser precision must be an integer multiple of the recorded precision");
    const auto step = static_cast<std::int64_t>(r);
    LocationKey out;
    out.cells.reserve(key.cells.size());
    for (auto c : key.cells) {
        // floor division
        std::int64_t q = c / step;
        if ((c % step != 0) && (c < 0)) --q;
        out.cells.push_back(q);
    }
    return out;
}

std::vector<std::size_t> select_candidates(std::span<const Solution> pop, std::size_t n) {
    if (pop.size() < n) throw std::invalid_argument("population smaller than the number of tracking vectors");
    std::vector<ObjectiveVector> objs;
    objs.reserve(pop.size());
    for (const auto& s : pop) objs.push_back(s.f);
    const auto ranks = non_dominated_ranks(objs);
    std::vector<std::size_t> out;
    for (const auto& front : fronts_from_ranks(ranks)) {
        if (out.size() >= n) break;
        out.insert(out.end(), front.begin(), front.end());
    }
    return out;
}

std::vector<std::size_t> assign_representatives(std::span<const Solution> pop,
                                                 std::span<const std::size_t> candidates,
                                                 std::span<const WeightVector> vectors,
                                                 std::span<const double> ideal,
                                                 std::span<const std::optional<DecisionVector>> previous) {
    if (candidates.empty()) throw std::invalid_argument("no candidates to assign");
    if (!previous.empty() && previous.size() != vectors.size())
        throw DimensionError("previous assignment does not match the vector count");

    std::vector<std::size_t> out;
    out.reserve(vectors.size());
    std::vector<std::size_t> tied;
    for (std::size_t v = 0; v < vectors.size(); ++v) {
        double best = std::numeric_limits<double>::infinity();
        tied.clear();
        for (auto c : candidates) {
            const double g = tchebycheff(pop[c].f, vectors[v], ideal);
            if (g < best) {
                best = g;
                tied.assign(1, c);
            } else if (g == best) {
                tied.push_back(c);
            }
        }
        if (tied.size() > 1 && !previous.empty() && previous[v]) {
            const auto& held = *previous[v];
            std::vector<std::size_t> fresh;
            for (auto c : tied)
                if (pop[c].x != held) fresh.push_back(c);
            if (!fresh.empty()) tied = std::move(fresh);
        }
        auto pick = tied.front();
        for (auto c : tied) {
            if (pop[c].birth > pop[pick].birth || (pop[c].birth == pop[pick].birth && c < pick)) pick = c;
        }
        out.push_back(pick);
    }
    return out;
}

TraceRecorder::TraceRecorder(TraceSettings settings, int objectives)
    : settings_(std::move(settings)),
      vectors_(uniform_design_weights(objectives, static_cast<int>(settings_.n_vectors))),
      previous_(settings_.n_vectors) {}

void TraceRecorder::observe(int iteration, std::span<const Solution> pop, std::span<const double> ideal) {
    const auto candidates = select_candidates(pop, settings_.n_vectors);
    const auto reps = assign_representatives(pop, candidates, vectors_, ideal, previous_);
    for (std::size_t v = 0; v < reps.size(); ++v) {
        const auto& s = pop[reps[v]];
        TraceRecord rec;
        rec.algo = settings_.algo;
        rec.problem = settings_.problem;
        rec.run = settings_.run;
        rec.iter = iteration;
        rec.vector = static_cast<int>(v);
        rec.loc = location_of(s.x, settings_.precision);
        rec.f = s.f;
        rec.scalar = tchebycheff(s.f, vectors_[v], ideal);
        rec.birth = s.birth;
        trace_.records.push_back(std::move(rec));
        previous_[v] = s.x;
    }
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_trace(const RunTrace& trace, std::ostream& out) {
    if (trace.meta) {
        out << "# seed=" << trace.meta->seed << " precision=" << format_real(trace.meta->precision)
            << " config=" << trace.meta->config << '\n';
    }
    out << kTraceHeader << '\n';
    for (const auto& r : trace.records) {
        out << r.algo << ',' << r.problem << ',' << r.run << ',' << r.iter << ',' << r.vector << ',' << r.loc.str();
        for (std::size_t k = 0; k < 3; ++k) {
            out << ',';
            if (k < r.f.size()) out << format_real(r.f[k]);
        }
        out << ',' << format_real(r.scalar) << ',' << r.birth << '\n';
    }
    if (!out) throw std::runtime_error("failed writing trace");
}

}  // namespace mostn
