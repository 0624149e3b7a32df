#include "mostn/indicators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mostn/kernels.hpp"

namespace mostn {

namespace {

// Points are assumed strictly inside the box; dominated points are harmless.
double sweep2(std::vector<const double*>& pts, const double* ref) {
    std::sort(pts.begin(), pts.end(), [](auto a, auto b) { return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]); });
    double area = 0.0;
    double best_y = ref[1];
    for (std::size_t i = 0; i < pts.size(); ++i) {
        best_y = std::min(best_y, pts[i][1]);
        const double next_x = (i + 1 < pts.size()) ? pts[i + 1][0] : ref[0];
        area += (next_x - pts[i][0]) * (ref[1] - best_y);
    }
    return area;
}

double slice(std::vector<const double*> pts, const double* ref, std::size_t m) {
    if (pts.empty()) return 0.0;
    if (m == 1) {
        double lo = ref[0];
        for (auto p : pts) lo = std::min(lo, p[0]);
        return ref[0] - lo;
    }
    if (m == 2) return sweep2(pts, ref);
    const std::size_t last = m - 1;
    std::sort(pts.begin(), pts.end(), [last](auto a, auto b) { return a[last] < b[last]; });
    double vol = 0.0;
    std::vector<const double*> below;
    below.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        below.push_back(pts[i]);
        const double top = (i + 1 < pts.size()) ? pts[i + 1][last] : ref[last];
        const double depth = top - pts[i][last];
        if (depth > 0.0) vol += depth * slice(below, ref, m - 1);
    }
    return vol;
}

}  // namespace

std::vector<ObjectiveVector> filter_nondominated(std::span<const ObjectiveVector> points) {
    std::vector<ObjectiveVector> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < points.size() && keep; ++j) {
            if (i == j) continue;
            const auto rel = dominates(points[j], points[i]);
            if (rel == Dominance::ADominatesB) keep = false;
            else if (rel == Dominance::Equal && j < i) keep = false;
        }
        if (keep) out.push_back(points[i]);
    }
    return out;
}

HypervolumeResult hypervolume(std::span<const ObjectiveVector> points, std::span<const double> ref) {
    std::vector<ObjectiveVector> inside;
    for (const auto& p : points) {
        if (p.size() != ref.size()) throw DimensionError("hypervolume: point and reference differ in length");
        bool ok = true;
        for (std::size_t k = 0; k < p.size(); ++k) ok = ok && p[k] < ref[k];
        if (ok) inside.push_back(p);
    }
    HypervolumeResult r;
    if (inside.empty()) return r;
    inside = filter_nondominated(inside);
    r.retained = inside.size();
    std::vector<const double*> ptrs;
    for (const auto& p : inside) ptrs.push_back(p.data());
    r.volume = slice(std::move(ptrs), ref.data(), ref.size());
    return r;
}

double igd(std::span<const ObjectiveVector> approx, std::span<const ObjectiveVector> front) {
    if (approx.empty() || front.empty()) throw std::invalid_argument("igd needs nonempty approximation and front");
    const auto d = kernels::nearest_distances(front, approx);
    return std::accumulate(d.begin(), d.end(), 0.0) / static_cast<double>(d.size());
}

ObjectiveVector default_hv_reference(int m) { return ObjectiveVector(static_cast<std::size_t>(m), 1.1); }

}  // namespace mostn
