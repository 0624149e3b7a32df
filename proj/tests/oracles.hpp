#pragma once

// Brute-force reference implementations shared by the unit and acceptance
// tests. Deliberately naive; none of them call into the library under test.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace oracle {

using Point = std::vector<double>;

inline bool dominates(const Point& a, const Point& b) {
    bool strict = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] > b[k]) return false;
        if (a[k] < b[k]) strict = true;
    }
    return strict;
}

// Rank by repeated removal of the non-dominated layer.
inline std::vector<int> peel_ranks(const std::vector<Point>& pts) {
    const std::size_t n = pts.size();
    std::vector<int> rank(n, -1);
    std::size_t left = n;
    for (int layer = 0; left > 0; ++layer) {
        std::vector<std::size_t> now;
        for (std::size_t i = 0; i < n; ++i) {
            if (rank[i] >= 0) continue;
            bool beaten = false;
            for (std::size_t j = 0; j < n && !beaten; ++j)
                if (j != i && rank[j] < 0 && dominates(pts[j], pts[i])) beaten = true;
            if (!beaten) now.push_back(i);
        }
        for (auto i : now) rank[i] = layer;
        left -= now.size();
    }
    return rank;
}

// Exact hypervolume by coordinate compression: every grid cell spanned by the
// distinct coordinates is either fully dominated or not at all.
inline double grid_hypervolume(const std::vector<Point>& pts, const Point& ref) {
    const std::size_t m = ref.size();
    std::vector<Point> in;
    for (const auto& p : pts) {
        bool ok = true;
        for (std::size_t k = 0; k < m; ++k) ok = ok && p[k] < ref[k];
        if (ok) in.push_back(p);
    }
    if (in.empty()) return 0.0;
    std::vector<std::vector<double>> axes(m);
    for (std::size_t k = 0; k < m; ++k) {
        for (const auto& p : in) axes[k].push_back(p[k]);
        axes[k].push_back(ref[k]);
        std::sort(axes[k].begin(), axes[k].end());
        axes[k].erase(std::unique(axes[k].begin(), axes[k].end()), axes[k].end());
    }
    std::vector<std::size_t> idx(m, 0);
    double total = 0.0;
    while (true) {
        bool valid = true;
        for (std::size_t k = 0; k < m; ++k) valid = valid && idx[k] + 1 < axes[k].size();
        if (valid) {
            bool covered = false;
            for (const auto& p : in) {
                bool all = true;
                for (std::size_t k = 0; k < m && all; ++k) all = p[k] <= axes[k][idx[k]];
                if (all) {
                    covered = true;
                    break;
                }
            }
            if (covered) {
                double cell = 1.0;
                for (std::size_t k = 0; k < m; ++k) cell *= axes[k][idx[k] + 1] - axes[k][idx[k]];
                total += cell;
            }
        }
        std::size_t k = 0;
        while (k < m && ++idx[k] >= axes[k].size()) idx[k++] = 0;
        if (k == m) break;
    }
    return total;
}

// Jittered (stratified) Monte-Carlo estimate with side^m samples over the box
// [lo, ref] where lo is the componentwise minimum of the points.
inline double monte_carlo_hypervolume(const std::vector<Point>& pts, const Point& ref, int side,
                                      std::uint64_t seed) {
    const std::size_t m = ref.size();
    Point lo = ref;
    std::vector<Point> in;
    for (const auto& p : pts) {
        bool ok = true;
        for (std::size_t k = 0; k < m; ++k) ok = ok && p[k] < ref[k];
        if (!ok) continue;
        in.push_back(p);
        for (std::size_t k = 0; k < m; ++k) lo[k] = std::min(lo[k], p[k]);
    }
    if (in.empty()) return 0.0;
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double box = 1.0;
    for (std::size_t k = 0; k < m; ++k) box *= ref[k] - lo[k];
    std::vector<int> cell(m, 0);
    long hits = 0, total = 0;
    Point s(m);
    while (true) {
        for (std::size_t k = 0; k < m; ++k)
            s[k] = lo[k] + (ref[k] - lo[k]) * (cell[k] + u(gen)) / side;
        for (const auto& p : in) {
            bool dom = true;
            for (std::size_t k = 0; k < m && dom; ++k) dom = p[k] <= s[k];
            if (dom) {
                ++hits;
                break;
            }
        }
        ++total;
        std::size_t k = 0;
        while (k < m && ++cell[k] >= side) cell[k++] = 0;
        if (k == m) break;
    }
    return box * static_cast<double>(hits) / static_cast<double>(total);
}

// Staircase area for two objectives: sort by the first objective and add the
// strip each point opens below the running minimum of the second.
inline double sweep_hypervolume_2d(std::vector<Point> pts, const Point& ref) {
    std::erase_if(pts, [&](const Point& p) { return !(p[0] < ref[0] && p[1] < ref[1]); });
    std::sort(pts.begin(), pts.end());
    double area = 0.0, floor_y = ref[1];
    for (const auto& p : pts) {
        if (p[1] >= floor_y) continue;
        area += (ref[0] - p[0]) * (floor_y - p[1]);
        floor_y = p[1];
    }
    return area;
}

inline double igd(const std::vector<Point>& approx, const std::vector<Point>& front) {
    double sum = 0.0;
    for (const auto& r : front) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& a : approx) {
            double s = 0.0;
            for (std::size_t k = 0; k < r.size(); ++k) s += (r[k] - a[k]) * (r[k] - a[k]);
            best = std::min(best, std::sqrt(s));
        }
        sum += best;
    }
    return sum / static_cast<double>(front.size());
}

inline std::vector<Point> random_points(std::mt19937_64& gen, std::size_t n, std::size_t m, double lo = 0.0,
                                        double hi = 1.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<Point> out(n, Point(m));
    for (auto& p : out)
        for (auto& v : p) v = u(gen);
    return out;
}

// Mutually non-dominated points on the positive orthant of the unit sphere,
// pulled inward by a random radius so they are not all on one surface.
inline std::vector<Point> random_front(std::mt19937_64& gen, std::size_t n, std::size_t m) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<Point> out;
    while (out.size() < n) {
        Point p(m);
        double norm = 0.0;
        for (auto& v : p) {
            v = std::abs(g(gen));
            norm += v * v;
        }
        norm = std::sqrt(norm);
        for (auto& v : p) v /= norm;
        bool keep = true;
        for (const auto& q : out) keep = keep && !dominates(q, p) && !dominates(p, q);
        if (keep) out.push_back(p);
    }
    return out;
}

}  // namespace oracle
