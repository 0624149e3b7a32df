#include "mostn/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mostn {

namespace {

// C(n, k) in double; the sizes involved are tiny.
double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void lattice_rec(int m, int divisions, int remaining, std::vector<int>& prefix, std::vector<WeightVector>& out) {
    if (static_cast<int>(prefix.size()) == m - 1) {
        WeightVector w;
        w.reserve(static_cast<std::size_t>(m));
        for (int p : prefix) w.push_back(static_cast<double>(p) / divisions);
        w.push_back(static_cast<double>(remaining) / divisions);
        out.push_back(std::move(w));
        return;
    }
    for (int k = 0; k <= remaining; ++k) {
        prefix.push_back(k);
        lattice_rec(m, divisions, remaining - k, prefix, out);
        prefix.pop_back();
    }
}

// Good-lattice-point rows u_i in (0,1)^s, i = 1..n, generator (1, h, h^2, ...) mod n.
std::vector<std::vector<double>> glp_rows(int n, int s, int h) {
    std::vector<int> gen(static_cast<std::size_t>(s));
    long long g = 1;
    for (int k = 0; k < s; ++k) {
        gen[static_cast<std::size_t>(k)] = static_cast<int>(g % n);
        g = (g * h) % n;
    }
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(s)));
    for (int i = 1; i <= n; ++i) {
        for (int k = 0; k < s; ++k) {
            long long q = (static_cast<long long>(i) * gen[static_cast<std::size_t>(k)]) % n;
            if (q == 0) q = n;
            rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)] = (2.0 * q - 1.0) / (2.0 * n);
        }
    }
    return rows;
}

// Squared centered L2-discrepancy.
double centered_discrepancy(const std::vector<std::vector<double>>& u) {
    const double n = static_cast<double>(u.size());
    const std::size_t s = u.front().size();
    double a = 0.0;
    for (const auto& row : u) {
        double p = 1.0;
        for (double v : row) {
            const double d = std::abs(v - 0.5);
            p *= 1.0 + 0.5 * d - 0.5 * d * d;
        }
        a += p;
    }
    double b = 0.0;
    for (const auto& ri : u) {
        for (const auto& rj : u) {
            double p = 1.0;
            for (std::size_t k = 0; k < s; ++k)
                p *= 1.0 + 0.5 * std::abs(ri[k] - 0.5) + 0.5 * std::abs(rj[k] - 0.5) - 0.5 * std::abs(ri[k] - rj[k]);
            b += p;
        }
    }
    return std::pow(13.0 / 12.0, static_cast<double>(s)) - 2.0 / n * a + b / (n * n);
}

// Maps the unit cube onto the simplex so that uniform points stay uniform.
WeightVector cube_to_simplex(const std::vector<double>& u) {
    const std::size_t m = u.size() + 1;
    WeightVector w(m);
    double carried = 1.0;
    for (std::size_t k = 0; k + 1 < m; ++k) {
        const double r = std::pow(u[k], 1.0 / static_cast<double>(m - 1 - k));
        w[k] = (1.0 - r) * carried;
        carried *= r;
    }
    w[m - 1] = carried;
    // Reverse so that for m = 2 the first component follows u.
    std::reverse(w.begin(), w.end());
    return w;
}

}  // namespace

IdealPoint::IdealPoint(std::size_t m) : z_(m, 0.0) {}

void IdealPoint::update(std::span<const double> f) {
    if (!seen_) {
        z_.assign(f.begin(), f.end());
        seen_ = true;
        return;
    }
    if (f.size() != z_.size()) throw DimensionError("ideal point update with wrong objective count");
    for (std::size_t i = 0; i < f.size(); ++i) z_[i] = std::min(z_[i], f[i]);
}

std::vector<WeightVector> simplex_lattice(int m, int divisions) {
    if (m < 2) throw std::invalid_argument("simplex lattice needs at least 2 objectives");
    if (divisions < 1) throw std::invalid_argument("simplex lattice needs at least 1 division");
    std::vector<WeightVector> out;
    std::vector<int> prefix;
    lattice_rec(m, divisions, divisions, prefix, out);
    return out;
}

std::vector<WeightVector> sld_weights(int m, int target) {
    if (m < 2) throw std::invalid_argument("weight vectors need at least 2 objectives");
    if (target < m) throw std::invalid_argument("SLD target smaller than the objective count");
    int h = 1;
    while (binomial(h + 1 + m - 1, m - 1) <= target) ++h;
    return simplex_lattice(m, h);
}

std::vector<WeightVector> uniform_design_weights(int m, int n) {
    if (m < 2) throw std::invalid_argument("weight vectors need at least 2 objectives");
    if (n < 1) throw std::invalid_argument("uniform design needs at least one vector");
    const int s = m - 1;
    std::vector<std::vector<double>> best;
    if (s == 1 || n <= 2) {
        best = glp_rows(n, s, 1);
    } else {
        double best_cd = 0.0;
        for (int h = 1; h < n; ++h) {
            if (std::gcd(h, n) != 1) continue;
            auto rows = glp_rows(n, s, h);
            const double cd = centered_discrepancy(rows);
            if (best.empty() || cd < best_cd) {
                best = std::move(rows);
                best_cd = cd;
            }
        }
    }
    std::vector<WeightVector> out;
    out.reserve(best.size());
    for (const auto& u : best) out.push_back(cube_to_simplex(u));
    return out;
}

std::vector<WeightVector> simplex_points(int m, std::size_t k) {
    if (m < 2) throw std::invalid_argument("simplex points need at least 2 objectives");
    std::vector<WeightVector> out;
    if (k < static_cast<std::size_t>(m)) {
        for (std::size_t i = 0; i < k; ++i) {
            WeightVector corner(static_cast<std::size_t>(m), 0.0);
            corner[i] = 1.0;
            out.push_back(std::move(corner));
        }
        return out;
    }
    out = sld_weights(m, static_cast<int>(k));
    const std::size_t rest = k - out.size();
    if (rest > 0) {
        auto fill = uniform_design_weights(m, static_cast<int>(rest));
        out.insert(out.end(), fill.begin(), fill.end());
    }
    return out;
}

double tchebycheff(std::span<const double> f, std::span<const double> w, std::span<const double> z) {
    if (f.size() != w.size() || f.size() != z.size())
        throw DimensionError("tchebycheff: objective, weight and ideal point lengths differ");
    double g = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) g = std::max(g, w[i] * std::abs(f[i] - z[i]));
    return g;
}

}  // namespace mostn
