#include "mostn/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mostn/decomposition.hpp"

namespace mostn {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_three_objective(ProblemId id) {
    return id == ProblemId::UF8 || id == ProblemId::UF9 || id == ProblemId::UF10;
}

// The two-objective problems split x_2..x_n into odd (J1) and even (J2)
// indices, the three-objective ones into residues of j mod 3. Indices are
// 1-based to match the published definitions.
struct Accumulator {
    double sum = 0.0;
    double prod = 1.0;
    int count = 0;
};

double mean_term(const Accumulator& a) { return 2.0 / a.count * a.sum; }

// 2/|J| (4 sum y^2 - 2 prod cos(20 y pi / sqrt j) + 2), used by UF3 and UF6.
double rastrigin_like(const Accumulator& a) { return 2.0 / a.count * (4.0 * a.sum - 2.0 * a.prod + 2.0); }

ObjectiveVector eval_two(ProblemId id, std::span<const double> x) {
    const int n = static_cast<int>(x.size());
    const double x1 = x[0];
    Accumulator odd, even;  // J1, J2
    for (int j = 2; j <= n; ++j) {
        const double xj = x[static_cast<std::size_t>(j - 1)];
        const double phase = 6.0 * kPi * x1 + j * kPi / n;
        double y = 0.0;
        double term = 0.0;
        double factor = 1.0;
        switch (id) {
            case ProblemId::UF1:
            case ProblemId::UF7:
                y = xj - std::sin(phase);
                term = y * y;
                break;
            case ProblemId::UF2: {
                const double amp = 0.3 * x1 * x1 * std::cos(24.0 * kPi * x1 + 4.0 * j * kPi / n) + 0.6 * x1;
                y = xj - amp * ((j % 2 == 1) ? std::cos(phase) : std::sin(phase));
                term = y * y;
                break;
            }
            case ProblemId::UF3:
                y = xj - std::pow(x1, 0.5 * (1.0 + 3.0 * (j - 2) / (n - 2.0)));
                term = y * y;
                factor = std::cos(20.0 * y * kPi / std::sqrt(static_cast<double>(j)));
                break;
            case ProblemId::UF4:
                y = xj - std::sin(phase);
                term = std::abs(y) / (1.0 + std::exp(2.0 * std::abs(y)));
                break;
            case ProblemId::UF5:
                y = xj - std::sin(phase);
                term = 2.0 * y * y - std::cos(4.0 * kPi * y) + 1.0;
                break;
            case ProblemId::UF6:
                y = xj - std::sin(phase);
                term = y * y;
                factor = std::cos(20.0 * y * kPi / std::sqrt(static_cast<double>(j)));
                break;
            default:
                throw std::logic_error("not a two-objective problem");
        }
        Accumulator& acc = (j % 2 == 1) ? odd : even;
        acc.sum += term;
        acc.prod *= factor;
        ++acc.count;
    }

    switch (id) {
        case ProblemId::UF1:
        case ProblemId::UF2:
            return {x1 + mean_term(odd), 1.0 - std::sqrt(x1) + mean_term(even)};
        case ProblemId::UF3:
            return {x1 + rastrigin_like(odd), 1.0 - std::sqrt(x1) + rastrigin_like(even)};
        case ProblemId::UF4:
            return {x1 + mean_term(odd), 1.0 - x1 * x1 + mean_term(even)};
        case ProblemId::UF5: {
            constexpr double N = 10.0, eps = 0.1;
            const double h = (1.0 / (2.0 * N) + eps) * std::abs(std::sin(2.0 * N * kPi * x1));
            return {x1 + h + mean_term(odd), 1.0 - x1 + h + mean_term(even)};
        }
        case ProblemId::UF6: {
            constexpr double N = 2.0, eps = 0.1;
            const double h = std::max(0.0, 2.0 * (1.0 / (2.0 * N) + eps) * std::sin(2.0 * N * kPi * x1));
            return {x1 + h + rastrigin_like(odd), 1.0 - x1 + h + rastrigin_like(even)};
        }
        case ProblemId::UF7: {
            const double r = std::pow(x1, 0.2);
            return {r + mean_term(odd), 1.0 - r + mean_term(even)};
        }
        default:
            throw std::logic_error("not a two-objective problem");
    }
}

ObjectiveVector eval_three(ProblemId id, std::span<const double> x) {
    const int n = static_cast<int>(x.size());
    const double x1 = x[0];
    const double x2 = x[1];
    Accumulator acc[3];  // J1: j-1 = 0 mod 3, J2: j-2 = 0 mod 3, J3: j = 0 mod 3
    for (int j = 3; j <= n; ++j) {
        const double y = x[static_cast<std::size_t>(j - 1)] - 2.0 * x2 * std::sin(2.0 * kPi * x1 + j * kPi / n);
        const double term = (id == ProblemId::UF10) ? 4.0 * y * y - std::cos(8.0 * kPi * y) + 1.0 : y * y;
        Accumulator& a = acc[(j % 3 == 1) ? 0 : (j % 3 == 2) ? 1 : 2];
        a.sum += term;
        ++a.count;
    }
    if (id == ProblemId::UF9) {
        constexpr double eps = 0.1;
        const double g = std::max(0.0, (1.0 + eps) * (1.0 - 4.0 * (2.0 * x1 - 1.0) * (2.0 * x1 - 1.0)));
        return {0.5 * (g + 2.0 * x1) * x2 + mean_term(acc[0]),
                0.5 * (g - 2.0 * x1 + 2.0) * x2 + mean_term(acc[1]),
                1.0 - x2 + mean_term(acc[2])};
    }
    const double c1 = std::cos(0.5 * x1 * kPi);
    return {c1 * std::cos(0.5 * x2 * kPi) + mean_term(acc[0]),
            c1 * std::sin(0.5 * x2 * kPi) + mean_term(acc[1]),
            std::sin(0.5 * x1 * kPi) + mean_term(acc[2])};
}

ReferenceFront two_objective_front(ProblemId id, std::size_t k) {
    ReferenceFront out;
    out.reserve(k);
    const double last = static_cast<double>(k - 1);
    switch (id) {
        case ProblemId::UF1:
        case ProblemId::UF2:
        case ProblemId::UF3:
            for (std::size_t i = 0; i < k; ++i) {
                const double t = i / last;
                out.push_back({t * t, 1.0 - t});
            }
            break;
        case ProblemId::UF4:
            for (std::size_t i = 0; i < k; ++i) {
                const double t = i / last;
                out.push_back({t, 1.0 - t * t});
            }
            break;
        case ProblemId::UF7:
            for (std::size_t i = 0; i < k; ++i) {
                const double t = i / last;
                out.push_back({t, 1.0 - t});
            }
            break;
        case ProblemId::UF5: {
            constexpr std::size_t kPoints = 21;  // i / 2N for N = 10
            const std::size_t count = std::min(k, kPoints);
            for (std::size_t i = 0; i < count; ++i) {
                const auto idx = static_cast<std::size_t>(
                    std::lround(static_cast<double>(i) * (kPoints - 1) / static_cast<double>(count - 1)));
                const double f1 = static_cast<double>(idx) / (kPoints - 1);
                out.push_back({f1, 1.0 - f1});
            }
            break;
        }
        case ProblemId::UF6: {
            // Isolated point (0,1) plus the segments f1 in [1/4,1/2] and [3/4,1].
            out.push_back({0.0, 1.0});
            if (k == 2) {
                out.push_back({1.0, 0.0});
                break;
            }
            const double span = static_cast<double>(k - 2);
            for (std::size_t i = 0; i <= k - 2; ++i) {
                const double s = 0.5 * static_cast<double>(i) / span;
                const double f1 = (s <= 0.25) ? 0.25 + s : 0.75 + (s - 0.25);
                out.push_back({f1, 1.0 - f1});
            }
            break;
        }
        default:
            throw std::invalid_argument("unsupported problem for a two-objective front");
    }
    return out;
}

ReferenceFront three_objective_front(ProblemId id, std::size_t k) {
    ReferenceFront out;
    out.reserve(k);
    for (const auto& w : simplex_points(3, k)) {
        if (id == ProblemId::UF9) {
            // Plane f1 + f2 + f3 = 1 restricted to f1/(1-f3) in [0,1/4] U [3/4,1].
            const double rest = w[0] + w[1];
            const double s = rest > 0.0 ? w[0] / rest : 0.0;
            const double split = (s < 0.5) ? 0.5 * s : 0.75 + 0.5 * (s - 0.5);
            const double f3 = w[2];
            out.push_back({split * (1.0 - f3), (1.0 - split) * (1.0 - f3), f3});
        } else {
            const double norm = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
            out.push_back({w[0] / norm, w[1] / norm, w[2] / norm});
        }
    }
    return out;
}

}  // namespace

std::string ProblemSpec::name() const { return "UF" + std::to_string(static_cast<int>(id)); }

ProblemSpec make_problem(ProblemId id) {
    const int n = kDefaultDimension;
    ProblemSpec spec;
    spec.id = id;
    spec.dimension = n;
    spec.objectives = is_three_objective(id) ? 3 : 2;
    spec.lower.assign(n, -1.0);
    spec.upper.assign(n, 1.0);
    switch (id) {
        case ProblemId::UF3:
            spec.lower.assign(n, 0.0);
            break;
        case ProblemId::UF4:
            spec.lower.assign(n, -2.0);
            spec.upper.assign(n, 2.0);
            break;
        case ProblemId::UF8:
        case ProblemId::UF9:
        case ProblemId::UF10:
            spec.lower.assign(n, -2.0);
            spec.upper.assign(n, 2.0);
            spec.lower[1] = 0.0;
            spec.upper[1] = 1.0;
            break;
        default:
            break;
    }
    spec.lower[0] = 0.0;
    spec.upper[0] = 1.0;
    return spec;
}

ProblemId parse_problem_id(std::string_view name) {
    for (auto id : all_problems())
        if (make_problem(id).name() == name) return id;
    throw std::invalid_argument("unknown problem '" + std::string(name) + "'");
}

std::vector<ProblemId> all_problems() {
    std::vector<ProblemId> ids;
    for (int i = 1; i <= 10; ++i) ids.push_back(static_cast<ProblemId>(i));
    return ids;
}

ObjectiveVector evaluate(const ProblemSpec& spec, std::span<const double> x) {
    if (static_cast<int>(x.size()) != spec.dimension)
        throw DimensionError(spec.name() + ": expected " + std::to_string(spec.dimension) + " coordinates, got " +
                             std::to_string(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i]) || x[i] < spec.lower[i] || x[i] > spec.upper[i])
            throw DomainError(spec.name() + ": coordinate " + std::to_string(i) + " = " + std::to_string(x[i]) +
                                  " outside [" + std::to_string(spec.lower[i]) + ", " +
                                  std::to_string(spec.upper[i]) + "]",
                              i);
    }
    return spec.objectives == 3 ? eval_three(spec.id, x) : eval_two(spec.id, x);
}

ReferenceFront sample_pareto_front(const ProblemSpec& spec, std::size_t k) {
    if (k < 2) throw std::invalid_argument("reference front needs at least 2 points");
    return spec.objectives == 3 ? three_objective_front(spec.id, k) : two_objective_front(spec.id, k);
}

}  // namespace mostn
