#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "mostn/problems.hpp"

using namespace mostn;

namespace {

constexpr double PI = std::numbers::pi;

// Independent transcription of the CEC-2009 UF definitions, written in the
// 1-based style of the competition's reference code.
std::vector<double> uf_oracle(int id, const std::vector<double>& xv) {
    const int n = static_cast<int>(xv.size());
    auto x = [&](int j) { return xv[static_cast<std::size_t>(j - 1)]; };
    double s1 = 0, s2 = 0, s3 = 0, p1 = 1, p2 = 1;
    int c1 = 0, c2 = 0, c3 = 0;
    if (id <= 7) {
        for (int j = 2; j <= n; ++j) {
            double y = 0;
            switch (id) {
                case 1: case 4: case 5: case 6: case 7: y = x(j) - std::sin(6 * PI * x(1) + j * PI / n); break;
                case 2:
                    if (j % 2 == 1)
                        y = x(j) - (0.3 * x(1) * x(1) * std::cos(24 * PI * x(1) + 4 * j * PI / n) + 0.6 * x(1)) *
                                       std::cos(6 * PI * x(1) + j * PI / n);
                    else
                        y = x(j) - (0.3 * x(1) * x(1) * std::cos(24 * PI * x(1) + 4 * j * PI / n) + 0.6 * x(1)) *
                                       std::sin(6 * PI * x(1) + j * PI / n);
                    break;
                case 3: y = x(j) - std::pow(x(1), 0.5 * (1.0 + 3.0 * (j - 2.0) / (n - 2.0))); break;
            }
            double h = y * y;
            if (id == 4) h = std::abs(y) / (1 + std::exp(2 * std::abs(y)));
            if (id == 5) h = 2 * y * y - std::cos(4 * PI * y) + 1;
            const double pr = std::cos(20 * y * PI / std::sqrt(static_cast<double>(j)));
            if (j % 2 == 1) {
                s1 += h;
                p1 *= pr;
                ++c1;
            } else {
                s2 += h;
                p2 *= pr;
                ++c2;
            }
        }
        if (id == 3 || id == 6) {
            const double g1 = 2.0 * (4 * s1 - 2 * p1 + 2) / c1;
            const double g2 = 2.0 * (4 * s2 - 2 * p2 + 2) / c2;
            if (id == 3) return {x(1) + g1, 1 - std::sqrt(x(1)) + g2};
            const double b = std::max(0.0, 2 * (1.0 / 4 + 0.1) * std::sin(4 * PI * x(1)));
            return {x(1) + b + g1, 1 - x(1) + b + g2};
        }
        const double g1 = 2.0 * s1 / c1, g2 = 2.0 * s2 / c2;
        switch (id) {
            case 4: return {x(1) + g1, 1 - x(1) * x(1) + g2};
            case 5: {
                const double b = (1.0 / 20 + 0.1) * std::abs(std::sin(20 * PI * x(1)));
                return {x(1) + b + g1, 1 - x(1) + b + g2};
            }
            case 7: return {std::pow(x(1), 0.2) + g1, 1 - std::pow(x(1), 0.2) + g2};
            default: return {x(1) + g1, 1 - std::sqrt(x(1)) + g2};
        }
    }
    for (int j = 3; j <= n; ++j) {
        const double y = x(j) - 2 * x(2) * std::sin(2 * PI * x(1) + j * PI / n);
        const double h = id == 10 ? 4 * y * y - std::cos(8 * PI * y) + 1 : y * y;
        if (j % 3 == 1) {
            s1 += h;
            ++c1;
        } else if (j % 3 == 2) {
            s2 += h;
            ++c2;
        } else {
            s3 += h;
            ++c3;
        }
    }
    const double g1 = 2 * s1 / c1, g2 = 2 * s2 / c2, g3 = 2 * s3 / c3;
    if (id == 9) {
        const double t = std::max(0.0, 1.1 * (1 - 4 * (2 * x(1) - 1) * (2 * x(1) - 1)));
        return {0.5 * (t + 2 * x(1)) * x(2) + g1, 0.5 * (t - 2 * x(1) + 2) * x(2) + g2, 1 - x(2) + g3};
    }
    return {std::cos(0.5 * PI * x(1)) * std::cos(0.5 * PI * x(2)) + g1,
            std::cos(0.5 * PI * x(1)) * std::sin(0.5 * PI * x(2)) + g2, std::sin(0.5 * PI * x(1)) + g3};
}

std::vector<double> random_in(const ProblemSpec& p, std::mt19937_64& gen) {
    std::vector<double> x(static_cast<std::size_t>(p.dimension));
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::uniform_real_distribution<double>(p.lower[i], p.upper[i])(gen);
    return x;
}

}  // namespace

TEST_CASE("problem shapes") {
    for (auto id : all_problems()) {
        const auto p = make_problem(id);
        CHECK(p.dimension == 10);
        CHECK(p.objectives == (static_cast<int>(id) <= 7 ? 2 : 3));
        CHECK(p.lower.size() == 10);
        CHECK(p.upper.size() == 10);
        CHECK(parse_problem_id(p.name()) == id);
    }
    CHECK(all_problems().size() == 10);
    CHECK_THROWS(parse_problem_id("UF11"));
}

TEST_CASE("UF1 Pareto-set point") {
    const auto p = make_problem(ProblemId::UF1);
    std::vector<double> x(10);
    x[0] = 0.25;
    for (int j = 2; j <= 10; ++j) x[static_cast<std::size_t>(j - 1)] = std::sin(6 * PI * 0.25 + j * PI / 10);
    const auto f = evaluate(p, x);
    CHECK(f[0] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(f[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("UF8 Pareto-set point lies on the unit sphere") {
    const auto p = make_problem(ProblemId::UF8);
    std::vector<double> x(10);
    x[0] = 0.3;
    x[1] = 0.6;
    for (int j = 3; j <= 10; ++j) x[static_cast<std::size_t>(j - 1)] = 2 * x[1] * std::sin(2 * PI * x[0] + j * PI / 10);
    const auto f = evaluate(p, x);
    CHECK(f[0] * f[0] + f[1] * f[1] + f[2] * f[2] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("evaluation matches an independent transcription") {
    std::mt19937_64 gen(77);
    for (auto id : all_problems()) {
        const auto p = make_problem(id);
        for (int t = 0; t < 200; ++t) {
            const auto x = random_in(p, gen);
            const auto f = evaluate(p, x);
            const auto g = uf_oracle(static_cast<int>(id), x);
            REQUIRE(f.size() == g.size());
            for (std::size_t k = 0; k < f.size(); ++k) CHECK(f[k] == doctest::Approx(g[k]).epsilon(1e-12));
        }
    }
}

TEST_CASE("objectives are finite over the box") {
    std::mt19937_64 gen(78);
    for (auto id : all_problems()) {
        const auto p = make_problem(id);
        for (int t = 0; t < 1000; ++t) {
            const auto f = evaluate(p, random_in(p, gen));
            for (double v : f) REQUIRE(std::isfinite(v));
        }
        // box corners too
        CHECK(std::isfinite(evaluate(p, p.lower)[0]));
        CHECK(std::isfinite(evaluate(p, p.upper)[0]));
    }
}

TEST_CASE("evaluation errors") {
    const auto p = make_problem(ProblemId::UF2);
    CHECK_THROWS_AS(evaluate(p, std::vector<double>(9, 0.0)), DimensionError);
    std::vector<double> x(10, 0.0);
    x[3] = 1.5;
    try {
        evaluate(p, x);
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(e.index() == 3);
    }
    x[3] = std::nan("");
    CHECK_THROWS_AS(evaluate(p, x), DomainError);
}

TEST_CASE("front samplers") {
    const auto uf1 = sample_pareto_front(make_problem(ProblemId::UF1), 3);
    REQUIRE(uf1.size() == 3);
    CHECK(uf1[0] == std::vector<double>{0, 1});
    CHECK(uf1[1][0] == doctest::Approx(0.25));
    CHECK(uf1[1][1] == doctest::Approx(0.5));
    CHECK(uf1[2] == std::vector<double>{1, 0});

    for (auto id : {ProblemId::UF1, ProblemId::UF2, ProblemId::UF3, ProblemId::UF4, ProblemId::UF7}) {
        const auto two = sample_pareto_front(make_problem(id), 2);
        REQUIRE(two.size() == 2);
        CHECK(two[0] == std::vector<double>{0, 1});
        CHECK(two[1] == std::vector<double>{1, 0});
    }

    for (const auto& f : sample_pareto_front(make_problem(ProblemId::UF1), 1000))
        CHECK(f[1] == doctest::Approx(1 - std::sqrt(f[0])).epsilon(1e-12));
    for (const auto& f : sample_pareto_front(make_problem(ProblemId::UF4), 1000))
        CHECK(f[1] == doctest::Approx(1 - f[0] * f[0]).epsilon(1e-12));
    for (const auto& f : sample_pareto_front(make_problem(ProblemId::UF7), 1000))
        CHECK(f[0] + f[1] == doctest::Approx(1.0).epsilon(1e-12));

    const auto uf5 = sample_pareto_front(make_problem(ProblemId::UF5), 1000);
    CHECK(uf5.size() == 21);
    for (const auto& f : uf5) CHECK(f[0] + f[1] == doctest::Approx(1.0));

    for (const auto& f : sample_pareto_front(make_problem(ProblemId::UF6), 1000)) {
        CHECK(f[0] + f[1] == doctest::Approx(1.0));
        const bool on = f[0] == 0.0 || (f[0] >= 0.25 - 1e-12 && f[0] <= 0.5 + 1e-12) || f[0] >= 0.75 - 1e-12;
        CHECK(on);
    }

    for (auto id : {ProblemId::UF8, ProblemId::UF10}) {
        const auto front = sample_pareto_front(make_problem(id), 1000);
        CHECK(front.size() >= 900);
        for (const auto& f : front) {
            CHECK(std::abs(f[0] * f[0] + f[1] * f[1] + f[2] * f[2] - 1.0) <= 1e-12);
            for (double v : f) CHECK(v >= 0.0);
        }
    }
    for (const auto& f : sample_pareto_front(make_problem(ProblemId::UF9), 1000)) {
        CHECK(f[0] + f[1] + f[2] == doctest::Approx(1.0));
        const double s = f[0] / std::max(f[0] + f[1], 1e-300);
        const bool on = f[0] + f[1] == 0.0 || s <= 0.25 + 1e-9 || s >= 0.75 - 1e-9;
        CHECK(on);
    }
    CHECK_THROWS(sample_pareto_front(make_problem(ProblemId::UF1), 1));
}

TEST_CASE("sampled fronts are mutually non-dominated") {
    for (auto id : all_problems()) {
        const auto front = sample_pareto_front(make_problem(id), 200);
        for (std::size_t i = 0; i < front.size(); ++i)
            for (std::size_t j = 0; j < front.size(); ++j)
                if (i != j) REQUIRE_FALSE(strictly_dominates(front[i], front[j]));
    }
}
