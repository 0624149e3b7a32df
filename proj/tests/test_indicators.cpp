#include <random>

#include "doctest.h"
#include "mostn/indicators.hpp"
#include "oracles.hpp"

using namespace mostn;

namespace {
using Pts = std::vector<ObjectiveVector>;
const ObjectiveVector ref2{1.1, 1.1};
const ObjectiveVector ref3{1.1, 1.1, 1.1};
}  // namespace

TEST_CASE("hypervolume examples") {
    CHECK(hypervolume(Pts{{0, 0}}, ref2).volume == doctest::Approx(1.21).epsilon(1e-15));
    CHECK(std::abs(hypervolume(Pts{{0, 1}, {1, 0}}, ref2).volume - 0.21) <= 1e-12);
    CHECK(hypervolume(Pts{{0, 0, 0}}, ref3).volume == doctest::Approx(1.331));
    const auto none = hypervolume(Pts{{1.1, 0.0}, {2, 2}}, ref2);
    CHECK(none.empty());
    CHECK(none.volume == 0.0);
    CHECK(default_hv_reference(3) == ref3);
    CHECK_THROWS_AS(hypervolume(Pts{{0, 0, 0}}, ref2), DimensionError);
}

TEST_CASE("2-D hypervolume matches the grid oracle") {
    std::mt19937_64 gen(10);
    for (int t = 0; t < 200; ++t) {
        const auto pts = oracle::random_points(gen, 1 + t % 40, 2, 0.0, 1.3);
        CHECK(std::abs(hypervolume(pts, ref2).volume - oracle::grid_hypervolume(pts, ref2)) <= 1e-9);
    }
}

TEST_CASE("3-D hypervolume matches the grid oracle") {
    std::mt19937_64 gen(11);
    for (int t = 0; t < 60; ++t) {
        const auto pts = oracle::random_points(gen, 1 + t % 15, 3, 0.0, 1.2);
        CHECK(std::abs(hypervolume(pts, ref3).volume - oracle::grid_hypervolume(pts, ref3)) <= 1e-9);
    }
    const auto front = oracle::random_front(gen, 20, 3);
    CHECK(std::abs(hypervolume(front, ref3).volume - oracle::monte_carlo_hypervolume(front, ref3, 60, 1)) <= 5e-3);
}

TEST_CASE("adding a non-dominated point never decreases hypervolume") {
    std::mt19937_64 gen(12);
    for (int t = 0; t < 100; ++t) {
        auto pts = oracle::random_front(gen, 10, 3);
        const double before = hypervolume(pts, ref3).volume;
        pts.push_back(oracle::random_points(gen, 1, 3)[0]);
        CHECK(hypervolume(pts, ref3).volume >= before - 1e-15);
    }
}

TEST_CASE("igd") {
    const Pts front{{0, 1}, {0.5, 0.5}, {1, 0}};
    CHECK(igd(front, front) == 0.0);
    CHECK(igd(Pts{{0, 0}}, Pts{{3, 4}}) == 5.0);
    CHECK_THROWS(igd(Pts{}, front));
    CHECK_THROWS(igd(front, Pts{}));
    std::mt19937_64 gen(13);
    for (int t = 0; t < 100; ++t) {
        const auto a = oracle::random_points(gen, 1 + t % 50, 2);
        const auto f = oracle::random_points(gen, 200, 2);
        CHECK(igd(a, f) == doctest::Approx(oracle::igd(a, f)).epsilon(1e-12));
    }
}

TEST_CASE("non-dominated filter") {
    CHECK(filter_nondominated(Pts{{1, 2}, {2, 1}, {3, 3}}) == Pts{{1, 2}, {2, 1}});
    CHECK(filter_nondominated(Pts{{1, 1}, {1, 1}, {1, 1}}) == Pts{{1, 1}});
    std::mt19937_64 gen(14);
    for (int t = 0; t < 50; ++t) {
        const auto cloud = oracle::random_points(gen, 100, 2);
        Pts expect;
        for (const auto& p : cloud) {
            bool beaten = false;
            for (const auto& q : cloud) beaten = beaten || oracle::dominates(q, p);
            if (!beaten) expect.push_back(p);
        }
        CHECK(filter_nondominated(cloud) == expect);
    }
}
