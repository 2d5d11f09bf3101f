#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <vector>

#include <dyts/decomposition.hpp>
#include <dyts/error.hpp>
#include <dyts/rng.hpp>

using namespace dyts;

namespace {

std::set<std::size_t> as_set(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

} // namespace

TEST_CASE("tchebycheff examples") {
    CHECK(tchebycheff(Vec{1.0, 2.0}, Vec{0.5, 0.5}, Vec{0.0, 0.0}) == 4.0);
    CHECK(tchebycheff(Vec{0.3, 0.4}, Vec{0.2, 0.8}, Vec{0.3, 0.4}) == 0.0);
    CHECK(tchebycheff(Vec{0.2, 0.3}, Vec{0.0, 1.0}, Vec{0.0, 0.0}) == doctest::Approx(2e5).epsilon(1e-12));
    CHECK_THROWS_AS(tchebycheff(Vec{1.0, 2.0}, Vec{0.5, 0.5, 0.0}, Vec{0.0, 0.0}), ParameterError);
    CHECK_THROWS_AS(tchebycheff(Vec{1.0, 2.0}, Vec{0.5, 0.5}, Vec{0.0}), ParameterError);
}

TEST_CASE("two-objective weights") {
    const auto w = generate_weights(2, 3);
    REQUIRE(w.size() == 3);
    CHECK(w[0] == Vec{0.0, 1.0});
    CHECK(w[1] == Vec{0.5, 0.5});
    CHECK(w[2] == Vec{1.0, 0.0});
}

TEST_CASE("three-objective lattice sizes") {
    CHECK(lattice_divisions(600) == 33);
    CHECK(generate_weights(3, 600).size() == 595);
    const auto corners = generate_weights(3, 3);
    REQUIRE(corners.size() == 3);
    std::set<Vec> got(corners.begin(), corners.end());
    CHECK(got == std::set<Vec>{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}});
    CHECK_THROWS_AS(generate_weights(4, 100), ParameterError);
    CHECK_THROWS_AS(generate_weights(3, 2), ParameterError);
}

TEST_CASE("property: weights lie on the simplex") {
    for (std::size_t m : {2u, 3u}) {
        for (std::size_t n : {3u, 7u, 91u, 300u, 600u}) {
            const auto ws = generate_weights(m, n);
            if (m == 2) CHECK(ws.size() == n);
            std::set<Vec> distinct(ws.begin(), ws.end());
            CHECK(distinct.size() == ws.size());
            for (const auto& w : ws) {
                REQUIRE(w.size() == m);
                double s = 0.0;
                for (double v : w) {
                    REQUIRE(v >= 0.0);
                    s += v;
                }
                REQUIRE(std::abs(s - 1.0) <= 1e-12);
            }
            CHECK(boundary_indices(ws).size() == m);
        }
    }
}

TEST_CASE("neighborhood examples") {
    const auto w5 = generate_weights(2, 5);
    const auto t1 = build_neighborhoods(w5, 1);
    for (std::size_t i = 0; i < 5; ++i) CHECK(t1[i] == std::vector<std::size_t>{i});

    const auto t3 = build_neighborhoods(w5, 3);
    CHECK(as_set(t3[2]) == std::set<std::size_t>{1, 2, 3});
    // The endpoint has neighbors at distance 1/4 and 1/2 only on one side.
    CHECK(t3[0] == std::vector<std::size_t>{0, 1, 2});

    const auto all = build_neighborhoods(w5, 5);
    for (const auto& nb : all) CHECK(as_set(nb) == std::set<std::size_t>{0, 1, 2, 3, 4});
    CHECK_THROWS_AS(build_neighborhoods(w5, 6), ParameterError);
    CHECK_THROWS_AS(build_neighborhoods(w5, 0), ParameterError);
}

TEST_CASE("property: neighborhoods match a brute-force ranking") {
    for (std::size_t m : {2u, 3u}) {
        const auto ws = generate_weights(m, m == 2 ? 40 : 66);
        const std::size_t T = 7;
        const auto nbs = build_neighborhoods(ws, T);
        for (std::size_t i = 0; i < ws.size(); ++i) {
            std::vector<std::pair<double, std::size_t>> ranked;
            for (std::size_t j = 0; j < ws.size(); ++j) {
                double d = 0.0;
                for (std::size_t k = 0; k < m; ++k) d += (ws[i][k] - ws[j][k]) * (ws[i][k] - ws[j][k]);
                ranked.emplace_back(d, j);
            }
            std::sort(ranked.begin(), ranked.end());
            REQUIRE(nbs[i].size() == T);
            CHECK(nbs[i].front() == i);
            const double cutoff = ranked[T - 1].first;
            for (std::size_t j : nbs[i]) {
                double d = 0.0;
                for (std::size_t k = 0; k < m; ++k) d += (ws[i][k] - ws[j][k]) * (ws[i][k] - ws[j][k]);
                REQUIRE(d <= cutoff + 1e-15);
            }
        }
    }
}

TEST_CASE("update_ideal examples") {
    Vec z{1.0, 1.0};
    CHECK(update_ideal(z, Vec{0.5, 2.0}));
    CHECK(z == Vec{0.5, 1.0});
    CHECK_FALSE(update_ideal(z, Vec{0.7, 1.5}));
    CHECK(z == Vec{0.5, 1.0});

    const double inf = std::numeric_limits<double>::infinity();
    Vec fresh{inf, inf, inf};
    update_ideal(fresh, Vec{0.1, 0.2, 0.3});
    CHECK(fresh == Vec{0.1, 0.2, 0.3});
    CHECK_THROWS_AS(update_ideal(fresh, Vec{0.1}), ParameterError);
}

TEST_CASE("compute_fir examples") {
    CHECK(compute_fir(1.0, 0.9) == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(compute_fir(0.37, 0.37) == 0.0);
    // The denominator is max(|g_old|, 1e-12) = 1e-12.
    CHECK(compute_fir(1e-15, 5e-16) == doctest::Approx(5e-4).epsilon(1e-12));
}

TEST_CASE("update_utility examples") {
    CHECK(update_utility(0.7, 0.002) == 1.0);
    CHECK(update_utility(1.0, 0.0005) == doctest::Approx(0.975).epsilon(1e-15));
    CHECK(update_utility(1.0, 0.0) == doctest::Approx(0.95).epsilon(1e-15));
}

TEST_CASE("property: utility stays in (0, 1]") {
    Rng rng(21, 0);
    for (int seq = 0; seq < 500; ++seq) {
        double pi = 1.0;
        for (int step = 0; step < 20'000; ++step) {
            const double u = rng.uniform01();
            const double fir = u < 0.01 ? 0.01 * rng.uniform01() : -5.0 * rng.uniform01() + 0.001 * u;
            pi = update_utility(pi, fir);
            REQUIRE(pi > 0.0);
            REQUIRE(pi <= 1.0);
        }
    }
}

TEST_CASE("tournament with equal utilities is uniform") {
    const std::size_t N = 100;
    const std::vector<double> util(N, 0.5);
    const std::vector<std::size_t> boundary{0, N - 1};
    Rng rng(31, 0);
    std::vector<int> hits(N, 0);
    const int trials = 100'000;
    for (int t = 0; t < trials; ++t) {
        const auto sel = tournament_select_indices(util, boundary, 1, rng);
        REQUIRE(sel.size() == 3);
        REQUIRE(sel[0] == 0);
        REQUIRE(sel[1] == N - 1);
        ++hits[sel[2]];
    }
    CHECK(hits[0] == 0);
    CHECK(hits[N - 1] == 0);
    for (std::size_t i = 1; i + 1 < N; ++i) {
        CHECK(std::abs(static_cast<double>(hits[i]) / trials - 1.0 / 98.0) < 0.002);
    }
}

TEST_CASE("tournament picks a dominant utility at the exact rate") {
    SUBCASE("98 candidates: probability 1 - (97/98)^10") {
        const std::size_t N = 100;
        std::vector<double> util(N, 0.01);
        util[40] = 1.0;
        const std::vector<std::size_t> boundary{0, N - 1};
        Rng rng(32, 0);
        const int trials = 100'000;
        int hit = 0;
        for (int t = 0; t < trials; ++t) hit += tournament_select_indices(util, boundary, 1, rng)[2] == 40;
        const double p = 1.0 - std::pow(97.0 / 98.0, 10);
        const double se = std::sqrt(p * (1 - p) / trials);
        CHECK(std::abs(static_cast<double>(hit) / trials - p) < 4.0 * se);
    }
    SUBCASE("two candidates: above 99%") {
        std::vector<double> util{0.5, 1.0, 0.01, 0.5};
        const std::vector<std::size_t> boundary{0, 3};
        Rng rng(33, 0);
        const int trials = 100'000;
        int hit = 0;
        for (int t = 0; t < trials; ++t) hit += tournament_select_indices(util, boundary, 1, rng)[2] == 1;
        CHECK(static_cast<double>(hit) / trials > 0.99);
    }
}

TEST_CASE("tournament with zero count returns the boundary") {
    const std::vector<double> util(10, 1.0);
    const std::vector<std::size_t> boundary{0, 9};
    Rng rng;
    CHECK(tournament_select_indices(util, boundary, 0, rng) == boundary);
    CHECK_THROWS_AS(tournament_select_indices(util, boundary, 9, rng), ParameterError);
}

TEST_CASE("property: tournament output is distinct and sized") {
    Rng rng(34, 0);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t N = 3 + rng.below(60);
        std::vector<double> util(N);
        for (auto& u : util) u = rng.uniform01();
        const std::vector<std::size_t> boundary{0, N - 1};
        const std::size_t count = rng.below(N - 1);
        const auto sel = tournament_select_indices(util, boundary, count, rng);
        REQUIRE(sel.size() == count + 2);
        REQUIRE(as_set(sel).size() == sel.size());
    }
}

TEST_CASE("mating scope branches") {
    const auto nbs = build_neighborhoods(generate_weights(2, 10), 3);
    Rng rng(41, 0);
    bool local = false;
    for (int t = 0; t < 100; ++t) {
        CHECK(mating_scope(4, nbs, 1.0, 10, rng, &local) == nbs[4]);
        CHECK(local);
        const auto all = mating_scope(4, nbs, 0.0, 10, rng, &local);
        CHECK_FALSE(local);
        std::vector<std::size_t> expect(10);
        std::iota(expect.begin(), expect.end(), 0);
        CHECK(all == expect);
    }
    int hits = 0;
    const int trials = 100'000;
    for (int t = 0; t < trials; ++t) {
        mating_scope(4, nbs, 0.8, 10, rng, &local);
        hits += local;
    }
    CHECK(std::abs(static_cast<double>(hits) / trials - 0.8) < 0.005);
}

TEST_CASE("fitness improvement examples") {
    std::vector<Subproblem> sps(2);
    sps[0].weight = {0.5, 0.5};
    sps[0].incumbent.f = {0.5, 0.5};  // g = 1.0
    sps[1].weight = {0.5, 0.5};
    sps[1].incumbent.f = {0.4, 0.4};  // g = 0.8
    const Vec z{0.0, 0.0};
    const std::vector<std::size_t> scope{0, 1};

    const auto fi = fitness_improvement(Vec{0.35, 0.35}, scope, sps, z);  // child g = 0.7
    CHECK(fi.fi == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(fi.best_index == 0);

    const auto worse = fitness_improvement(Vec{0.9, 0.9}, scope, sps, z);
    CHECK(worse.fi <= 0.0);

    const std::vector<std::size_t> single{1};
    CHECK(fitness_improvement(Vec{0.35, 0.35}, single, sps, z).fi == doctest::Approx(0.1).epsilon(1e-12));
    CHECK_THROWS_AS(fitness_improvement(Vec{0.35, 0.35}, std::vector<std::size_t>{}, sps, z), ParameterError);
}

TEST_CASE("fitness improvement breaks ties toward the lower index") {
    std::vector<Subproblem> sps(3);
    for (auto& sp : sps) {
        sp.weight = {0.5, 0.5};
        sp.incumbent.f = {1.0, 1.0};
    }
    const std::vector<std::size_t> scope{2, 0, 1};
    CHECK(fitness_improvement(Vec{0.5, 0.5}, scope, sps, Vec{0.0, 0.0}).best_index == 0);
}
