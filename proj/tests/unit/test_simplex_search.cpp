#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cogcap/channel_family.hpp"
#include "cogcap/info_evaluator.hpp"
#include "cogcap/joint.hpp"
#include "cogcap/parallel.hpp"
#include "cogcap/rng.hpp"
#include "cogcap/simplex_search.hpp"

using namespace cogcap;

TEST_CASE("projection onto the simplex") {
    std::vector<double> v{0.2, 0.3, 0.5};
    project_to_simplex(v);
    CHECK(v == std::vector<double>{0.2, 0.3, 0.5});

    std::vector<double> w{2.0, 0.0, -1.0};
    project_to_simplex(w);
    CHECK(w[0] == doctest::Approx(1.0));
    CHECK(w[1] == 0.0);
    CHECK(w[2] == 0.0);

    Rng rng(4);
    for (int t = 0; t < 100; ++t) {
        std::vector<double> x(6);
        for (auto& e : x) e = 4.0 * rng.uniform() - 2.0;
        auto y = x;
        project_to_simplex(y);
        CHECK(std::accumulate(y.begin(), y.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-14));
        for (double e : y) CHECK(e >= 0.0);
        // Optimality: (x - y) . (z - y) <= 0 for vertices z of the simplex.
        for (std::size_t k = 0; k < y.size(); ++k) {
            double ip = 0.0;
            for (std::size_t i = 0; i < y.size(); ++i) ip += (x[i] - y[i]) * ((i == k ? 1.0 : 0.0) - y[i]);
            CHECK(ip <= 1e-12);
        }
    }
}

TEST_CASE("composition grids") {
    CHECK(composition_count(8, 4) == 165);
    CHECK(composition_count(8, 8) == 6435);
    CHECK(composition_count(64, 4) == 47905);
    CHECK(composition_count(8, 1) == 1);

    const auto g = simplex_grid(4, 3, 5);
    REQUIRE(g.size() == composition_count(4, 3) * 5);
    for (std::size_t k = 0; k < g.size() / 5; ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i < 5; ++i) {
            const double v = g[k * 5 + i];
            s += v;
            CHECK(std::abs(v * 4 - std::round(v * 4)) < 1e-15);
            if (i >= 3) CHECK(v == 0.0);
        }
        CHECK(s == doctest::Approx(1.0));
    }

    const auto plan = plan_grid(4, 4, 8, 20000);
    CHECK(plan.aux_card == 2);
    CHECK(plan.points == 6435);
    CHECK(plan_grid(1, 4, 8, 20000).points == 165);
}

TEST_CASE("descent finds the minimum of a convex quadratic on the simplex") {
    const std::vector<double> target{0.6, 0.3, 0.1, 0.0};
    const SimplexObjective f = [&](std::span<const double> x, std::span<double> g) {
        double v = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double d = x[i] - target[i];
            v += d * d;
            if (!g.empty()) g[i] = 2.0 * d;
        }
        return v;
    };
    const auto r = descend(f, {0.25, 0.25, 0.25, 0.25}, 500);
    CHECK(r.converged);
    CHECK(r.value < 1e-20);
    for (std::size_t i = 0; i < 4; ++i) CHECK(r.x[i] == doctest::Approx(target[i]).epsilon(1e-9));
}

TEST_CASE("analytic gradients match finite differences") {
    const Channel ch = random_channel(17, {2, 2, 2, 3});
    const std::vector<LinearInfo> exprs = {
        mi({"U"}, {"Y1"}),
        mi({"X2"}, {"Y2"}, {"U", "X1"}),
        mi({"U", "X1"}, {"Y2"}) - mi({"U", "X1"}, {"Y1"}),
        mi({"X1", "X2"}, {"Y2"}),
        mi({"U"}, {"Y2"}, {"X1"}) - mi({"X1"}, {"Y1"}),
    };
    const ChannelInfoEvaluator ev(ch, 3);
    Rng rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        const auto p = rng.dirichlet1(ev.dim());
        for (const auto& e : exprs) {
            const auto c = ev.compile(e);
            ChannelInfoEvaluator::Workspace ws;
            ev.evaluate(p, c.mask, ws, true);
            std::vector<double> grad(ev.dim(), 0.0);
            const double v = ChannelInfoEvaluator::combine(c, ws, grad);

            const auto joint = attach_channel(ProbTensor({{"U", 3}, {"X1", 2}, {"X2", 2}}, p), ch);
            CHECK(v == doctest::Approx(evaluate(joint, e)).epsilon(1e-12));

            // Directional derivatives along simplex-preserving directions.
            for (std::size_t i = 0; i + 1 < ev.dim(); ++i) {
                const double h = 1e-6;
                auto pp = p, pm = p;
                pp[i] += h;
                pp[i + 1] -= h;
                pm[i] -= h;
                pm[i + 1] += h;
                ev.evaluate(pp, c.mask, ws, false);
                const double fp = ChannelInfoEvaluator::combine(c, ws, {});
                ev.evaluate(pm, c.mask, ws, false);
                const double fm = ChannelInfoEvaluator::combine(c, ws, {});
                const double fd = (fp - fm) / (2 * h);
                CHECK(grad[i] - grad[i + 1] == doctest::Approx(fd).epsilon(1e-5).scale(1.0));
            }
        }
    }
}

TEST_CASE("multistart is independent of the thread count") {
    const Channel ch = random_channel(5);
    const ChannelInfoEvaluator ev(ch, 2);
    const auto c = ev.compile(mi({"U"}, {"Y2"}) - mi({"U"}, {"Y1"}));
    const SimplexObjective f = [&](std::span<const double> x, std::span<double> g) {
        ChannelInfoEvaluator::Workspace ws;
        ev.evaluate(x, c.mask, ws, !g.empty());
        std::fill(g.begin(), g.end(), 0.0);
        return ChannelInfoEvaluator::combine(c, ws, g);
    };
    const auto grid = simplex_grid(4, ev.dim(), ev.dim());
    std::vector<double> values(grid.size() / ev.dim());
    for (std::size_t k = 0; k < values.size(); ++k) values[k] = f({grid.data() + k * ev.dim(), ev.dim()}, {});
    const auto a = multistart(f, grid, values, ev.dim(), 8, 42, 200, 1);
    const auto b = multistart(f, grid, values, ev.dim(), 8, 42, 200, 4);
    CHECK(a.best.value == b.best.value);
    CHECK(a.best.x == b.best.x);
    CHECK(a.best_restart == b.best_restart);
    CHECK(a.best.value <= a.best_grid_value);
}

TEST_CASE("parallel_for visits every index once and rethrows") {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t i) { if (i == 7) throw std::runtime_error("x"); }),
                    std::runtime_error);
}
