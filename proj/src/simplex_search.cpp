#include "cogcap/simplex_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cogcap/errors.hpp"
#include "cogcap/parallel.hpp"
#include "cogcap/rng.hpp"

namespace cogcap {

void project_to_simplex(std::span<double> v) {
    const std::size_t n = v.size();
    if (n == 0) return;
    std::vector<double> u(v.begin(), v.end());
    std::sort(u.begin(), u.end(), std::greater<>());
    double cumsum = 0.0;
    double theta = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        cumsum += u[j];
        const double t = (cumsum - 1.0) / static_cast<double>(j + 1);
        if (u[j] - t > 0.0) theta = t;
    }
    double total = 0.0;
    for (double& x : v) {
        x = std::max(x - theta, 0.0);
        total += x;
    }
    if (total > 0.0 && total != 1.0) {
        for (double& x : v) x /= total;
    }
}

std::size_t composition_count(std::size_t res, std::size_t parts) {
    if (parts == 0) return 0;
    // C(res + parts - 1, parts - 1), computed incrementally and saturated.
    const std::size_t k = std::min(parts - 1, res);
    const std::size_t n = res + parts - 1;
    long double c = 1.0L;
    for (std::size_t i = 1; i <= k; ++i) {
        c = c * static_cast<long double>(n - k + i) / static_cast<long double>(i);
        if (c > static_cast<long double>(std::numeric_limits<std::size_t>::max() / 2))
            return std::numeric_limits<std::size_t>::max();
    }
    return static_cast<std::size_t>(std::llround(c));
}

std::vector<double> simplex_grid(std::size_t res, std::size_t parts, std::size_t dim) {
    if (res < 1 || parts < 1 || parts > dim) throw ArgumentError("simplex_grid: bad arguments");
    const std::size_t count = composition_count(res, parts);
    std::vector<double> out;
    out.reserve(count * dim);
    std::vector<std::size_t> c(parts, 0);
    c[parts - 1] = res;
    const double scale = 1.0 / static_cast<double>(res);
    for (;;) {
        for (std::size_t i = 0; i < dim; ++i) out.push_back(i < parts ? static_cast<double>(c[i]) * scale : 0.0);
        // Next composition in lexicographic order of the leading coordinates.
        if (parts == 1) break;
        std::size_t j = parts - 1;
        while (j > 0 && c[j] == 0) --j;
        if (j == 0) break;
        const std::size_t rest = c[j] - 1;
        c[j] = 0;
        ++c[j - 1];
        c[parts - 1] = rest;
    }
    return out;
}

GridPlan plan_grid(std::size_t aux_card, std::size_t inputs, std::size_t res, std::size_t cap) {
    GridPlan plan;
    for (std::size_t u = aux_card; u >= 1; --u) {
        const std::size_t n = composition_count(res, u * inputs);
        if (n <= cap || u == 1) {
            plan.aux_card = u;
            plan.points = n;
            return plan;
        }
    }
    return plan;
}

LocalResult descend(const SimplexObjective& f, std::vector<double> x0, std::size_t max_iters) {
    const std::size_t n = x0.size();
    LocalResult r;
    r.x = std::move(x0);
    project_to_simplex(r.x);
    std::vector<double> g(n), gy(n), y(n);
    double fx = f(r.x, g);
    double step = 1.0;
    std::size_t stall = 0;

    for (r.iterations = 0; r.iterations < max_iters; ++r.iterations) {
        bool moved = false;
        double fy = fx;
        for (;;) {
            double dmax = 0.0, lin = 0.0, d2 = 0.0;
            for (std::size_t i = 0; i < n; ++i) y[i] = r.x[i] - step * g[i];
            project_to_simplex(y);
            for (std::size_t i = 0; i < n; ++i) {
                const double d = y[i] - r.x[i];
                dmax = std::max(dmax, std::abs(d));
                lin += g[i] * d;
                d2 += d * d;
            }
            if (dmax < 1e-13) break;  // stationary for this step length
            fy = f(y, gy);
            if (fy <= fx + lin + d2 / (2.0 * step) && fy <= fx) {
                moved = true;
                break;
            }
            step *= 0.5;
            if (step < 1e-14) break;
        }
        if (!moved) {
            r.converged = true;
            break;
        }
        const double decrease = fx - fy;
        r.x.swap(y);
        g.swap(gy);
        fx = fy;
        if (decrease <= 1e-15 * (1.0 + std::abs(fx))) {
            if (++stall >= 5) {
                r.converged = true;
                ++r.iterations;
                break;
            }
        } else {
            stall = 0;
        }
        step = std::min(step * 2.0, 1e6);
    }
    r.value = fx;
    return r;
}

std::vector<std::size_t> best_indices(std::span<const double> values, std::size_t k) {
    std::vector<std::size_t> idx(values.size());
    std::iota(idx.begin(), idx.end(), 0);
    k = std::min(k, idx.size());
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k), idx.end(),
                      [&](std::size_t a, std::size_t b) {
                          return values[a] < values[b] || (values[a] == values[b] && a < b);
                      });
    idx.resize(k);
    return idx;
}

MultistartResult multistart(const SimplexObjective& f, std::span<const double> grid,
                            std::span<const double> grid_values, std::size_t dim, std::size_t restarts,
                            std::uint64_t seed, std::size_t max_iters, std::size_t threads) {
    if (restarts == 0) throw ArgumentError("multistart: restarts must be positive");
    if (grid_values.empty() || grid.size() != grid_values.size() * dim)
        throw DimensionError("multistart: grid and values disagree");
    const std::size_t from_grid = std::min((restarts + 1) / 2, grid_values.size());
    const auto seeds = best_indices(grid_values, from_grid);

    std::vector<LocalResult> results(restarts);
    parallel_for(restarts, threads, [&](std::size_t r) {
        std::vector<double> x0;
        if (r < seeds.size()) {
            const auto row = grid.subspan(seeds[r] * dim, dim);
            x0.assign(row.begin(), row.end());
        } else {
            Rng rng(derive_seed(seed, {r}));
            x0 = rng.dirichlet1(dim);
        }
        results[r] = descend(f, std::move(x0), max_iters);
    });

    MultistartResult out;
    out.restarts = restarts;
    out.best_grid_value = grid_values[seeds.front()];
    for (std::size_t r = 0; r < restarts; ++r) {
        out.total_iterations += results[r].iterations;
        if (r == 0 || results[r].value < results[out.best_restart].value) out.best_restart = r;
    }
    out.best = std::move(results[out.best_restart]);
    return out;
}

}  // namespace cogcap
