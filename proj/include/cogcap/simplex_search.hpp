#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace cogcap {

/// Objective on the probability simplex. When grad is nonempty the callee
/// writes the gradient into it. Must be safe to call concurrently.
using SimplexObjective = std::function<double(std::span<const double> x, std::span<double> grad)>;

/// Euclidean projection onto {x >= 0, sum x = 1}, in place.
void project_to_simplex(std::span<double> v);

/// Number of points k/res on the simplex with `parts` coordinates,
/// saturating at SIZE_MAX.
std::size_t composition_count(std::size_t res, std::size_t parts);

/// All points with coordinates in {0, 1/res, ..., 1} on the simplex over the
/// first `parts` coordinates, zero-padded to `dim`. Flat, point-major.
std::vector<double> simplex_grid(std::size_t res, std::size_t parts, std::size_t dim);

/// Grid actually enumerated for an auxiliary-augmented scope: the largest
/// auxiliary cardinality (<= aux_card) whose full grid has at most `cap`
/// points. Coordinates for the dropped auxiliary symbols stay zero, so the
/// planned grid is always a subset of the full scope.
struct GridPlan {
    std::size_t aux_card = 1;
    std::size_t points = 0;
};
GridPlan plan_grid(std::size_t aux_card, std::size_t inputs, std::size_t res, std::size_t cap);

struct LocalResult {
    std::vector<double> x;
    double value = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
};

/// Projected-gradient descent with backtracking from x0.
LocalResult descend(const SimplexObjective& f, std::vector<double> x0, std::size_t max_iters);

/// Indices of the k smallest values; ties broken by index.
std::vector<std::size_t> best_indices(std::span<const double> values, std::size_t k);

struct MultistartResult {
    LocalResult best;
    std::size_t best_restart = 0;
    std::size_t restarts = 0;
    std::size_t total_iterations = 0;
    double best_grid_value = 0.0;
};

/// Minimizes f from `restarts` starting points: the better half are the grid
/// points with the lowest values, the rest Dirichlet(1) draws seeded by
/// derive_seed(seed, {restart}). The grid is flat, point-major with `dim`
/// coordinates per point. Restarts run in parallel; the lowest value wins,
/// ties going to the lower restart index.
MultistartResult multistart(const SimplexObjective& f, std::span<const double> grid,
                            std::span<const double> grid_values, std::size_t dim, std::size_t restarts,
                            std::uint64_t seed, std::size_t max_iters, std::size_t threads);

}  // namespace cogcap
