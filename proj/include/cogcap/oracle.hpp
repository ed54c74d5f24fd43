#pragma once

#include <cstddef>

#include "cogcap/channel.hpp"
#include "cogcap/conditions.hpp"
#include "cogcap/prob_tensor.hpp"
#include "cogcap/rate_region.hpp"
#include "cogcap/region_spec.hpp"

// Brute-force reference computations. Everything here goes through prob_core
// only (tensors, attach_channel, mutual information) so that it can check
// the optimizer paths independently.

namespace cogcap::oracle {

inline constexpr std::size_t kMaxGridPoints = 10'000'000;

/// Points k/resolution on the simplex over (U,X1,X2), or (X1,X2) when the
/// scope has no auxiliary. aux_card is ignored for input-only scopes.
struct GridSpec {
    std::size_t resolution = 8;
    std::size_t aux_card = 1;
};

/// Number of grid points for a simplex with `parts` coordinates; saturates.
std::size_t grid_point_count(std::size_t resolution, std::size_t parts);

struct GridMinimum {
    double min_gap = 0.0;
    ProbTensor argmin;
    std::size_t points = 0;
};

/// Exact minimum of the condition's gap over the grid. Throws BudgetError
/// when the grid exceeds kMaxGridPoints.
GridMinimum grid_min_gap(const Channel& channel, ConditionId id, const GridSpec& grid);

/// Convex, downward-closed hull of the union of per-distribution constraint
/// polygons over the grid.
RateRegion grid_region(const Channel& channel, RegionId id, const GridSpec& grid);

/// |sum_i I(Y2_{i+1..n}; Y1_i | Y1_{1..i-1}) - sum_i I(Y1_{1..i-1}; Y2_i | Y2_{i+1..n})|
/// for a joint over variables named Y1_1..Y1_n and Y2_1..Y2_n (n in {2,3}).
double csiszar_identity_check(const ProbTensor& joint, std::size_t n);

}  // namespace cogcap::oracle
