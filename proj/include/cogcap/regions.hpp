#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cogcap/budget.hpp"
#include "cogcap/channel.hpp"
#include "cogcap/rate_region.hpp"
#include "cogcap/region_spec.hpp"

namespace cogcap {

inline constexpr std::size_t kDefaultAngles = 64;

/// max mu1*R1 + mu2*R2 over {R >= 0, a_j . R <= bound_j}, solved in closed
/// form. `dual[j]` is the derivative of the value in bound_j. Constraint
/// `skip`, when given, is left out. Returns an infinite value when the
/// polygon is unbounded in the direction.
struct LpSolution {
    double value = 0.0;
    Point corner;
    std::vector<double> dual;
};
LpSolution solve_rate_lp(const RegionSpec& spec, std::span<const double> bounds, double mu1, double mu2,
                         std::optional<std::size_t> skip = std::nullopt);

/// Constraint bounds at an input distribution, evaluated through prob_core.
std::vector<double> constraint_bounds(const Channel& channel, const RegionSpec& spec, const ProbTensor& input);

/// Support function of the region in direction (mu1, mu2) with its witness.
SupportPoint weighted_sum_max(const Channel& channel, RegionId id, double mu1, double mu2, const Budget& budget);

/// Intersection of the supporting half-planes for mu = (cos t, sin t),
/// t = (pi/2) k / (angles - 1), k = 0..angles-1. Every vertex records the
/// support point it came from.
RateRegion compute_region(const Channel& channel, RegionId id, std::size_t angles, const Budget& budget);

struct ConstraintStatus {
    std::string id;
    double slack = 0.0;              // bound minus a.R at the support corner
    double redundancy_margin = 0.0;  // bound minus max a.R without this constraint
    bool tight = false;              // |slack| <= kTightTol
    bool redundant = false;          // redundancy_margin >= -kTightTol
};

struct VertexConstraints {
    Point vertex;
    double theta = 0.0;
    std::vector<ConstraintStatus> constraints;
};

struct ConstraintSummary {
    std::string id;
    bool inactive_everywhere = true;  // redundant at every vertex witness
    double min_slack = 0.0;
    double min_redundancy_margin = 0.0;
};

struct ActiveConstraintReport {
    RegionId id;
    RateRegion region;
    std::vector<VertexConstraints> vertices;
    std::vector<ConstraintSummary> summary;
};

/// Constraint status at every vertex witness of an already computed region.
ActiveConstraintReport analyze_constraints(RegionId id, const RateRegion& region);

ActiveConstraintReport active_constraints(const Channel& channel, RegionId id, std::size_t angles,
                                          const Budget& budget);

/// Ids of constraints tight at a support point.
std::vector<std::string> tight_constraints(const RegionSpec& spec, const SupportPoint& support);

}  // namespace cogcap
