#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "cogcap/prob_tensor.hpp"

namespace cogcap {

struct Point {
    double r1 = 0.0;
    double r2 = 0.0;

    bool operator==(const Point&) const = default;
};

/// Outcome of one weighted-sum maximization: the direction, the optimal
/// value, the optimal corner of the witness's constraint polygon and the
/// constraint bounds evaluated at the witness.
struct SupportPoint {
    double theta = 0.0;
    double mu1 = 0.0;
    double mu2 = 0.0;
    double value = 0.0;
    Point corner;
    std::vector<double> bounds;  // one per spec constraint
    ProbTensor witness;          // over (X1,X2) or (U,X1,X2)
    bool converged = true;
};

inline constexpr std::size_t kNoProvenance = std::numeric_limits<std::size_t>::max();

/// Convex, downward-closed region in the nonnegative quadrant.
///
/// `vertices` is the upper-right boundary chain from (R1max, 0) to
/// (0, R2max): R1 nonincreasing, R2 nondecreasing, turning left. The region
/// {(0,0)} is the chain [(0,0)]; a segment on the R1 axis is [(a,0),(0,0)].
struct RateRegion {
    std::vector<Point> vertices{Point{}};
    std::vector<SupportPoint> supports;
    std::vector<std::size_t> provenance;  // per vertex: index into supports or kNoProvenance

    double r1_max() const { return vertices.front().r1; }
    double r2_max() const { return vertices.back().r2; }
    bool is_zero() const { return vertices.size() == 1; }
};

/// Cleans a boundary chain: clamps rounding noise at the axes, adds the
/// axis endpoints, drops duplicate and collinear points.
std::vector<Point> normalize_chain(std::vector<Point> chain);

/// Region from a chain (normalized here) without provenance.
RateRegion region_from_chain(std::vector<Point> chain);

/// Half-plane n1*R1 + n2*R2 <= c with n1, n2 >= 0.
struct HalfPlane {
    double n1 = 0.0;
    double n2 = 0.0;
    double c = 0.0;
};

/// Boundary chain of [0,r1_max] x [0,r2_max] intersected with the half-planes.
std::vector<Point> clip_box(double r1_max, double r2_max, const std::vector<HalfPlane>& planes);

/// Description of the first violated region invariant, if any.
std::optional<std::string> invariant_violation(const RateRegion& region);

struct SubsetResult {
    bool subset = true;
    double max_violation = 0.0;  // >= 0, in bits
};

/// Whether every vertex of a satisfies b's half-plane description within tol.
/// b's half-planes are its edge normals plus the two axis bounds, scaled so
/// the largest coefficient is one.
SubsetResult region_subset(const RateRegion& a, const RateRegion& b, double tol);

/// Hausdorff distance between the regions as closed sets.
double hausdorff(const RateRegion& a, const RateRegion& b);

double area(const RateRegion& region);

/// max over the region of mu1*R1 + mu2*R2.
double support_value(const RateRegion& region, double mu1, double mu2);

}  // namespace cogcap
