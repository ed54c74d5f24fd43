#include "cogcap/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "cogcap/errors.hpp"
#include "cogcap/joint.hpp"

namespace cogcap::oracle {

namespace {

std::vector<Variable> scope_variables(const Channel& channel, bool with_aux, std::size_t aux_card) {
    std::vector<Variable> vars;
    if (with_aux) vars.push_back({"U", aux_card});
    vars.push_back({"X1", channel.x1_card()});
    vars.push_back({"X2", channel.x2_card()});
    return vars;
}

// Calls visit(p) for every composition of `resolution` into `parts` cells,
// scaled to probabilities.
void enumerate(std::size_t resolution, std::size_t parts, const std::function<void(const std::vector<double>&)>& visit) {
    std::vector<std::size_t> counts(parts, 0);
    std::vector<double> p(parts, 0.0);
    const double scale = 1.0 / static_cast<double>(resolution);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
        if (i + 1 == parts) {
            counts[i] = left;
            for (std::size_t j = 0; j < parts; ++j) p[j] = static_cast<double>(counts[j]) * scale;
            visit(p);
            return;
        }
        for (std::size_t c = 0; c <= left; ++c) {
            counts[i] = c;
            rec(i + 1, left - c);
        }
    };
    rec(0, resolution);
}

std::size_t preflight(const GridSpec& grid, std::size_t parts) {
    if (grid.resolution < 2) throw ArgumentError("grid resolution must be >= 2");
    const std::size_t n = grid_point_count(grid.resolution, parts);
    if (n > kMaxGridPoints)
        throw BudgetError("grid of resolution " + std::to_string(grid.resolution) + " over " + std::to_string(parts) +
                          " coordinates has " + (n == std::numeric_limits<std::size_t>::max() ? std::string("more than 2^63")
                                                                                                 : std::to_string(n)) +
                          " points; limit is " + std::to_string(kMaxGridPoints));
    return n;
}

// Upper-right boundary of the convex hull of pts, their axis projections
// and the origin, from (R1max, 0) to (0, R2max).
std::vector<Point> downward_hull(std::vector<Point> pts) {
    const std::size_t n0 = pts.size();
    for (std::size_t i = 0; i < n0; ++i) {
        pts.push_back({pts[i].r1, 0.0});
        pts.push_back({0.0, pts[i].r2});
    }
    pts.push_back({0.0, 0.0});
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.r1 < b.r1 || (a.r1 == b.r1 && a.r2 < b.r2);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() == 1) return {Point{}};
    auto cross = [](const Point& o, const Point& a, const Point& b) {
        return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
    };
    // Upper hull from the origin over (0, R2max) to the rightmost top point.
    std::vector<Point> upper;
    for (const Point& p : pts) {
        while (upper.size() >= 2 && cross(upper[upper.size() - 2], upper.back(), p) >= 0.0) upper.pop_back();
        upper.push_back(p);
    }
    std::vector<Point> chain;
    for (auto it = upper.rbegin(); it != upper.rend(); ++it)
        if (!(it->r1 == 0.0 && it->r2 == 0.0)) chain.push_back(*it);
    return chain;
}

}  // namespace

std::size_t grid_point_count(std::size_t resolution, std::size_t parts) {
    if (parts == 0) return 0;
    long double c = 1.0L;
    const std::size_t k = parts - 1;
    for (std::size_t i = 1; i <= k; ++i) {
        c = c * static_cast<long double>(resolution + i) / static_cast<long double>(i);
        if (c > 9.0e18L) return std::numeric_limits<std::size_t>::max();
    }
    return static_cast<std::size_t>(std::llround(c));
}

GridMinimum grid_min_gap(const Channel& channel, ConditionId id, const GridSpec& grid) {
    const RegimeCondition& cond = regime_condition(id);
    const bool with_aux = cond.scope == Scope::auxiliary;
    const auto vars = scope_variables(channel, with_aux, with_aux ? grid.aux_card : 1);
    std::size_t parts = 1;
    for (const auto& v : vars) parts *= v.card;
    const std::size_t n = preflight(grid, parts);

    double best = std::numeric_limits<double>::infinity();
    std::vector<double> best_p;
    enumerate(grid.resolution, parts, [&](const std::vector<double>& p) {
        const auto joint = attach_channel(ProbTensor(vars, p), channel);
        double gap = std::numeric_limits<double>::infinity();
        for (const auto& g : cond.gaps) gap = std::min(gap, evaluate(joint, g));
        if (gap < best) {
            best = gap;
            best_p = p;
        }
    });
    return {best, ProbTensor(vars, best_p), n};
}

RateRegion grid_region(const Channel& channel, RegionId id, const GridSpec& grid) {
    const RegionSpec& spec = region_spec(id);
    const auto vars = scope_variables(channel, spec.has_auxiliary(), spec.has_auxiliary() ? grid.aux_card : 1);
    std::size_t parts = 1;
    for (const auto& v : vars) parts *= v.card;
    preflight(grid, parts);

    const double inf = std::numeric_limits<double>::infinity();
    std::vector<Point> corners;
    enumerate(grid.resolution, parts, [&](const std::vector<double>& p) {
        const auto joint = attach_channel(ProbTensor(vars, p), channel);
        double a = inf, b = inf, s = inf;
        for (const auto& c : spec.constraints) {
            const double v = std::max(evaluate(joint, c.bound), 0.0);
            if (c.a1 > 0.0 && c.a2 > 0.0)
                s = std::min(s, v);
            else if (c.a1 > 0.0)
                a = std::min(a, v);
            else
                b = std::min(b, v);
        }
        // Corners of {0 <= R1 <= a, 0 <= R2 <= b, R1 + R2 <= s}.
        const double r1_top = std::min(a, s);
        const double r2_top = std::min(b, s);
        corners.push_back({r1_top, std::min(b, s - r1_top)});
        corners.push_back({std::min(a, s - r2_top), r2_top});
    });
    return region_from_chain(downward_hull(std::move(corners)));
}

double csiszar_identity_check(const ProbTensor& joint, std::size_t n) {
    if (n < 2 || n > 3) throw ArgumentError("csiszar_identity_check: n must be 2 or 3");
    auto y1 = [](std::size_t i) { return "Y1_" + std::to_string(i); };
    auto y2 = [](std::size_t i) { return "Y2_" + std::to_string(i); };
    auto range = [](auto name, std::size_t lo, std::size_t hi) {
        std::vector<std::string> out;
        for (std::size_t i = lo; i <= hi; ++i) out.push_back(name(i));
        return out;
    };
    auto cmi = [&](std::vector<std::string> a, std::vector<std::string> b, std::vector<std::string> c) {
        if (a.empty() || b.empty()) return 0.0;
        if (c.empty()) return mutual_information(joint, VarGroup(std::move(a)), VarGroup(std::move(b)));
        return mutual_information(joint, VarGroup(std::move(a)), VarGroup(std::move(b)), VarGroup(std::move(c)));
    };
    double lhs = 0.0, rhs = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        lhs += cmi(range(y2, i + 1, n), {y1(i)}, range(y1, 1, i - 1));
        rhs += cmi(range(y1, 1, i - 1), {y2(i)}, range(y2, i + 1, n));
    }
    return std::abs(lhs - rhs);
}

}  // namespace cogcap::oracle
