#include "cogcap/regions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>

#include "cogcap/errors.hpp"
#include "cogcap/info_evaluator.hpp"
#include "cogcap/joint.hpp"
#include "cogcap/parallel.hpp"
#include "cogcap/rng.hpp"
#include "cogcap/simplex_search.hpp"

namespace cogcap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kRegionTag = 0x7265676e;
constexpr int kRefineRounds = 4;
constexpr double kRefineGap = 1e-4;

enum class Kind { r1, r2, sum };

Kind kind_of(const RateConstraint& c) {
    if (c.a1 > 0.0 && c.a2 > 0.0) return Kind::sum;
    return c.a1 > 0.0 ? Kind::r1 : Kind::r2;
}

std::vector<Variable> input_variables(const Channel& channel, const RegionSpec& spec, std::size_t nu) {
    std::vector<Variable> vars;
    if (spec.has_auxiliary()) vars.push_back({"U", nu});
    vars.push_back({"X1", channel.x1_card()});
    vars.push_back({"X2", channel.x2_card()});
    return vars;
}

std::pair<double, double> direction(std::size_t k, std::size_t angles) {
    if (k == 0) return {1.0, 0.0};
    if (k + 1 == angles) return {0.0, 1.0};
    const double t = 0.5 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(angles - 1);
    return {std::cos(t), std::sin(t)};
}

double theta_of(std::size_t k, std::size_t angles) {
    return 0.5 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(angles - 1);
}

// Optimizer state shared by every direction of one region computation.
class SupportEngine {
public:
    SupportEngine(const Channel& channel, RegionId id, const Budget& budget)
        : channel_(channel),
          id_(id),
          spec_(region_spec(id)),
          budget_(budget),
          nu_(spec_.has_auxiliary() ? budget.aux_card : 1),
          ev_(channel, nu_) {
        validate(budget);
        const std::size_t nx = channel.input_count();
        if (nu_ > nx + 2)
            throw ArgumentError("auxiliary cardinality " + std::to_string(nu_) + " exceeds |X1||X2|+2 = " +
                                std::to_string(nx + 2));
        for (const auto& c : spec_.constraints) {
            compiled_.push_back(ev_.compile(c.bound));
            mask_ |= compiled_.back().mask;
        }
        const std::size_t dim = ev_.dim();
        const GridPlan plan = plan_grid(nu_, nx, budget.grid_res, budget.max_grid_points);
        grid_ = simplex_grid(budget.grid_res, plan.aux_card * nx, dim);
        points_ = grid_.size() / dim;
        const std::size_t m = compiled_.size();
        grid_bounds_.resize(points_ * m);
        parallel_for(points_, threads(), [&](std::size_t k) {
            thread_local ChannelInfoEvaluator::Workspace ws;
            ev_.evaluate(std::span<const double>(grid_.data() + k * dim, dim), mask_, ws, false);
            for (std::size_t j = 0; j < m; ++j)
                grid_bounds_[k * m + j] = ChannelInfoEvaluator::combine(compiled_[j], ws, {});
        });
    }

    std::size_t threads() const { return budget_.threads ? budget_.threads : default_thread_count(); }
    const RegionSpec& spec() const { return spec_; }

    SupportPoint maximize(double theta, double mu1, double mu2, std::size_t restarts, std::uint64_t tag,
                          std::size_t inner_threads) const {
        const std::size_t m = compiled_.size();
        const std::size_t dim = ev_.dim();
        std::vector<double> values(points_);
        for (std::size_t k = 0; k < points_; ++k) {
            const std::span<const double> b(grid_bounds_.data() + k * m, m);
            values[k] = -solve_rate_lp(spec_, b, mu1, mu2).value;
        }
        const SimplexObjective f = [&](std::span<const double> x, std::span<double> grad) {
            thread_local ChannelInfoEvaluator::Workspace ws;
            thread_local std::vector<double> bounds;
            ev_.evaluate(x, mask_, ws, !grad.empty());
            bounds.resize(m);
            for (std::size_t j = 0; j < m; ++j) bounds[j] = ChannelInfoEvaluator::combine(compiled_[j], ws, {});
            const LpSolution lp = solve_rate_lp(spec_, bounds, mu1, mu2);
            if (!grad.empty()) {
                std::fill(grad.begin(), grad.end(), 0.0);
                for (std::size_t j = 0; j < m; ++j) {
                    if (lp.dual[j] == 0.0) continue;
                    for (const auto& [t, coef] : compiled_[j].coeffs) {
                        const double w = lp.dual[j] * coef;
                        const auto& g = ws.grad[t];
                        for (std::size_t i = 0; i < dim; ++i) grad[i] -= w * g[i];
                    }
                }
            }
            return -lp.value;
        };
        const auto res = multistart(f, grid_, values, dim, restarts,
                                    derive_seed(budget_.seed, {kRegionTag, static_cast<std::uint64_t>(id_), tag}),
                                    budget_.max_iters, inner_threads);
        return make_support(theta, mu1, mu2, res.best.x, res.best.converged);
    }

    SupportPoint make_support(double theta, double mu1, double mu2, const std::vector<double>& x,
                              bool converged) const {
        ProbTensor witness(input_variables(channel_, spec_, nu_), x);
        auto bounds = constraint_bounds(channel_, spec_, witness);
        const LpSolution lp = solve_rate_lp(spec_, bounds, mu1, mu2);
        return SupportPoint{theta, mu1, mu2, lp.value, lp.corner, std::move(bounds), std::move(witness), converged};
    }

private:
    const Channel& channel_;
    RegionId id_;
    const RegionSpec& spec_;
    Budget budget_;
    std::size_t nu_;
    ChannelInfoEvaluator ev_;
    std::vector<ChannelInfoEvaluator::Compiled> compiled_;
    std::uint32_t mask_ = 0;
    std::vector<double> grid_;
    std::size_t points_ = 0;
    std::vector<double> grid_bounds_;
};

}  // namespace

LpSolution solve_rate_lp(const RegionSpec& spec, std::span<const double> bounds, double mu1, double mu2,
                         std::optional<std::size_t> skip) {
    if (bounds.size() != spec.constraints.size()) throw DimensionError("solve_rate_lp: bound count mismatch");
    double lim[3] = {kInf, kInf, kInf};
    std::size_t arg[3] = {0, 0, 0};
    for (std::size_t j = 0; j < bounds.size(); ++j) {
        if (skip && *skip == j) continue;
        const auto k = static_cast<std::size_t>(kind_of(spec.constraints[j]));
        const double v = std::max(bounds[j], 0.0);
        if (v < lim[k]) {
            lim[k] = v;
            arg[k] = j;
        }
    }
    const double a = lim[0], b = lim[1], s = lim[2];
    LpSolution out;
    out.dual.assign(bounds.size(), 0.0);
    double da = 0.0, db = 0.0, ds = 0.0;
    double r1 = 0.0, r2 = 0.0;
    // Fill the coordinate with the larger weight first, then the other one.
    if (mu1 >= mu2) {
        if (a <= s) {
            r1 = a;
            if (b <= s - a) {
                r2 = b;
                da = mu1;
                db = mu2;
            } else {
                r2 = s - a;
                da = mu1 - mu2;
                ds = mu2;
            }
        } else {
            r1 = s;
            r2 = 0.0;
            ds = mu1;
        }
    } else {
        if (b <= s) {
            r2 = b;
            if (a <= s - b) {
                r1 = a;
                da = mu1;
                db = mu2;
            } else {
                r1 = s - b;
                db = mu2 - mu1;
                ds = mu1;
            }
        } else {
            r2 = s;
            r1 = 0.0;
            ds = mu2;
        }
    }
    if (!std::isfinite(r1) || !std::isfinite(r2)) {
        // Unbounded only along a coordinate with positive weight.
        const bool bounded = (!std::isfinite(r1) ? mu1 == 0.0 : true) && (!std::isfinite(r2) ? mu2 == 0.0 : true);
        if (!bounded) {
            out.value = kInf;
            out.corner = {r1, r2};
            return out;
        }
    }
    out.corner = {r1, r2};
    out.value = (mu1 == 0.0 ? 0.0 : mu1 * r1) + (mu2 == 0.0 ? 0.0 : mu2 * r2);
    if (std::isfinite(a) && da != 0.0) out.dual[arg[0]] = da;
    if (std::isfinite(b) && db != 0.0) out.dual[arg[1]] = db;
    if (std::isfinite(s) && ds != 0.0) out.dual[arg[2]] = ds;
    return out;
}

std::vector<double> constraint_bounds(const Channel& channel, const RegionSpec& spec, const ProbTensor& input) {
    const auto joint = attach_channel(input, channel);
    std::vector<double> out;
    for (const auto& c : spec.constraints) out.push_back(evaluate(joint, c.bound));
    return out;
}

namespace {

// Every witness is feasible for every direction, so each direction keeps the
// best witness found anywhere. Result is ordered by angle.
std::vector<SupportPoint> polish(const RegionSpec& spec, const std::vector<SupportPoint>& found) {
    std::vector<std::size_t> order(found.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return found[i].theta < found[j].theta; });
    std::vector<SupportPoint> out;
    out.reserve(found.size());
    for (std::size_t k : order) {
        const SupportPoint& own = found[k];
        std::size_t best = k;
        double best_value = own.value;
        for (std::size_t j = 0; j < found.size(); ++j) {
            if (j == k) continue;
            const double v = solve_rate_lp(spec, found[j].bounds, own.mu1, own.mu2).value;
            if (v > best_value) {
                best_value = v;
                best = j;
            }
        }
        if (best == k) {
            out.push_back(own);
        } else {
            const SupportPoint& donor = found[best];
            const LpSolution lp = solve_rate_lp(spec, donor.bounds, own.mu1, own.mu2);
            out.push_back(
                SupportPoint{own.theta, own.mu1, own.mu2, lp.value, lp.corner, donor.bounds, donor.witness, donor.converged});
        }
    }
    return out;
}

}  // namespace

SupportPoint weighted_sum_max(const Channel& channel, RegionId id, double mu1, double mu2, const Budget& budget) {
    if (!(mu1 >= 0.0 && mu2 >= 0.0) || (mu1 == 0.0 && mu2 == 0.0) || !std::isfinite(mu1) || !std::isfinite(mu2))
        throw ArgumentError("weights must be nonnegative, finite and not both zero");
    const SupportEngine engine(channel, id, budget);
    return engine.maximize(std::atan2(mu2, mu1), mu1, mu2, budget.restarts, 0, engine.threads());
}

RateRegion compute_region(const Channel& channel, RegionId id, std::size_t angles, const Budget& budget) {
    if (angles < 3) throw ArgumentError("angular resolution must be >= 3");
    const SupportEngine engine(channel, id, budget);
    const RegionSpec& spec = engine.spec();
    const std::size_t restarts = std::max<std::size_t>(2, budget.restarts / 4);

    std::vector<std::optional<SupportPoint>> found(angles);
    parallel_for(angles, engine.threads(), [&](std::size_t k) {
        const auto [mu1, mu2] = direction(k, angles);
        found[k] = engine.maximize(theta_of(k, angles), mu1, mu2, restarts, k + 1, 1);
    });
    std::vector<SupportPoint> raw;
    for (auto& f : found) raw.push_back(std::move(*f));

    // Where the two supporting lines of neighbouring directions meet far from
    // the chord between their corners, the facet normal lies between them.
    // Probe that normal directly; the sweep alone overshoots polygonal facets.
    std::uint64_t next_tag = angles + 1;
    for (int round = 0; round < kRefineRounds; ++round) {
        const auto polished = polish(spec, raw);
        std::vector<std::array<double, 3>> probes;
        for (std::size_t i = 0; i + 1 < polished.size(); ++i) {
            const SupportPoint& a = polished[i];
            const SupportPoint& b = polished[i + 1];
            const double n1 = b.corner.r2 - a.corner.r2;
            const double n2 = a.corner.r1 - b.corner.r1;
            const double len = std::hypot(n1, n2);
            if (len <= 1e-9 || n1 < 0.0 || n2 < 0.0) continue;
            const double theta = std::atan2(n2, n1);
            if (!(theta > a.theta + 1e-12 && theta < b.theta - 1e-12)) continue;
            const double det = a.mu1 * b.mu2 - a.mu2 * b.mu1;
            if (std::abs(det) <= 1e-15) continue;
            const double x = (a.value * b.mu2 - a.mu2 * b.value) / det;
            const double y = (a.mu1 * b.value - a.value * b.mu1) / det;
            const double overshoot = (n1 * (x - a.corner.r1) + n2 * (y - a.corner.r2)) / len;
            if (overshoot > kRefineGap) probes.push_back({theta, n1 / len, n2 / len});
        }
        if (probes.empty()) break;
        std::vector<std::optional<SupportPoint>> extra(probes.size());
        parallel_for(probes.size(), engine.threads(), [&](std::size_t k) {
            const auto& [theta, mu1, mu2] = probes[k];
            extra[k] = engine.maximize(theta, mu1, mu2, restarts, next_tag + k, 1);
        });
        next_tag += probes.size();
        for (auto& e : extra) raw.push_back(std::move(*e));
    }

    RateRegion region;
    region.supports = polish(spec, raw);

    std::vector<HalfPlane> planes;
    for (const auto& s : region.supports) planes.push_back({s.mu1, s.mu2, s.value});
    region.vertices = clip_box(region.supports.front().value, region.supports.back().value, planes);

    region.provenance.clear();
    for (const Point& v : region.vertices) {
        std::size_t best = 0;
        double best_key = kInf;
        bool best_tight = false;
        for (std::size_t k = 0; k < region.supports.size(); ++k) {
            const auto& s = region.supports[k];
            const double slack = s.value - (s.mu1 * v.r1 + s.mu2 * v.r2);
            const bool tight = std::abs(slack) <= 1e-9 * std::max(1.0, s.value);
            const double d = std::hypot(s.corner.r1 - v.r1, s.corner.r2 - v.r2);
            const double key = tight ? d : std::abs(slack);
            if ((tight && !best_tight) || (tight == best_tight && key < best_key)) {
                best = k;
                best_key = key;
                best_tight = tight;
            }
        }
        region.provenance.push_back(best);
    }
    if (auto bad = invariant_violation(region)) throw std::logic_error("compute_region: " + *bad);
    return region;
}

std::vector<std::string> tight_constraints(const RegionSpec& spec, const SupportPoint& support) {
    std::vector<std::string> out;
    for (std::size_t j = 0; j < spec.constraints.size(); ++j) {
        const auto& c = spec.constraints[j];
        const double slack = support.bounds[j] - (c.a1 * support.corner.r1 + c.a2 * support.corner.r2);
        if (std::abs(slack) <= kTightTol) out.push_back(c.id);
    }
    return out;
}

ActiveConstraintReport analyze_constraints(RegionId id, const RateRegion& region) {
    const RegionSpec& spec = region_spec(id);
    if (spec.constraints.size() < 2) throw ArgumentError("active_constraints needs at least two constraints");
    ActiveConstraintReport rep{id, region, {}, {}};
    for (const auto& c : spec.constraints) rep.summary.push_back({c.id, true, kInf, kInf});

    for (std::size_t v = 0; v < region.vertices.size(); ++v) {
        const std::size_t pi = region.provenance.empty() ? kNoProvenance : region.provenance[v];
        if (pi == kNoProvenance) throw ArgumentError("region has no witness provenance");
        const SupportPoint& s = region.supports[pi];
        VertexConstraints vc{region.vertices[v], s.theta, {}};
        for (std::size_t j = 0; j < spec.constraints.size(); ++j) {
            const auto& c = spec.constraints[j];
            ConstraintStatus st;
            st.id = c.id;
            st.slack = s.bounds[j] - (c.a1 * s.corner.r1 + c.a2 * s.corner.r2);
            st.tight = std::abs(st.slack) <= kTightTol;
            const double reach = solve_rate_lp(spec, s.bounds, c.a1, c.a2, j).value;
            st.redundancy_margin = std::isfinite(reach) ? std::max(s.bounds[j], 0.0) - reach : -kInf;
            st.redundant = st.redundancy_margin >= -kTightTol;
            auto& sum = rep.summary[j];
            sum.inactive_everywhere = sum.inactive_everywhere && st.redundant;
            sum.min_slack = std::min(sum.min_slack, st.slack);
            sum.min_redundancy_margin = std::min(sum.min_redundancy_margin, st.redundancy_margin);
            vc.constraints.push_back(std::move(st));
        }
        rep.vertices.push_back(std::move(vc));
    }
    return rep;
}

ActiveConstraintReport active_constraints(const Channel& channel, RegionId id, std::size_t angles,
                                          const Budget& budget) {
    return analyze_constraints(id, compute_region(channel, id, angles, budget));
}

}  // namespace cogcap
