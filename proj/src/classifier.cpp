#include "cogcap/classifier.hpp"

#include <algorithm>
#include <limits>

#include "cogcap/errors.hpp"
#include "cogcap/info_evaluator.hpp"
#include "cogcap/joint.hpp"
#include "cogcap/parallel.hpp"
#include "cogcap/rng.hpp"
#include "cogcap/simplex_search.hpp"

namespace cogcap {

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

std::vector<Variable> scope_variables(const Channel& channel, std::size_t aux_card, Scope scope) {
    std::vector<Variable> vars;
    if (scope == Scope::auxiliary) vars.push_back({"U", aux_card});
    vars.push_back({"X1", channel.x1_card()});
    vars.push_back({"X2", channel.x2_card()});
    return vars;
}

}  // namespace

double recompute_gap(const Channel& channel, ConditionId id, const ProbTensor& input) {
    const auto joint = attach_channel(input, channel);
    double gap = std::numeric_limits<double>::infinity();
    for (const auto& g : regime_condition(id).gaps) gap = std::min(gap, evaluate(joint, g));
    return gap;
}

ConditionReport check_condition(const Channel& channel, ConditionId id, const Budget& budget) {
    validate(budget);
    const RegimeCondition& cond = regime_condition(id);
    const std::size_t nx = channel.input_count();
    const std::size_t nu = cond.scope == Scope::auxiliary ? budget.aux_card : 1;
    if (nu > nx + 2)
        throw ArgumentError("auxiliary cardinality " + std::to_string(nu) + " exceeds |X1||X2|+2 = " +
                            std::to_string(nx + 2));
    const std::size_t threads = budget.threads ? budget.threads : default_thread_count();

    const ChannelInfoEvaluator ev(channel, nu);
    const std::size_t dim = ev.dim();
    std::vector<ChannelInfoEvaluator::Compiled> compiled;
    for (const auto& g : cond.gaps) compiled.push_back(ev.compile(g));

    const GridPlan plan = plan_grid(nu, nx, budget.grid_res, budget.max_grid_points);
    const auto grid = simplex_grid(budget.grid_res, plan.aux_card * nx, dim);
    const std::size_t points = grid.size() / dim;
    const std::size_t nc = compiled.size();

    std::vector<double> grid_values(nc * points);
    parallel_for(points, threads, [&](std::size_t k) {
        thread_local ChannelInfoEvaluator::Workspace ws;
        const std::span<const double> p(grid.data() + k * dim, dim);
        for (std::size_t c = 0; c < nc; ++c) {
            ev.evaluate(p, compiled[c].mask, ws, false);
            grid_values[c * points + k] = ChannelInfoEvaluator::combine(compiled[c], ws, {});
        }
    });

    ConditionReport rep{id, Verdict::holds, 0.0, 0, nu, ProbTensor::uniform(scope_variables(channel, nu, cond.scope)), {}};
    rep.diagnostics.grid_points = points;
    rep.diagnostics.grid_aux_card = plan.aux_card;
    rep.diagnostics.best_grid_value = std::numeric_limits<double>::infinity();

    MultistartResult best;
    bool have = false;
    for (std::size_t c = 0; c < nc; ++c) {
        const auto& comp = compiled[c];
        const SimplexObjective f = [&ev, &comp](std::span<const double> x, std::span<double> grad) {
            thread_local ChannelInfoEvaluator::Workspace ws;
            ev.evaluate(x, comp.mask, ws, !grad.empty());
            std::fill(grad.begin(), grad.end(), 0.0);
            return ChannelInfoEvaluator::combine(comp, ws, grad);
        };
        const std::span<const double> values(grid_values.data() + c * points, points);
        auto res = multistart(f, grid, values, dim, budget.restarts,
                              derive_seed(budget.seed, {static_cast<std::uint64_t>(id), c}), budget.max_iters,
                              threads);
        rep.diagnostics.restarts += res.restarts;
        rep.diagnostics.iterations += res.total_iterations;
        rep.diagnostics.best_grid_value = std::min(rep.diagnostics.best_grid_value, res.best_grid_value);
        if (!have || res.best.value < best.best.value) {
            best = std::move(res);
            rep.worst_component = c;
            have = true;
        }
    }

    rep.diagnostics.optimizer_value = best.best.value;
    rep.diagnostics.converged = best.best.converged;
    rep.witness = ProbTensor(scope_variables(channel, nu, cond.scope), best.best.x);
    rep.worst_gap = recompute_gap(channel, id, rep.witness);

    if (rep.worst_gap < -kTolClassify)
        rep.verdict = Verdict::fails;
    else if (rep.worst_gap < 0.0 && !rep.diagnostics.converged)
        rep.verdict = Verdict::inconclusive;
    else
        rep.verdict = Verdict::holds;
    return rep;
}

const ConditionReport& ClassificationProfile::report(ConditionId id) const {
    for (const auto& r : reports)
        if (r.id == id) return r;
    throw ArgumentError("no report for condition " + std::string(condition_name(id)));
}

std::vector<ImplicationAlarm> implication_alarms(const std::vector<ConditionReport>& reports) {
    auto find = [&](ConditionId id) -> const ConditionReport* {
        for (const auto& r : reports)
            if (r.id == id) return &r;
        return nullptr;
    };
    std::vector<ImplicationAlarm> alarms;
    for (const auto& [premise, conclusion] : kImplications) {
        const auto* p = find(premise);
        const auto* c = find(conclusion);
        if (!p || !c) continue;
        if (p->verdict == Verdict::holds && c->verdict == Verdict::fails) {
            alarms.push_back({premise, conclusion,
                              std::string(condition_name(premise)) + " holds but " +
                                  std::string(condition_name(conclusion)) + " fails (gap " +
                                  std::to_string(c->worst_gap) + ")"});
        }
    }
    return alarms;
}

ClassificationProfile classify(const Channel& channel, const Budget& budget) {
    ClassificationProfile profile;
    for (ConditionId id : kAllConditions) profile.reports.push_back(check_condition(channel, id, budget));
    profile.alarms = implication_alarms(profile.reports);
    return profile;
}

}  // namespace cogcap
