#include "cogcap/cli/report.hpp"

#include <charconv>
#include <cmath>

#include "cogcap/channel_io.hpp"

namespace cogcap::cli {

std::string format_double(double v) {
    if (v == 0.0) return "0";  // folds -0
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

// Reports carry -inf for unbounded margins; JSON has no infinity.
Json number(double v) {
    if (std::isfinite(v)) return v == 0.0 ? Json(0.0) : Json(v);
    return Json(v > 0 ? "inf" : "-inf");
}

}  // namespace

Json to_json(const ProbTensor& dist) {
    Json vars = Json::array();
    for (const auto& v : dist.variables()) vars.push_back({{"name", v.name}, {"card", v.card}});
    Json values = Json::array();
    for (double x : dist.values()) values.push_back(number(x));
    return {{"variables", vars}, {"values", values}};
}

Json to_json(const Channel& channel) { return Json::parse(format_channel(channel)); }

Json to_json(const Budget& b) {
    return {{"restarts", b.restarts},     {"grid_res", b.grid_res},   {"aux_card", b.aux_card},
            {"max_iters", b.max_iters},   {"max_grid_points", b.max_grid_points}, {"seed", b.seed}};
}

Json to_json(const ConditionReport& r) {
    const auto& cond = regime_condition(r.id);
    Json gaps = Json::array();
    for (const auto& g : cond.gaps) gaps.push_back(g.label());
    const auto& d = r.diagnostics;
    return {
        {"condition", condition_name(r.id)},
        {"scope", cond.scope == Scope::inputs ? "p(x1,x2)" : "p(u,x1,x2)"},
        {"gaps", gaps},
        {"verdict", verdict_name(r.verdict)},
        {"worst_gap", number(r.worst_gap)},
        {"worst_component", r.worst_component},
        {"aux_card", r.aux_card},
        {"witness", to_json(r.witness)},
        {"diagnostics",
         {{"restarts", d.restarts},
          {"iterations", d.iterations},
          {"grid_points", d.grid_points},
          {"grid_aux_card", d.grid_aux_card},
          {"best_grid_value", number(d.best_grid_value)},
          {"optimizer_value", number(d.optimizer_value)},
          {"converged", d.converged}}},
    };
}

Json to_json(const ClassificationProfile& p) {
    Json conds = Json::array();
    for (const auto& r : p.reports) conds.push_back(to_json(r));
    Json alarms = Json::array();
    for (const auto& a : p.alarms)
        alarms.push_back(
            {{"premise", condition_name(a.premise)}, {"conclusion", condition_name(a.conclusion)}, {"message", a.message}});
    return {{"conditions", conds}, {"alarms", alarms}};
}

Json to_json(RegionId id, const RateRegion& region, bool with_witnesses) {
    const RegionSpec& spec = region_spec(id);
    Json constraints = Json::array();
    for (const auto& c : spec.constraints)
        constraints.push_back({{"id", c.id}, {"a", {c.a1, c.a2}}, {"bound", c.bound.label()}});
    Json vertices = Json::array();
    for (std::size_t v = 0; v < region.vertices.size(); ++v) {
        const Point& p = region.vertices[v];
        Json row = {{"R1", number(p.r1)}, {"R2", number(p.r2)}};
        const std::size_t pi = region.provenance.empty() ? kNoProvenance : region.provenance[v];
        if (pi != kNoProvenance) {
            const auto& s = region.supports[pi];
            row["theta"] = number(s.theta);
            row["tight_constraints"] = tight_constraints(spec, s);
            if (with_witnesses) {
                Json bounds = Json::array();
                for (double b : s.bounds) bounds.push_back(number(b));
                row["support"] = {{"value", number(s.value)},
                                  {"corner", {number(s.corner.r1), number(s.corner.r2)}},
                                  {"bounds", bounds},
                                  {"witness", to_json(s.witness)}};
            }
        }
        vertices.push_back(std::move(row));
    }
    return {{"region", region_name(id)},
            {"constraints", constraints},
            {"area", number(area(region))},
            {"vertices", vertices}};
}

Json to_json(const ActiveConstraintReport& rep) {
    Json vertices = Json::array();
    for (const auto& v : rep.vertices) {
        Json cs = Json::array();
        for (const auto& c : v.constraints)
            cs.push_back({{"id", c.id},
                          {"slack", number(c.slack)},
                          {"redundancy_margin", number(c.redundancy_margin)},
                          {"tight", c.tight},
                          {"redundant", c.redundant}});
        vertices.push_back(
            {{"R1", number(v.vertex.r1)}, {"R2", number(v.vertex.r2)}, {"theta", number(v.theta)}, {"constraints", cs}});
    }
    Json summary = Json::array();
    for (const auto& s : rep.summary)
        summary.push_back({{"id", s.id},
                           {"inactive_everywhere", s.inactive_everywhere},
                           {"min_slack", number(s.min_slack)},
                           {"min_redundancy_margin", number(s.min_redundancy_margin)}});
    return {{"region", region_name(rep.id)}, {"vertices", vertices}, {"summary", summary}};
}

std::string region_csv(RegionId id, const RateRegion& region) {
    const RegionSpec& spec = region_spec(id);
    std::string out = "theta,R1,R2,tight_constraints\n";
    for (std::size_t v = 0; v < region.vertices.size(); ++v) {
        const Point& p = region.vertices[v];
        const std::size_t pi = region.provenance.empty() ? kNoProvenance : region.provenance[v];
        std::string theta, tight;
        if (pi != kNoProvenance) {
            const auto& s = region.supports[pi];
            theta = format_double(s.theta);
            for (const auto& t : tight_constraints(spec, s)) tight += (tight.empty() ? "" : ";") + t;
        }
        out += theta + "," + format_double(p.r1) + "," + format_double(p.r2) + "," + tight + "\n";
    }
    return out;
}

}  // namespace cogcap::cli
