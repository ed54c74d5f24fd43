#include "cogcap/cli/hierarchy.hpp"

#include <algorithm>

#include "cogcap/regions.hpp"

namespace cogcap::cli {

std::string RegionCheck::name() const {
    return std::string(region_name(a)) + (kind == CheckKind::subset ? " <= " : " == ") + std::string(region_name(b));
}

bool HierarchyResult::mandated_ok() const {
    if (!profile.alarms.empty()) return false;
    return std::all_of(checks.begin(), checks.end(), [](const RegionCheck& c) { return c.pass; });
}

std::vector<RegionCheck> mandated_checks(const ClassificationProfile& profile) {
    std::vector<RegionCheck> checks;
    auto add = [&](CheckKind kind, RegionId a, RegionId b, ConditionId premise) {
        for (auto& c : checks) {
            if (c.kind == kind && c.a == a && c.b == b) {
                c.premises.push_back(premise);
                return;
            }
        }
        checks.push_back({kind, a, b, {premise}});
    };
    if (profile.holds(ConditionId::CLN)) {
        add(CheckKind::subset, RegionId::C_I, RegionId::C_II, ConditionId::CLN);
        add(CheckKind::subset, RegionId::C_II, RegionId::C_III, ConditionId::CLN);
        add(CheckKind::subset, RegionId::C_III, RegionId::C_IV, ConditionId::CLN);
    }
    if (profile.holds(ConditionId::SI_primal)) {
        add(CheckKind::subset, RegionId::C_II, RegionId::C_III, ConditionId::SI_primal);
        add(CheckKind::subset, RegionId::C_III, RegionId::C_IV, ConditionId::SI_primal);
    }
    if (profile.holds(ConditionId::BCD)) {
        add(CheckKind::equivalent, RegionId::C_III, RegionId::C_III_prime, ConditionId::BCD);
        add(CheckKind::subset, RegionId::C_III_prime, RegionId::C_IV, ConditionId::BCD);
    }
    return checks;
}

HierarchyResult run_hierarchy(const Channel& channel, const Budget& budget, std::size_t angles) {
    HierarchyResult res;
    res.profile = classify(channel, budget);
    res.checks = mandated_checks(res.profile);
    for (const auto& c : res.checks) {
        for (RegionId id : {c.a, c.b})
            if (!res.regions.count(id)) res.regions.emplace(id, compute_region(channel, id, angles, budget));
    }
    for (auto& c : res.checks) {
        const RateRegion& a = res.regions.at(c.a);
        const RateRegion& b = res.regions.at(c.b);
        if (c.kind == CheckKind::subset) {
            const auto s = region_subset(a, b, kTolRegion);
            c.margin = s.max_violation;
            c.pass = s.subset;
        } else {
            c.margin = hausdorff(a, b);
            c.pass = c.margin <= kTolRegion;
        }
    }
    return res;
}

Json to_json(const HierarchyResult& r) {
    Json verdicts = Json::object();
    for (const auto& rep : r.profile.reports)
        verdicts[std::string(condition_name(rep.id))] = {{"verdict", verdict_name(rep.verdict)},
                                                         {"worst_gap", rep.worst_gap == 0.0 ? 0.0 : rep.worst_gap}};
    Json alarms = Json::array();
    for (const auto& a : r.profile.alarms) alarms.push_back(a.message);

    Json regions = Json::object();
    for (const auto& [id, region] : r.regions) {
        Json verts = Json::array();
        for (const auto& v : region.vertices) verts.push_back({v.r1 == 0.0 ? 0.0 : v.r1, v.r2 == 0.0 ? 0.0 : v.r2});
        regions[std::string(region_name(id))] = {{"area", area(region)}, {"vertices", verts}};
    }
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json premises = Json::array();
        for (auto p : c.premises) premises.push_back(condition_name(p));
        checks.push_back({{"check", c.name()},
                          {"premises", premises},
                          {c.kind == CheckKind::subset ? "max_violation" : "hausdorff", c.margin},
                          {"tolerance", kTolRegion},
                          {"pass", c.pass}});
    }
    // Pairwise distances between every computed region, for reference only.
    Json distances = Json::array();
    for (auto i = r.regions.begin(); i != r.regions.end(); ++i)
        for (auto j = std::next(i); j != r.regions.end(); ++j)
            distances.push_back({{"pair", {region_name(i->first), region_name(j->first)}},
                                 {"hausdorff", hausdorff(i->second, j->second)}});

    return {{"verdicts", verdicts},
            {"alarms", alarms},
            {"regions", regions},
            {"checks", checks},
            {"pairwise_hausdorff", distances},
            {"mandated_ok", r.mandated_ok()}};
}

}  // namespace cogcap::cli
