#include "cogcap/conditions.hpp"

namespace cogcap {

namespace {

RegimeCondition build(ConditionId id) {
    const LinearInfo cmc = mi({"X1", "X2"}, {"Y2"}) - mi({"X1", "X2"}, {"Y1"});
    const LinearInfo d = mi({"U"}, {"Y2"}, {"X1"}) - mi({"U"}, {"Y1"}, {"X1"});
    const LinearInfo x1_gap = mi({"X1"}, {"Y2"}) - mi({"X1"}, {"Y1"});
    switch (id) {
        case ConditionId::PMC:
            return {id, Scope::inputs, {-cmc}};
        case ConditionId::CMC:
            return {id, Scope::inputs, {cmc}};
        case ConditionId::CLN:
            return {id, Scope::auxiliary, {mi({"U"}, {"Y2"}) - mi({"U"}, {"Y1"})}};
        case ConditionId::SI_primal:
            return {id, Scope::inputs, {mi({"X2"}, {"Y1"}, {"X1"}) - mi({"X2"}, {"Y2"}, {"X1"}), cmc}};
        case ConditionId::SI_equiv:
            return {id, Scope::auxiliary, {d, -d, x1_gap}};
        case ConditionId::WI:
            return {id, Scope::auxiliary, {x1_gap, d}};
        case ConditionId::BCD:
            return {id, Scope::auxiliary, {mi({"U", "X1"}, {"Y2"}) - mi({"U", "X1"}, {"Y1"})}};
    }
    return {id, Scope::inputs, {}};
}

}  // namespace

std::string_view condition_name(ConditionId id) {
    switch (id) {
        case ConditionId::PMC: return "PMC";
        case ConditionId::CMC: return "CMC";
        case ConditionId::CLN: return "CLN";
        case ConditionId::SI_primal: return "SI_primal";
        case ConditionId::SI_equiv: return "SI_equiv";
        case ConditionId::WI: return "WI";
        case ConditionId::BCD: return "BCD";
    }
    return "?";
}

std::optional<ConditionId> parse_condition(std::string_view name) {
    for (ConditionId id : kAllConditions)
        if (condition_name(id) == name) return id;
    return std::nullopt;
}

const RegimeCondition& regime_condition(ConditionId id) {
    static const std::array<RegimeCondition, 7> table = [] {
        std::array<RegimeCondition, 7> t;
        for (std::size_t i = 0; i < kAllConditions.size(); ++i) t[i] = build(kAllConditions[i]);
        return t;
    }();
    return table[static_cast<std::size_t>(id)];
}

}  // namespace cogcap
