#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "cogcap/info_expr.hpp"

namespace cogcap {

enum class ConditionId { PMC, CMC, CLN, SI_primal, SI_equiv, WI, BCD };

/// Distributions a condition quantifies over: p(x1,x2) or p(u,x1,x2).
enum class Scope { inputs, auxiliary };

/// A regime condition "for every distribution in scope, each gap >= 0".
/// Conditions with several requirements carry one gap per requirement; an
/// equality requirement appears as two opposite gaps.
struct RegimeCondition {
    ConditionId id;
    Scope scope;
    std::vector<LinearInfo> gaps;
};

inline constexpr std::array<ConditionId, 7> kAllConditions = {
    ConditionId::PMC, ConditionId::CMC,     ConditionId::CLN, ConditionId::SI_primal,
    ConditionId::SI_equiv, ConditionId::WI, ConditionId::BCD,
};

std::string_view condition_name(ConditionId id);
std::optional<ConditionId> parse_condition(std::string_view name);

const RegimeCondition& regime_condition(ConditionId id);

}  // namespace cogcap
