#pragma once

#include <map>
#include <string>
#include <vector>

#include "cogcap/budget.hpp"
#include "cogcap/channel.hpp"
#include "cogcap/classifier.hpp"
#include "cogcap/cli/report.hpp"
#include "cogcap/rate_region.hpp"
#include "cogcap/region_spec.hpp"

namespace cogcap::cli {

enum class CheckKind { subset, equivalent };

/// One mandated relation between two computed regions. `margin` is
/// the subset violation or the Hausdorff distance, in bits.
struct RegionCheck {
    CheckKind kind;
    RegionId a;
    RegionId b;
    std::vector<ConditionId> premises;
    double margin = 0.0;
    bool pass = true;

    std::string name() const;
};

struct HierarchyResult {
    ClassificationProfile profile;
    std::map<RegionId, RateRegion> regions;
    std::vector<RegionCheck> checks;

    bool mandated_ok() const;  // every check passes and no implication alarm
};

/// Relations required by the verdicts:
///   CLN:        C_I <= C_II <= C_III <= C_IV
///   SI_primal:  C_II <= C_III <= C_IV
///   BCD:        C_III == C_III_prime, C_III_prime <= C_IV
std::vector<RegionCheck> mandated_checks(const ClassificationProfile& profile);

/// Classifies the channel, computes the regions its verdicts call for and
/// evaluates every mandated check with tolerance kTolRegion.
HierarchyResult run_hierarchy(const Channel& channel, const Budget& budget, std::size_t angles);

Json to_json(const HierarchyResult& result);

}  // namespace cogcap::cli
