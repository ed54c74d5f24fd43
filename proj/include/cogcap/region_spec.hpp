#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cogcap/info_expr.hpp"

namespace cogcap {

enum class RegionId { C_I, C_II, C_III, C_III_prime, C_IV, R_o, R_o_prime };

inline constexpr std::array<RegionId, 7> kAllRegions = {
    RegionId::C_I,  RegionId::C_II, RegionId::C_III,    RegionId::C_III_prime,
    RegionId::C_IV, RegionId::R_o,  RegionId::R_o_prime,
};

/// a1*R1 + a2*R2 <= bound. Coefficient pairs are (1,0), (0,1) or (1,1).
struct RateConstraint {
    std::string id;  // "R1", "R2", "SUM_SPLIT" or "SUM"
    double a1 = 0.0;
    double a2 = 0.0;
    LinearInfo bound;
};

/// A region as the union over input distributions of a constraint polygon.
/// The auxiliary, when present, is spelled "U" in every bound.
struct RegionSpec {
    RegionId id;
    std::vector<RateConstraint> constraints;
    std::vector<std::string> auxiliaries;  // empty or {"U"}

    bool has_auxiliary() const { return !auxiliaries.empty(); }
    std::optional<std::size_t> constraint_index(std::string_view cid) const;
};

std::string_view region_name(RegionId id);
std::optional<RegionId> parse_region(std::string_view name);

const RegionSpec& region_spec(RegionId id);

}  // namespace cogcap
