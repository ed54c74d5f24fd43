#include "cogcap/region_spec.hpp"

namespace cogcap {

namespace {

RegionSpec build(RegionId id) {
    const InfoExpr r1_u = mi({"U"}, {"Y1"});
    const InfoExpr r1_x1 = mi({"X1"}, {"Y1"});
    const InfoExpr r1_ux1 = mi({"U", "X1"}, {"Y1"});
    const InfoExpr r2_u = mi({"X2"}, {"Y2"}, {"U"});
    const InfoExpr r2_x1 = mi({"X2"}, {"Y2"}, {"X1"});
    const InfoExpr r2_ux1 = mi({"X2"}, {"Y2"}, {"U", "X1"});
    const LinearInfo split = LinearInfo(r1_ux1) + r2_ux1;
    const InfoExpr total = mi({"X1", "X2"}, {"Y2"});

    auto r1 = [](LinearInfo b) { return RateConstraint{"R1", 1.0, 0.0, std::move(b)}; };
    auto r2 = [](LinearInfo b) { return RateConstraint{"R2", 0.0, 1.0, std::move(b)}; };
    auto sum = [](std::string cid, LinearInfo b) { return RateConstraint{std::move(cid), 1.0, 1.0, std::move(b)}; };

    switch (id) {
        case RegionId::C_I:
            return {id, {r1(r1_u), r2(r2_u)}, {"U"}};
        case RegionId::C_II:
            return {id, {r1(r1_x1), r2(r2_x1)}, {}};
        case RegionId::C_III:
            return {id, {r1(r1_ux1), r2(r2_ux1)}, {"U"}};
        case RegionId::C_III_prime:
            return {id, {r1(r1_ux1), r2(r2_x1), sum("SUM_SPLIT", split)}, {"U"}};
        case RegionId::C_IV:
        case RegionId::R_o_prime:
            return {id, {r1(r1_ux1), r2(r2_ux1), sum("SUM", total)}, {"U"}};
        case RegionId::R_o:
            return {id, {r1(r1_ux1), sum("SUM_SPLIT", split), sum("SUM", total)}, {"U"}};
    }
    return {id, {}, {}};
}

}  // namespace

std::optional<std::size_t> RegionSpec::constraint_index(std::string_view cid) const {
    for (std::size_t j = 0; j < constraints.size(); ++j)
        if (constraints[j].id == cid) return j;
    return std::nullopt;
}

std::string_view region_name(RegionId id) {
    switch (id) {
        case RegionId::C_I: return "C_I";
        case RegionId::C_II: return "C_II";
        case RegionId::C_III: return "C_III";
        case RegionId::C_III_prime: return "C_III_prime";
        case RegionId::C_IV: return "C_IV";
        case RegionId::R_o: return "R_o";
        case RegionId::R_o_prime: return "R_o_prime";
    }
    return "?";
}

std::optional<RegionId> parse_region(std::string_view name) {
    for (RegionId id : kAllRegions)
        if (region_name(id) == name) return id;
    return std::nullopt;
}

const RegionSpec& region_spec(RegionId id) {
    static const std::array<RegionSpec, 7> table = [] {
        std::array<RegionSpec, 7> t;
        for (std::size_t i = 0; i < kAllRegions.size(); ++i) t[i] = build(kAllRegions[i]);
        return t;
    }();
    return table[static_cast<std::size_t>(id)];
}

}  // namespace cogcap
