#pragma once

#include <string>

#include <json.hpp>

#include "cogcap/channel.hpp"
#include "cogcap/classifier.hpp"
#include "cogcap/prob_tensor.hpp"
#include "cogcap/rate_region.hpp"
#include "cogcap/regions.hpp"

namespace cogcap::cli {

using Json = nlohmann::ordered_json;

Json to_json(const ProbTensor& dist);
Json to_json(const Channel& channel);
Json to_json(const Budget& budget);
Json to_json(const ConditionReport& report);
Json to_json(const ClassificationProfile& profile);
Json to_json(RegionId id, const RateRegion& region, bool with_witnesses);
Json to_json(const ActiveConstraintReport& report);

/// Boundary vertices as CSV with columns theta,R1,R2,tight_constraints.
/// Tight constraint ids are joined with ';'.
std::string region_csv(RegionId id, const RateRegion& region);

/// Shortest round-trip decimal form of a double, as used in reports.
std::string format_double(double v);

}  // namespace cogcap::cli
