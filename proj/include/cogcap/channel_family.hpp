#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cogcap/channel.hpp"

namespace cogcap {

enum class FamilyId {
    identical_outputs,      // Y1 = Y2 = BSC_f(X1 xor X2)
    degraded_cognitive,     // Y2 = BSC_a(X1 xor X2), Y1 = BSC_b(Y2)
    null_primary_output,    // Y1 uniform and independent, Y2 = BSC_f(X1 xor X2)
    null_cognitive_output,  // Y1 = BSC_f(X1), Y2 uniform and independent
    random,                 // Dirichlet(1) rows, binary alphabets
};

std::string_view family_name(FamilyId id);
std::optional<FamilyId> parse_family(std::string_view name);

/// Family id plus its noise parameters. Missing parameters take the family
/// defaults (identical_outputs: 0; degraded_cognitive: 0.1, 0.2;
/// null_primary_output: 0; null_cognitive_output: 0). Every noise level must
/// lie in [0, 0.5]. The seed is only used by the random family.
struct ChannelFamily {
    FamilyId id = FamilyId::random;
    std::vector<double> noise;
    std::uint64_t seed = 0;
};

Channel make_family(const ChannelFamily& spec);

/// Rows drawn from a symmetric Dirichlet(1) over the (y1,y2) simplex.
Channel random_channel(std::uint64_t seed, ChannelSizes sizes = {});

/// Y1 = X1 and Y2 = (X1,X2) without noise; y2 has four symbols.
Channel noiseless_product_channel();

/// Y1 = X1 and Y2 = X2 without noise, binary.
Channel noiseless_pair_channel();

/// Both outputs uniform and independent of the inputs.
Channel zero_capacity_channel(ChannelSizes sizes = {});

/// True when p(y1,y2|x1,x2) = p(y2|x1,x2) q(y1|y2) for some q, to within tol.
bool is_degraded_cognitive(const Channel& channel, double tol = 1e-12);

}  // namespace cogcap
