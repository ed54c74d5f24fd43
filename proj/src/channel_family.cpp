#include "cogcap/channel_family.hpp"

#include <array>
#include <cmath>

#include "cogcap/errors.hpp"
#include "cogcap/rng.hpp"

namespace cogcap {

namespace {

constexpr std::array<std::pair<FamilyId, std::string_view>, 5> kNames{{
    {FamilyId::identical_outputs, "identical_outputs"},
    {FamilyId::degraded_cognitive, "degraded_cognitive"},
    {FamilyId::null_primary_output, "null_primary_output"},
    {FamilyId::null_cognitive_output, "null_cognitive_output"},
    {FamilyId::random, "random"},
}};

double bsc(std::size_t in, std::size_t out, double flip) { return in == out ? 1.0 - flip : flip; }

std::vector<double> noise_with_defaults(const ChannelFamily& spec, std::vector<double> defaults) {
    if (spec.noise.size() > defaults.size()) {
        throw ArgumentError("family '" + std::string(family_name(spec.id)) + "' takes at most " +
                            std::to_string(defaults.size()) + " noise parameter(s)");
    }
    for (std::size_t i = 0; i < spec.noise.size(); ++i) defaults[i] = spec.noise[i];
    for (double v : defaults) {
        if (!(v >= 0.0 && v <= 0.5))
            throw ArgumentError("noise level " + std::to_string(v) + " outside [0, 0.5]");
    }
    return defaults;
}

}  // namespace

std::string_view family_name(FamilyId id) {
    for (const auto& [fid, name] : kNames)
        if (fid == id) return name;
    return "unknown";
}

std::optional<FamilyId> parse_family(std::string_view name) {
    for (const auto& [fid, n] : kNames)
        if (n == name) return fid;
    return std::nullopt;
}

Channel make_family(const ChannelFamily& spec) {
    const ChannelSizes bin{2, 2, 2, 2};
    switch (spec.id) {
        case FamilyId::identical_outputs: {
            const double f = noise_with_defaults(spec, {0.0})[0];
            return Channel::from_function(bin, [&](auto x1, auto x2, auto y1, auto y2) {
                return y1 == y2 ? bsc(x1 ^ x2, y1, f) : 0.0;
            });
        }
        case FamilyId::degraded_cognitive: {
            const auto n = noise_with_defaults(spec, {0.1, 0.2});
            return Channel::from_function(bin, [&](auto x1, auto x2, auto y1, auto y2) {
                return bsc(x1 ^ x2, y2, n[0]) * bsc(y2, y1, n[1]);
            });
        }
        case FamilyId::null_primary_output: {
            const double f = noise_with_defaults(spec, {0.0})[0];
            return Channel::from_function(bin, [&](auto x1, auto x2, auto, auto y2) {
                return 0.5 * bsc(x1 ^ x2, y2, f);
            });
        }
        case FamilyId::null_cognitive_output: {
            const double f = noise_with_defaults(spec, {0.0})[0];
            return Channel::from_function(bin, [&](auto x1, auto, auto y1, auto) {
                return 0.5 * bsc(x1, y1, f);
            });
        }
        case FamilyId::random:
            noise_with_defaults(spec, {});
            return random_channel(spec.seed, bin);
    }
    throw ArgumentError("unknown channel family");
}

Channel random_channel(std::uint64_t seed, ChannelSizes sizes) {
    if (sizes.x1 < 1 || sizes.x2 < 1 || sizes.y1 < 1 || sizes.y2 < 1)
        throw DimensionError("random_channel: sizes must be >= 1");
    Rng rng(derive_seed(seed, {0x72616e64ULL}));
    const std::size_t row_len = sizes.y1 * sizes.y2;
    std::vector<double> rows;
    rows.reserve(sizes.x1 * sizes.x2 * row_len);
    for (std::size_t r = 0; r < sizes.x1 * sizes.x2; ++r) {
        const auto row = rng.dirichlet1(row_len);
        rows.insert(rows.end(), row.begin(), row.end());
    }
    return Channel(sizes, std::move(rows));
}

Channel noiseless_product_channel() {
    return Channel::from_function({2, 2, 2, 4}, [](auto x1, auto x2, auto y1, auto y2) {
        return (y1 == x1 && y2 == 2 * x1 + x2) ? 1.0 : 0.0;
    });
}

Channel noiseless_pair_channel() {
    return Channel::from_function({2, 2, 2, 2}, [](auto x1, auto x2, auto y1, auto y2) {
        return (y1 == x1 && y2 == x2) ? 1.0 : 0.0;
    });
}

Channel zero_capacity_channel(ChannelSizes sizes) {
    const double mass = 1.0 / static_cast<double>(sizes.y1 * sizes.y2);
    return Channel::from_function(sizes, [&](auto, auto, auto, auto) { return mass; });
}

bool is_degraded_cognitive(const Channel& channel, double tol) {
    // Estimate q(y1|y2) from the pooled joint, then check the factorization row by row.
    const auto& s = channel.sizes();
    std::vector<double> pooled(s.y1 * s.y2, 0.0);
    for (std::size_t x1 = 0; x1 < s.x1; ++x1)
        for (std::size_t x2 = 0; x2 < s.x2; ++x2)
            for (std::size_t y1 = 0; y1 < s.y1; ++y1)
                for (std::size_t y2 = 0; y2 < s.y2; ++y2) pooled[y1 * s.y2 + y2] += channel(x1, x2, y1, y2);
    for (std::size_t x1 = 0; x1 < s.x1; ++x1) {
        for (std::size_t x2 = 0; x2 < s.x2; ++x2) {
            const auto p2 = channel.output_marginal(2, x1, x2);
            for (std::size_t y2 = 0; y2 < s.y2; ++y2) {
                double col = 0.0;
                for (std::size_t y1 = 0; y1 < s.y1; ++y1) col += pooled[y1 * s.y2 + y2];
                for (std::size_t y1 = 0; y1 < s.y1; ++y1) {
                    const double q = col > 0.0 ? pooled[y1 * s.y2 + y2] / col : 0.0;
                    if (std::abs(channel(x1, x2, y1, y2) - p2[y2] * q) > tol) return false;
                }
            }
        }
    }
    return true;
}

}  // namespace cogcap
