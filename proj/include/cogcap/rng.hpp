#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace cogcap {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Mixes a base seed with a list of tags into an independent sub-seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tags) {
    std::uint64_t h = splitmix64(base);
    for (std::uint64_t t : tags) h = splitmix64(h ^ splitmix64(t + 0x632be59bd9b4e019ULL));
    return h;
}

/// Deterministic generator. Uniform and exponential draws are computed here
/// rather than through <random> distributions so streams do not depend on
/// the standard library implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double exponential() { return -std::log1p(-uniform()); }

    /// Symmetric Dirichlet(1) sample of the given dimension.
    std::vector<double> dirichlet1(std::size_t dim) {
        std::vector<double> out(dim);
        double sum = 0.0;
        for (auto& v : out) {
            v = exponential();
            sum += v;
        }
        if (sum <= 0.0) {
            for (auto& v : out) v = 1.0 / static_cast<double>(dim);
            return out;
        }
        for (auto& v : out) v /= sum;
        return out;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace cogcap
