#pragma once

#include <cstddef>
#include <cstdint>

namespace cogcap {

inline constexpr double kTolClassify = 1e-6;  // bits
inline constexpr double kTolRegion = 5e-3;    // bits
inline constexpr double kTightTol = 1e-6;     // bits

/// Optimizer work and seeding knobs shared by the classifier and the region
/// sweep.
struct Budget {
    std::size_t restarts = 32;
    std::size_t grid_res = 8;
    std::size_t aux_card = 4;
    std::size_t max_iters = 300;
    std::size_t max_grid_points = 20000;
    std::uint64_t seed = 0;
    std::size_t threads = 0;  // 0: default_thread_count()
};

/// Throws ArgumentError when a knob is out of range.
void validate(const Budget& budget);

}  // namespace cogcap
