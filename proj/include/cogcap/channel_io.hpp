#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cogcap/channel.hpp"

namespace cogcap {

// Channel documents are JSON objects:
//
//   {"x1_card": 2, "x2_card": 2, "y1_card": 2, "y2_card": 2,
//    "transition": [ ... ]}
//
// "transition" is the flat array p(y1,y2|x1,x2) in row-major order with y1
// slowest, then y2, x1, and x2 fastest. Values are written as shortest
// round-trip decimal literals, so save/load is bit-exact.

Channel parse_channel(std::string_view text);
std::string format_channel(const Channel& channel);

Channel load_channel(const std::filesystem::path& path);
void save_channel(const Channel& channel, const std::filesystem::path& path);

}  // namespace cogcap
