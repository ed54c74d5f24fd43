#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cogcap/budget.hpp"
#include "cogcap/channel.hpp"
#include "cogcap/regions.hpp"

namespace cogcap::cli {

/// Bad command-line usage; reported with exit code 1.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitMandatedFailure = 2;

struct RunConfig {
    std::string command;                // classify | region | hierarchy | generate
    std::string channel_path;
    std::vector<std::string> family;    // family name followed by its parameters
    std::optional<std::uint64_t> seed;  // required when random channels are drawn
    Budget budget;
    std::size_t angles = kDefaultAngles;
    std::size_t aux_lo = 4;
    std::size_t aux_hi = 4;
    std::string out;                    // empty: standard output
    std::string format;                 // csv | report; empty picks the command default
    std::string region;
    std::size_t batch = 1;
};

/// Channel named by --channel or --family.
Channel resolve_channel(const RunConfig& config);

/// Parses "N" or "A..B".
std::pair<std::size_t, std::size_t> parse_aux_range(const std::string& text);

std::string cmd_classify(const RunConfig& config);
std::string cmd_region(const RunConfig& config);
/// Returns the report and sets mandated_ok.
std::string cmd_hierarchy(const RunConfig& config, bool& mandated_ok);
std::string cmd_generate(const RunConfig& config);

/// Runs a command and writes its output; returns the process exit code.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command-line entry point.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cogcap::cli
