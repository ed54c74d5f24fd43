#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "cogcap/channel_family.hpp"
#include "cogcap/channel_io.hpp"
#include "cogcap/cli/cli.hpp"

using namespace cogcap;
using Json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "cogcap");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name) { return (std::filesystem::path(COGCAP_TEST_DATA) / name).string(); }

std::vector<std::vector<double>> csv_rows(const std::string& csv) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "theta,R1,R2,tight_constraints");
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string cell;
        std::vector<double> row;
        for (int i = 0; i < 3 && std::getline(ls, cell, ','); ++i) row.push_back(std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

TEST_CASE("classify reports every regime on identical outputs") {
    const auto r = run({"classify", "--family", "identical_outputs"});
    REQUIRE(r.code == 0);
    const auto doc = Json::parse(r.out);
    REQUIRE(doc["reports"].size() == 1);
    for (const auto& c : doc["reports"][0]["conditions"]) CHECK(c["verdict"] == "holds");
}

TEST_CASE("classify shows a failing witness") {
    const auto r = run({"classify", "--family", "null_cognitive_output"});
    REQUIRE(r.code == 0);
    const auto doc = Json::parse(r.out);
    bool seen = false;
    for (const auto& c : doc["reports"][0]["conditions"]) {
        if (c["condition"] != "CMC") continue;
        seen = true;
        CHECK(c["verdict"] == "fails");
        CHECK(c["worst_gap"].get<double>() == doctest::Approx(-1.0).epsilon(1e-9));
        CHECK(c["witness"]["values"].size() == 4);
    }
    CHECK(seen);
}

TEST_CASE("classify over an auxiliary cardinality range") {
    const auto r = run({"classify", "--family", "random", "--seed", "3", "--aux-card", "2..4"});
    REQUIRE(r.code == 0);
    const auto doc = Json::parse(r.out);
    CHECK(doc["reports"].size() == 3);
    for (const auto& s : doc["saturation"]) CHECK(s["monotone_nonincreasing"] == true);
}

TEST_CASE("region CSV for the noiseless fixture") {
    const auto r = run({"region", "C_IV", "--family", "noiseless_product"});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0][1] == doctest::Approx(1.0));
    CHECK(rows[0][2] == doctest::Approx(0.0));
    CHECK(rows[1][1] == doctest::Approx(1.0));
    CHECK(rows[1][2] == doctest::Approx(1.0));
    CHECK(rows[2][1] == doctest::Approx(0.0));
    CHECK(rows[2][2] == doctest::Approx(1.0));
}

TEST_CASE("region on a zero-capacity channel is a single row") {
    const auto r = run({"region", "--region", "C_I", "--family", "zero_capacity"});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0][1] == 0.0);
    CHECK(rows[0][2] == 0.0);
}

TEST_CASE("region output is byte-identical across runs and thread counts") {
    const auto a = run({"region", "C_III", "--family", "random", "--seed", "5", "--threads", "1"});
    const auto b = run({"region", "C_III", "--family", "random", "--seed", "5", "--threads", "1"});
    const auto c = run({"region", "C_III", "--family", "random", "--seed", "5", "--threads", "4"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    const auto rep = run({"region", "C_III", "--family", "random", "--seed", "5", "--format", "report"});
    REQUIRE(rep.code == 0);
    CHECK(Json::parse(rep.out)["result"]["vertices"].size() == csv_rows(a.out).size());
}

TEST_CASE("region usage errors") {
    CHECK(run({"region", "C_V", "--family", "zero_capacity"}).code == 1);
    CHECK(run({"region", "--family", "zero_capacity"}).code == 1);
    CHECK(run({"region", "C_I", "--channel", scratch("missing.json")}).code == 1);
    CHECK(run({"region", "C_I", "--family", "random"}).code == 1);  // no seed
}

TEST_CASE("hierarchy on identical outputs: all regions coincide") {
    const auto r = run({"hierarchy", "--family", "identical_outputs", "--angles", "32"});
    REQUIRE(r.code == 0);
    const auto doc = Json::parse(r.out);
    const auto& ch = doc["channels"][0];
    CHECK(ch["mandated_ok"] == true);
    CHECK(ch["regions"].size() == 5);
    for (const auto& d : ch["pairwise_hausdorff"]) CHECK(d["hausdorff"].get<double>() <= 5e-3);
}

TEST_CASE("hierarchy batches") {
    CHECK(run({"hierarchy", "--batch", "0", "--seed", "1"}).code == 1);
    CHECK(run({"hierarchy", "--batch", "2"}).code == 1);  // random channels need a seed
    const auto a = run({"hierarchy", "--batch", "2", "--seed", "7", "--angles", "16", "--threads", "1"});
    const auto b = run({"hierarchy", "--batch", "2", "--seed", "7", "--angles", "16", "--threads", "3"});
    CHECK((a.code == 0 || a.code == 2));
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    const auto doc = Json::parse(a.out);
    CHECK(doc["summary"]["channels"] == 2);
    CHECK(doc["channels"].size() == 2);
}

TEST_CASE("generate writes loadable channel files") {
    const auto path = scratch("gen_degraded.json");
    REQUIRE(run({"generate", "degraded_cognitive", "0.1", "0.2", "--out", path}).code == 0);
    CHECK(is_degraded_cognitive(load_channel(path)));

    const auto a = run({"generate", "random", "--seed", "3"});
    const auto b = run({"generate", "--family", "random", "--seed", "3"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(parse_channel(a.out) == random_channel(3));

    const auto bad = run({"generate", "identical_outputs", "0.7"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("[0, 0.5]") != std::string::npos);
    CHECK(run({"generate", "random"}).code == 1);
    CHECK(run({"generate", "no_such_family"}).code == 1);
}

TEST_CASE("installed binary exit codes") {
    const char* bin = std::getenv("COGCAP_BIN");
    if (!bin) return;
    const std::string b = bin;
    auto status = [](const std::string& cmd) {
        const int s = std::system((cmd + " > /dev/null 2>&1").c_str());
        return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
    };
    CHECK(status(b + " classify --family null_cognitive_output --restarts 4") == 0);
    CHECK(status(b + " classify --channel /nonexistent.json") == 1);
    CHECK(status(b + " bogus") == 1);
    CHECK(status(b + " --help") == 0);
}
