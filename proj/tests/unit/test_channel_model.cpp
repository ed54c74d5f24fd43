#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "cogcap/channel_family.hpp"
#include "cogcap/channel_io.hpp"
#include "cogcap/errors.hpp"

using namespace cogcap;

namespace {

std::filesystem::path scratch(const std::string& name) {
    return std::filesystem::path(COGCAP_TEST_DATA) / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

bool rows_normalized(const Channel& c) {
    for (std::size_t x1 = 0; x1 < c.x1_card(); ++x1)
        for (std::size_t x2 = 0; x2 < c.x2_card(); ++x2) {
            double s = 0.0;
            for (double v : c.row(x1, x2)) {
                if (v < 0.0) return false;
                s += v;
            }
            if (std::abs(s - 1.0) > 1e-9) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("channel file with a deterministic identity pair") {
    const auto path = scratch("identity_pair.json");
    // y1 slowest, then y2, x1, x2 fastest: p(y1,y2|x1,x2) = [y1==x1][y2==x2].
    std::string t;
    for (int y1 = 0; y1 < 2; ++y1)
        for (int y2 = 0; y2 < 2; ++y2)
            for (int x1 = 0; x1 < 2; ++x1)
                for (int x2 = 0; x2 < 2; ++x2) t += std::string(t.empty() ? "" : ",") + (y1 == x1 && y2 == x2 ? "1" : "0");
    write(path, R"({"x1_card":2,"x2_card":2,"y1_card":2,"y2_card":2,"transition":[)" + t + "]}");
    const Channel c = load_channel(path);
    CHECK(c == noiseless_pair_channel());
}

TEST_CASE("malformed channel files are rejected") {
    const auto bad_row = scratch("bad_row.json");
    write(bad_row, R"({"x1_card":1,"x2_card":2,"y1_card":1,"y2_card":2,"transition":[0.5,0.5,0.48,0.5]})");
    try {
        load_channel(bad_row);
        FAIL("expected a format error");
    } catch (const FormatError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("x1=0, x2=0") != std::string::npos);
        CHECK(msg.find("normalized") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_channel(R"({"x1_card":2,"x2_card":2,"y1_card":2,"y2_card":2,"transition":[1,0]})"),
                    FormatError);
    CHECK_THROWS_AS(parse_channel(R"({"x1_card":2,"x2_card":2,"y1_card":2})"), FormatError);
    CHECK_THROWS_AS(parse_channel("not json"), FormatError);
    CHECK_THROWS_AS(parse_channel(R"({"x1_card":0,"x2_card":2,"y1_card":2,"y2_card":2,"transition":[]})"), FormatError);
    CHECK_THROWS_AS(load_channel(scratch("does_not_exist.json")), FormatError);
}

TEST_CASE("save and load round trip is bit-exact") {
    for (std::uint64_t seed : {0ULL, 1ULL, 12345ULL}) {
        const Channel c = random_channel(seed, {2, 3, 2, 3});
        const auto path = scratch("roundtrip_" + std::to_string(seed) + ".json");
        save_channel(c, path);
        const Channel back = load_channel(path);
        REQUIRE(back.raw().size() == c.raw().size());
        for (std::size_t i = 0; i < c.raw().size(); ++i) CHECK(back.raw()[i] == c.raw()[i]);
        CHECK(format_channel(back) == format_channel(c));
    }
}

TEST_CASE("random channels") {
    CHECK(random_channel(3) == random_channel(3));
    CHECK_FALSE(random_channel(3) == random_channel(4));
    for (std::uint64_t s = 0; s < 20; ++s) CHECK(rows_normalized(random_channel(s)));
    CHECK(make_family({FamilyId::random, {}, 11}) == random_channel(11));
}

TEST_CASE("family structure") {
    const auto id = make_family({FamilyId::identical_outputs, {0.1}, 0});
    for (std::size_t x1 = 0; x1 < 2; ++x1)
        for (std::size_t x2 = 0; x2 < 2; ++x2) {
            CHECK(id(x1, x2, 0, 1) == 0.0);
            CHECK(id(x1, x2, 1, 0) == 0.0);
        }

    CHECK(is_degraded_cognitive(make_family({FamilyId::degraded_cognitive, {0.1, 0.2}, 0})));
    CHECK_FALSE(is_degraded_cognitive(make_family({FamilyId::null_cognitive_output, {}, 0})));

    const auto npo = make_family({FamilyId::null_primary_output, {0.05}, 0});
    for (std::size_t x1 = 0; x1 < 2; ++x1)
        for (std::size_t x2 = 0; x2 < 2; ++x2) CHECK(npo.output_marginal(1, x1, x2) == std::vector<double>{0.5, 0.5});

    const auto nco = make_family({FamilyId::null_cognitive_output, {}, 0});
    for (std::size_t x1 = 0; x1 < 2; ++x1)
        for (std::size_t x2 = 0; x2 < 2; ++x2) {
            CHECK(nco.output_marginal(2, x1, x2) == std::vector<double>{0.5, 0.5});
            CHECK(nco.output_marginal(1, x1, x2)[x1] == 1.0);
        }

    for (auto fid : {FamilyId::identical_outputs, FamilyId::degraded_cognitive, FamilyId::null_primary_output,
                     FamilyId::null_cognitive_output})
        CHECK(rows_normalized(make_family({fid, {}, 0})));
    CHECK(rows_normalized(noiseless_product_channel()));
    CHECK(rows_normalized(zero_capacity_channel()));
}

TEST_CASE("family parameters are range checked") {
    CHECK_THROWS_AS(make_family({FamilyId::identical_outputs, {0.7}, 0}), ArgumentError);
    CHECK_THROWS_AS(make_family({FamilyId::degraded_cognitive, {0.1, -0.1}, 0}), ArgumentError);
    CHECK_THROWS_AS(make_family({FamilyId::null_primary_output, {0.1, 0.1}, 0}), ArgumentError);
    CHECK_NOTHROW(make_family({FamilyId::identical_outputs, {0.5}, 0}));
    CHECK(parse_family("degraded_cognitive") == FamilyId::degraded_cognitive);
    CHECK_FALSE(parse_family("nope").has_value());
}

TEST_CASE("channel invariants on construction") {
    CHECK_THROWS_AS(Channel({1, 1, 1, 2}, {0.6, 0.6}), ArgumentError);
    CHECK_THROWS_AS(Channel({1, 1, 1, 2}, {1.5, -0.5}), ArgumentError);
    CHECK_THROWS_AS(Channel({1, 1, 1, 2}, {1.0}), DimensionError);
}
