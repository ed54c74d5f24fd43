#include <doctest.h>

#include <cmath>

#include "cogcap/channel_family.hpp"
#include "cogcap/classifier.hpp"
#include "cogcap/errors.hpp"
#include "cogcap/oracle.hpp"
#include "cogcap/regions.hpp"
#include "cogcap/rng.hpp"

using namespace cogcap;

namespace {

Channel fam(FamilyId id, std::vector<double> noise = {}) { return make_family({id, std::move(noise), 0}); }

ProbTensor random_pairs(std::size_t n, std::uint64_t seed) {
    std::vector<Variable> vars;
    for (std::size_t i = 1; i <= n; ++i) vars.push_back({"Y1_" + std::to_string(i), 2});
    for (std::size_t i = 1; i <= n; ++i) vars.push_back({"Y2_" + std::to_string(i), 2});
    Rng rng(seed);
    return ProbTensor(vars, rng.dirichlet1(std::size_t{1} << (2 * n)));
}

}  // namespace

TEST_CASE("grid minimum of the CMC gap on fixtures") {
    const auto id = oracle::grid_min_gap(fam(FamilyId::identical_outputs), ConditionId::CMC, {8, 1});
    CHECK(std::abs(id.min_gap) <= 1e-12);
    CHECK(id.points == 165);

    const auto nco = oracle::grid_min_gap(fam(FamilyId::null_cognitive_output), ConditionId::CMC, {8, 1});
    CHECK(nco.min_gap == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(nco.argmin.at({0, 0}) + nco.argmin.at({0, 1}) == doctest::Approx(0.5));

    const auto deg = oracle::grid_min_gap(fam(FamilyId::degraded_cognitive, {0.1, 0.2}), ConditionId::CMC, {64, 1});
    CHECK(deg.min_gap >= -1e-12);
    CHECK(deg.points == 47905);
}

TEST_CASE("optimizer never does worse than the grid") {
    for (std::uint64_t s = 0; s < 8; ++s) {
        const auto ch = random_channel(derive_seed(2, {s}));
        for (auto cid : kAllConditions) {
            Budget b;
            b.aux_card = 2;
            const auto rep = check_condition(ch, cid, b);
            const auto grid = oracle::grid_min_gap(ch, cid, {8, 2});
            CHECK_MESSAGE(rep.worst_gap <= grid.min_gap + 1e-9, condition_name(cid));
        }
    }
}

TEST_CASE("grid regions") {
    const auto sq = oracle::grid_region(noiseless_product_channel(), RegionId::C_IV, {8, 1});
    REQUIRE(sq.vertices.size() == 3);
    CHECK(sq.vertices[0] == Point{1.0, 0.0});
    CHECK(sq.vertices[1] == Point{1.0, 1.0});
    CHECK(sq.vertices[2] == Point{0.0, 1.0});

    for (RegionId id : kAllRegions) CHECK(oracle::grid_region(zero_capacity_channel(), id, {4, 2}).is_zero());
}

TEST_CASE("grid region lies inside the swept region") {
    for (std::uint64_t s = 0; s < 4; ++s) {
        const auto ch = random_channel(derive_seed(4, {s}));
        for (RegionId id : {RegionId::C_II, RegionId::C_III, RegionId::C_IV}) {
            Budget b;
            b.aux_card = 2;
            const auto g = oracle::grid_region(ch, id, id == RegionId::C_II ? oracle::GridSpec{64, 1} : oracle::GridSpec{12, 2});
            const auto r = compute_region(ch, id, 64, b);
            CHECK(region_subset(g, r, kTolRegion).subset);
            // A resolution-12 grid over |U|=2 is coarse on curved boundaries.
            CHECK(hausdorff(g, r) <= 2e-2);
        }
    }
}

TEST_CASE("C_II inside C_IV on a strong-interference channel, exactly on the grid") {
    // Y2 sees both inputs noiselessly and Y1 is X1 xor X2: both strong
    // interference requirements hold.
    const Channel ch = Channel::from_function({2, 2, 2, 4}, [](auto x1, auto x2, auto y1, auto y2) {
        return (y1 == (x1 ^ x2) && y2 == 2 * x1 + x2) ? 1.0 : 0.0;
    });
    CHECK(check_condition(ch, ConditionId::SI_primal, Budget{}).verdict == Verdict::holds);
    const auto c2 = oracle::grid_region(ch, RegionId::C_II, {8, 1});
    const auto c4 = oracle::grid_region(ch, RegionId::C_IV, {8, 2});
    const auto s = region_subset(c2, c4, 0.0);
    CHECK(s.subset);
    CHECK(s.max_violation <= 1e-12);
}

TEST_CASE("grid pre-flight rejects oversized enumerations") {
    CHECK_THROWS_AS(oracle::grid_min_gap(random_channel(1), ConditionId::CLN, {64, 4}), BudgetError);
    CHECK_THROWS_AS(oracle::grid_region(random_channel(1), RegionId::C_IV, {32, 4}), BudgetError);
    try {
        oracle::grid_min_gap(random_channel(1), ConditionId::CLN, {64, 4});
    } catch (const BudgetError& e) {
        CHECK(std::string(e.what()).find("points") != std::string::npos);
    }
    CHECK(oracle::grid_point_count(8, 8) == 6435);
}

TEST_CASE("sum identity over sequence pairs") {
    // Product distribution: both sums vanish.
    const ProbTensor prod = ProbTensor::uniform(
        {{"Y1_1", 2}, {"Y1_2", 2}, {"Y1_3", 2}, {"Y2_1", 2}, {"Y2_2", 2}, {"Y2_3", 2}});
    CHECK(oracle::csiszar_identity_check(prod, 3) <= 1e-12);

    // n = 2, Y1_i = Y2_i fully correlated pairs.
    std::vector<double> v(16, 0.0);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) v[(a * 2 + b) * 4 + a * 2 + b] = 0.25;
    const ProbTensor corr({{"Y1_1", 2}, {"Y1_2", 2}, {"Y2_1", 2}, {"Y2_2", 2}}, v);
    CHECK(oracle::csiszar_identity_check(corr, 2) <= 1e-12);

    double worst = 0.0;
    for (std::uint64_t s = 0; s < 200; ++s) worst = std::max(worst, oracle::csiszar_identity_check(random_pairs(3, s), 3));
    CHECK(worst <= 1e-10);
    CHECK_THROWS_AS(oracle::csiszar_identity_check(prod, 4), ArgumentError);
}
