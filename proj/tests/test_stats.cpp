#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <vector>

#include "hypershape/analytic.hpp"
#include "hypershape/cli.hpp"
#include "hypershape/csv.hpp"
#include "hypershape/metrics.hpp"
#include "hypershape/rng.hpp"
#include "hypershape/stats.hpp"

using namespace hypershape;
using doctest::Approx;

TEST_CASE("summarize basics") {
    SUBCASE("symmetric list") {
        const std::vector<double> values{1, 2, 3, 4, 5};
        const auto s = summarize(values);
        CHECK(s.mean == 3.0);
        CHECK(s.median == 3.0);
        CHECK(s.count == 5);
    }
    SUBCASE("0..100 hits the interpolated quantiles") {
        std::vector<double> values(101);
        std::iota(values.begin(), values.end(), 0.0);
        const auto s = summarize(values);
        CHECK(s.q025 == Approx(2.5).epsilon(1e-14));
        CHECK(s.q975 == Approx(97.5).epsilon(1e-14));
        CHECK(s.median == 50.0);
    }
    SUBCASE("singleton") {
        const std::vector<double> values{7};
        const auto s = summarize(values);
        CHECK(s.mean == 7.0);
        CHECK(s.q025 == 7.0);
        CHECK(s.median == 7.0);
        CHECK(s.q975 == 7.0);
    }
    SUBCASE("empty input throws") {
        CHECK_THROWS_AS(summarize(std::vector<double>{}), EmptyInputError);
    }
}

TEST_CASE("quantile ordering holds on random data") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> values(1 + rng.uniform_index(50));
        for (auto& v : values) v = rng.normal();
        const auto s = summarize(values);
        CHECK(s.q025 <= s.median);
        CHECK(s.median <= s.q975);
    }
}

TEST_CASE("bootstrap is deterministic given seed, across thread counts") {
    const PointCloud points(4, 2, {0.1, 0.1, 0.4, 0.9, 0.9, 0.2, 0.6, 0.6});
    const BinningSpec spec{3, {{0.0, 1.0}, {0.0, 1.0}}};
    const auto a = bootstrap_metric(points, spec, 200, 42, kDefaultCellBudget, 1);
    const auto b = bootstrap_metric(points, spec, 200, 42, kDefaultCellBudget, 4);
    CHECK(a.sp_values == b.sp_values);
    CHECK(a.sphericity_values == b.sphericity_values);
    CHECK(a.sp.median == b.sp.median);

    const auto c = bootstrap_metric(points, spec, 200, 43, kDefaultCellBudget, 1);
    CHECK(a.sp_values != c.sp_values);
}

TEST_CASE("one-row dataset has no resampling variance") {
    const PointCloud points(1, 2, {0.5, 0.5});
    const BinningSpec spec{4, {{0.0, 1.0}, {0.0, 1.0}}};
    const auto result = bootstrap_metric(points, spec, 10, 1);
    CHECK(result.sp.q025 == result.sp.q975);
    CHECK(result.sp.median == result.sp.q025);
    CHECK(result.sphericity.q025 == result.sphericity.q975);
    // Single voxel: degenerate radius 1, sp = 1 / ball_volume(2, 1) = 1/pi.
    CHECK(result.sp.median == Approx(1.0 / std::numbers::pi).epsilon(1e-14));
}

namespace {

// Exact bootstrap distribution of sp by enumerating every index sequence
// (m^m of them), independent of the resampling code under test.
std::map<long long, double> exact_sp_distribution(const PointCloud& points,
                                                  const BinningSpec& spec) {
    const std::size_t m = points.rows();
    std::vector<std::size_t> idx(m, 0);
    std::map<long long, double> prob;
    const double weight = 1.0 / std::pow(static_cast<double>(m), static_cast<double>(m));
    for (;;) {
        const double sp = analyze(points.select_rows(idx), spec).sp;
        prob[std::llround(sp * 1e12)] += weight;
        std::size_t axis = 0;
        while (axis < m && ++idx[axis] == m) idx[axis++] = 0;
        if (axis == m) break;
    }
    return prob;
}

}  // namespace

TEST_CASE("bootstrap frequencies match exact enumeration on tiny datasets") {
    struct Case {
        PointCloud points;
        BinningSpec spec;
    };
    const std::vector<Case> cases = {
        {PointCloud(2, 2, {0.1, 0.1, 0.9, 0.9}), {2, {{0.0, 1.0}, {0.0, 1.0}}}},
        {PointCloud(3, 2, {0.1, 0.1, 0.5, 0.9, 0.9, 0.4}), {3, {{0.0, 1.0}, {0.0, 1.0}}}},
        {PointCloud(4, 2, {0.05, 0.05, 0.3, 0.8, 0.8, 0.3, 0.95, 0.95}),
         {3, {{0.0, 1.0}, {0.0, 1.0}}}},
        {PointCloud(5, 2, {0.05, 0.05, 0.3, 0.8, 0.8, 0.3, 0.95, 0.95, 0.5, 0.5}),
         {4, {{0.0, 1.0}, {0.0, 1.0}}}},
    };

    const int replicates = 4000;
    for (std::size_t case_no = 0; case_no < cases.size(); ++case_no) {
        const auto& c = cases[case_no];
        const auto exact = exact_sp_distribution(c.points, c.spec);

        const auto boot = bootstrap_metric(c.points, c.spec, replicates, 1000 + case_no);
        std::map<long long, double> observed;
        for (double sp : boot.sp_values) {
            observed[std::llround(sp * 1e12)] += 1.0 / replicates;
        }

        // Every observed outcome must exist in the enumeration...
        for (const auto& [key, freq] : observed) {
            REQUIRE(exact.count(key) == 1);
        }
        // ...and match its exact probability within a 4.5-sigma band.
        for (const auto& [key, p] : exact) {
            const double freq = observed.count(key) ? observed.at(key) : 0.0;
            const double sigma = std::sqrt(p * (1.0 - p) / replicates);
            CHECK(std::abs(freq - p) <= 4.5 * sigma + 1e-9);
        }
    }
}

TEST_CASE("two-point volume distribution is the fair coin") {
    // AA/BB collapse to one voxel, AB/BA keep two: P(V = 2) = 1/2.
    const PointCloud points(2, 2, {0.1, 0.1, 0.9, 0.9});
    const BinningSpec spec{2, {{0.0, 1.0}, {0.0, 1.0}}};
    const int replicates = 4000;
    const auto boot = bootstrap_metric(points, spec, replicates, 321);
    const double two_voxel_sp = 2.0 / ball_volume(2, 2);
    int hits = 0;
    for (double sp : boot.sp_values) {
        if (sp == Approx(two_voxel_sp).epsilon(1e-12)) ++hits;
    }
    const double freq = static_cast<double>(hits) / replicates;
    CHECK(std::abs(freq - 0.5) <= 4.0 * std::sqrt(0.25 / replicates));
}

TEST_CASE("bootstrap validation") {
    const PointCloud points(2, 2, {0.1, 0.1, 0.9, 0.9});
    CHECK_THROWS_AS(bootstrap_metric(points, {2, {{0.0, 1.0}, {0.0, 1.0}}}, 0, 1),
                    EmptyInputError);
}

namespace {

PointCloud iris_subset(const std::string& subset) {
    const CsvTable table = read_csv(std::filesystem::path(HYPERSHAPE_DATA_DIR) / "iris.csv");
    std::vector<std::string> species;
    for (const auto& row : table.rows) species.push_back(row[4]);
    const auto keep = cli::subset_rows(species, subset);
    std::vector<double> values;
    for (std::size_t row : keep) {
        for (std::size_t col = 0; col < 4; ++col) {
            values.push_back(parse_double_cell(table.rows[row][col],
                                               static_cast<long>(row) + 2,
                                               static_cast<long>(col) + 1, "iris.csv"));
        }
    }
    return PointCloud(keep.size(), 4, std::move(values));
}

}  // namespace

TEST_CASE("iris setosa at 4 bins bootstraps to sphericity 1.000") {
    const auto points = iris_subset("setosa");
    const auto boot = bootstrap_metric(points, {4, {}}, 1000, 20240817);
    CHECK(boot.sphericity.q025 == Approx(1.0).epsilon(1e-12));
    CHECK(boot.sphericity.median == Approx(1.0).epsilon(1e-12));
    // The upper quantile depends on whether the single row that pins r = 4
    // survives the resample (it drops with probability (1-1/50)^50 ~ 0.36),
    // so it lands on either 1 or 4/3.
    CHECK((boot.sphericity.q975 == doctest::Approx(1.0).epsilon(1e-12) ||
           boot.sphericity.q975 == doctest::Approx(4.0 / 3.0).epsilon(1e-12)));
}

TEST_CASE("iris all-rows at 6 bins bootstraps to an sp median near 0.008") {
    const auto points = iris_subset("all");
    const auto boot = bootstrap_metric(points, {6, {}}, 1000, 20240817);
    CHECK(boot.sp.median == Approx(0.008).epsilon(0.25));  // 0.008 +- 0.002
}
