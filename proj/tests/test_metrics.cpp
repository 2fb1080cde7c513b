#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gae/metrics.hpp"
#include "gae/random.hpp"
#include "support/oracles.hpp"

using gae::BitString;
using gae::GenerationRecord;
using gae::Individual;
using gae::Population;
using gae::RunTrace;

namespace {

Population population_of(std::initializer_list<const char*> genotypes) {
    Population pop;
    for (const char* g : genotypes) pop.push_back({BitString::parse(g), BitString{}, 0.0, 0});
    return pop;
}

// A trace whose per-generation best-so-far and edit counts are prescribed.
RunTrace trace_of(const std::vector<double>& best, const std::vector<int>& edits) {
    RunTrace trace;
    for (std::size_t g = 0; g < best.size(); ++g) {
        GenerationRecord r;
        r.generation = static_cast<int>(g);
        r.best_fitness = best[g];
        r.best_so_far = best[g];
        r.edit_count = edits.empty() ? 0 : edits[g];
        trace.records.push_back(r);
    }
    return trace;
}

} // namespace

TEST_SUITE("metrics") {

TEST_CASE("diversity fixed points") {
    // all members identical -> 0
    CHECK(gae::diversity(population_of({"0101", "0101", "0101"})) == 0.0);
    // every locus half ones -> 1
    CHECK(gae::diversity(population_of({"0000", "1111"})) == 1.0);
    // every locus at p = 0.25 -> 0.5
    CHECK(gae::diversity(population_of({"1111", "0000", "0000", "0000"})) == 0.5);
}

TEST_CASE("diversity input validation") {
    CHECK_THROWS_AS(gae::diversity(Population{}), std::invalid_argument);
    CHECK_THROWS_AS(gae::diversity(population_of({"01", "011"})), std::invalid_argument);
}

TEST_CASE("diversity is permutation and complement invariant") {
    gae::RandomSource rng(201);
    Population pop;
    for (int i = 0; i < 9; ++i) pop.push_back({gae::random_bitstring(12, rng), {}, 0.0, 0});
    const double d = gae::diversity(pop);
    CHECK(d >= 0.0);
    CHECK(d <= 1.0);

    Population shuffled = pop;
    std::reverse(shuffled.begin(), shuffled.end());
    CHECK(gae::diversity(shuffled) == d);

    Population flipped = pop;
    for (auto& ind : flipped)
        for (std::size_t i = 0; i < ind.genotype.size(); ++i) ind.genotype.flip(i);
    CHECK(gae::diversity(flipped) == d);
}

TEST_CASE("schema density counts matching genotypes") {
    gae::Schema s1;
    for (std::size_t i = 0; i < 2; ++i) s1.fixed.emplace_back(i, std::uint8_t{1});

    CHECK(gae::schema_density(population_of({"1100", "1111", "0011", "1010"}), s1) == 0.5);
    CHECK(gae::schema_density(population_of({"0000", "0000"}), s1) == 0.0);
    CHECK(gae::schema_density(population_of({"1111"}), s1) == 1.0);
    // the empty schema matches everything
    CHECK(gae::schema_density(population_of({"0000", "1111"}), gae::Schema{}) == 1.0);
    CHECK_THROWS_AS(gae::schema_density(Population{}, s1), std::invalid_argument);
}

TEST_CASE("aggregate of identical traces has zero spread") {
    const std::vector<RunTrace> traces(3, trace_of({1.0, 2.0, 5.0}, {}));
    const auto agg =
        gae::aggregate_runs(traces, [](const GenerationRecord& r) { return r.best_so_far; });
    REQUIRE(agg.mean.size() == 3);
    CHECK(agg.mean == std::vector<double>{1.0, 2.0, 5.0});
    CHECK(agg.stddev == std::vector<double>{0.0, 0.0, 0.0});
    CHECK(agg.ci95 == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("aggregate of two constant traces averages them") {
    const std::vector<RunTrace> traces{trace_of({10.0, 10.0}, {}), trace_of({20.0, 20.0}, {})};
    const auto agg =
        gae::aggregate_runs(traces, [](const GenerationRecord& r) { return r.best_so_far; });
    CHECK(agg.mean == std::vector<double>{15.0, 15.0});
}

TEST_CASE("aggregate matches an independent recomputation to 1e-12") {
    gae::RandomSource rng(202);
    std::vector<RunTrace> traces;
    for (int r = 0; r < 50; ++r) {
        std::vector<double> best(20);
        double acc = 0.0;
        for (double& b : best) {
            acc += rng.next_double() * 4.0;
            b = acc;
        }
        traces.push_back(trace_of(best, {}));
    }
    const auto agg =
        gae::aggregate_runs(traces, [](const GenerationRecord& r) { return r.best_so_far; });
    for (std::size_t g = 0; g < 20; ++g) {
        std::vector<double> column;
        for (const auto& t : traces) column.push_back(t.records[g].best_so_far);
        REQUIRE(std::abs(agg.mean[g] - oracle::mean(column)) < 1e-12);
        REQUIRE(std::abs(agg.stddev[g] - oracle::sample_stddev(column)) < 1e-12);
        REQUIRE(std::abs(agg.ci95[g] - oracle::ci95(column)) < 1e-12);
    }
}

TEST_CASE("ci half-width shrinks like one over root R") {
    // i.i.d. values with unit variance: ci95(R) ~ 1.96 / sqrt(R)
    gae::RandomSource rng(203);
    const auto ci_for = [&](int runs) {
        std::vector<RunTrace> traces;
        for (int r = 0; r < runs; ++r)
            traces.push_back(trace_of({(rng.next_double() * 2.0 - 1.0) * std::sqrt(3.0)}, {}));
        return gae::aggregate_runs(traces,
                                   [](const GenerationRecord& rec) { return rec.best_so_far; })
            .ci95[0];
    };
    const double wide = ci_for(100);
    const double narrow = ci_for(1600);
    // 4x the sample -> about a quarter of the width
    CHECK(narrow < wide * 0.45);
    CHECK(narrow > wide * 0.1);
}

TEST_CASE("aggregate rejects degenerate batches") {
    const std::vector<RunTrace> one{trace_of({1.0}, {})};
    CHECK_THROWS_AS(
        gae::aggregate_runs(one, [](const GenerationRecord& r) { return r.best_so_far; }),
        std::invalid_argument);
    const std::vector<RunTrace> ragged{trace_of({1.0, 2.0}, {}), trace_of({1.0}, {})};
    CHECK_THROWS_AS(
        gae::aggregate_runs(ragged, [](const GenerationRecord& r) { return r.best_so_far; }),
        std::invalid_argument);
}

TEST_CASE("editing frequency summary averages deciles") {
    // 20 generations: first decile = generations 0..1, last = 18..19.
    std::vector<int> edits(20, 0);
    edits[0] = 10;
    edits[1] = 6;
    edits[18] = 2;
    edits[19] = 0;
    const std::vector<RunTrace> traces{trace_of(std::vector<double>(20, 1.0), edits),
                                       trace_of(std::vector<double>(20, 1.0), edits)};
    const auto summary = gae::editing_frequency_summary(traces);
    REQUIRE(summary.mean_per_generation.size() == 20);
    CHECK(summary.mean_per_generation[0] == 10.0);
    CHECK(summary.first_decile_mean == 8.0);
    CHECK(summary.last_decile_mean == 1.0);
}

TEST_CASE("editing frequency with no editors is identically zero") {
    const std::vector<RunTrace> traces{trace_of(std::vector<double>(7, 1.0), {}),
                                       trace_of(std::vector<double>(7, 1.0), {})};
    const auto summary = gae::editing_frequency_summary(traces);
    for (const double m : summary.mean_per_generation) CHECK(m == 0.0);
    // fewer than 10 generations: the decile window is a single generation
    CHECK(summary.first_decile_mean == 0.0);
    CHECK(summary.last_decile_mean == 0.0);
}

TEST_CASE("short traces use a one-generation decile window") {
    const std::vector<RunTrace> traces{trace_of({1.0, 1.0, 1.0}, {9, 5, 3})};
    const auto summary = gae::editing_frequency_summary(traces);
    CHECK(summary.first_decile_mean == 9.0);
    CHECK(summary.last_decile_mean == 3.0);
}

TEST_CASE("final_best_so_far reads the last record") {
    CHECK(trace_of({1.0, 7.0, 7.5}, {}).final_best_so_far() == 7.5);
    CHECK(RunTrace{}.final_best_so_far() == 0.0);
}

} // TEST_SUITE metrics
