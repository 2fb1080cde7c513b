#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gae/engine.hpp"
#include "support/plain_ga.hpp"

using gae::BitString;
using gae::EditFunction;
using gae::EditKind;
using gae::Editor;
using gae::EditorFamily;
using gae::GaParams;
using gae::Individual;
using gae::Population;
using gae::RandomSource;

namespace {

Population fixed_fitness_population(std::initializer_list<double> fitnesses) {
    Population pop;
    for (const double f : fitnesses) pop.push_back({BitString::zeros(4), BitString{}, f, 0});
    return pop;
}

EditorFamily one_editor(std::string_view pattern, double v, EditKind kind, int amount) {
    EditorFamily family;
    family.editors.push_back(Editor{BitString::parse(pattern), v, EditFunction{kind, amount}});
    return family;
}

} // namespace

TEST_SUITE("engine") {

TEST_CASE("tournament prefers the fitter contestant three to one") {
    // Two members, fitness 0 and 80: the better one wins unless both
    // contestants are the weaker member -- probability 3/4.
    const Population pop = fixed_fitness_population({0.0, 80.0});
    RandomSource rng(301);
    int wins = 0;
    const int trials = 40000;
    for (int t = 0; t < trials; ++t) wins += gae::binary_tournament(pop, rng) == 1 ? 1 : 0;
    CHECK(std::abs(wins / double(trials) - 0.75) < 0.02);
}

TEST_CASE("tournament selects a unique maximum at the closed-form rate") {
    //5 members with distinct fitness: P(best selected) = (2*5 - 1) / 25.
    const Population pop = fixed_fitness_population({1.0, 2.0, 3.0, 4.0, 5.0});
    RandomSource rng(302);
    int wins = 0;
    const int trials = 50000;
    for (int t = 0; t < trials; ++t) wins += gae::binary_tournament(pop, rng) == 4 ? 1 : 0;
    CHECK(std::abs(wins / double(trials) - 9.0 / 25.0) < 0.02);
}

TEST_CASE("exact fitness ties are broken by a fair coin") {
    const Population pop = fixed_fitness_population({7.0, 7.0});
    RandomSource rng(303);
    int first = 0;
    const int trials = 40000;
    for (int t = 0; t < trials; ++t) first += gae::binary_tournament(pop, rng) == 0 ? 1 : 0;
    CHECK(std::abs(first / double(trials) - 0.5) < 0.02);
    RandomSource rng2(304);
    CHECK_THROWS_AS(gae::binary_tournament(Population{}, rng2), std::invalid_argument);
}

TEST_CASE("crossover_at swaps suffixes from the cut") {
    const auto [c1, c2] =
        gae::crossover_at(BitString::parse("11111"), BitString::parse("00000"), 2);
    CHECK(c1.to_string() == "11000");
    CHECK(c2.to_string() == "00111");
    CHECK_THROWS_AS(gae::crossover_at(BitString::parse("11"), BitString::parse("00"), 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(gae::crossover_at(BitString::parse("11"), BitString::parse("00"), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(gae::crossover_at(BitString::parse("11"), BitString::parse("000"), 1),
                    std::invalid_argument);
}

TEST_CASE("one-point crossover fires at the configured rate") {
    const BitString a = BitString::ones(8);
    const BitString b = BitString::zeros(8);
    RandomSource rng(305);
    int recombined = 0;
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) {
        const auto [c1, c2] = gae::one_point_crossover(a, b, 0.7, rng);
        if (c1 != a) ++recombined;
        // children are complementary: together they carry all 8 ones
        CHECK(c1.count_ones() + c2.count_ones() == 8);
    }
    CHECK(std::abs(recombined / double(trials) - 0.7) < 0.02);
}

TEST_CASE("crossover rate zero copies the parents") {
    const BitString a = BitString::parse("1010");
    const BitString b = BitString::parse("0101");
    RandomSource rng(306);
    const auto [c1, c2] = gae::one_point_crossover(a, b, 0.0, rng);
    CHECK(c1 == a);
    CHECK(c2 == b);
    // single-bit parents have no interior cut and are always copied
    const auto [d1, d2] =
        gae::one_point_crossover(BitString::parse("1"), BitString::parse("0"), 1.0, rng);
    CHECK(d1.to_string() == "1");
    CHECK(d2.to_string() == "0");
}

TEST_CASE("point mutation flips at the configured rate") {
    const BitString s = BitString::zeros(40);
    RandomSource rng(307);
    CHECK(gae::point_mutation(s, 0.0, rng) == s);
    const BitString all = gae::point_mutation(s, 1.0, rng);
    CHECK(all.count_ones() == 40);

    long flips = 0;
    const int trials = 10000;
    for (int t = 0; t < trials; ++t)
        flips += static_cast<long>(gae::point_mutation(s, 0.005, rng).count_ones());
    // expected 0.2 flips per string
    CHECK(std::abs(flips / double(trials) - 0.2) < 0.02);
}

TEST_CASE("evaluation without editors copies genotypes into transcripts") {
    const gae::RoyalRoadS1 problem;
    RandomSource rng(308);
    Population pop;
    for (int i = 0; i < 6; ++i) pop.push_back({gae::random_bitstring(40, rng), {}, -1.0, 9});
    const int edits = gae::evaluate_population(pop, problem, EditorFamily{},
                                               gae::EditingMode::Ontogenic, rng);
    CHECK(edits == 0);
    for (const Individual& ind : pop) {
        CHECK(ind.transcript == ind.genotype);
        CHECK(ind.fitness == gae::royal_road_s1(ind.genotype));
        CHECK(ind.edits == 0);
    }
}

TEST_CASE("ontogenic editing leaves genotypes alone; lamarckian writes back") {
    const gae::RoyalRoadS1 problem;
    const EditorFamily family = one_editor("0", 1.0, EditKind::Insert, 4);

    RandomSource rng(309);
    Population pop;
    for (int i = 0; i < 8; ++i) pop.push_back({BitString::zeros(40), {}, 0.0, 0});
    const Population before = pop;
    const int edits =
        gae::evaluate_population(pop, problem, family, gae::EditingMode::Ontogenic, rng);
    CHECK(edits == 8); // concentration 1 and a guaranteed match
    for (std::size_t i = 0; i < pop.size(); ++i) {
        CHECK(pop[i].genotype == before[i].genotype);
        CHECK(pop[i].edits == 1);
        CHECK(pop[i].fitness == gae::royal_road_s1(pop[i].transcript));
    }

    Population lam;
    for (int i = 0; i < 8; ++i) lam.push_back({BitString::zeros(40), {}, 0.0, 0});
    gae::evaluate_population(lam, problem, family, gae::EditingMode::Lamarckian, rng);
    for (const Individual& ind : lam) CHECK(ind.genotype == ind.transcript);
}

TEST_CASE("next generation preserves size and length, including odd sizes") {
    const GaParams params{};
    RandomSource rng(310);
    for (const std::size_t size : {2u, 5u, 40u}) {
        Population pop;
        for (std::size_t i = 0; i < size; ++i)
            pop.push_back({gae::random_bitstring(12, rng), {}, rng.next_double(), 0});
        const Population next = gae::next_generation(pop, params, rng);
        REQUIRE(next.size() == size);
        for (const Individual& ind : next) {
            REQUIRE(ind.genotype.size() == 12);
            CHECK(ind.fitness == 0.0);
        }
    }
}

TEST_CASE("a one-generation run records exactly the initial evaluation") {
    const gae::RoyalRoadS1 problem;
    GaParams params{};
    params.generations = 1;
    const auto trace = gae::run_ga(problem, params, EditorFamily{}, 77);
    REQUIRE(trace.records.size() == 1);
    CHECK(trace.records[0].best_so_far == trace.records[0].best_fitness);
    CHECK(trace.final_best_so_far() == trace.best_fitness);
    CHECK(gae::royal_road_s1(trace.best_genotype) == trace.best_fitness);
}

TEST_CASE("identical arguments reproduce identical traces") {
    const gae::RoyalRoadS1 problem;
    GaParams params{};
    params.generations = 30;
    const EditorFamily family = one_editor("011", 0.5, EditKind::Delete, 2);
    const auto a = gae::run_ga(problem, params, family, 5150);
    const auto b = gae::run_ga(problem, params, family, 5150);
    CHECK(reference::serialize_trace(a) == reference::serialize_trace(b));
    const auto c = gae::run_ga(problem, params, family, 5151);
    CHECK(reference::serialize_trace(a) != reference::serialize_trace(c));
}

TEST_CASE("best-so-far is monotone and edits are recorded") {
    const gae::RoyalRoadS1 problem;
    GaParams params{};
    params.generations = 60;
    const EditorFamily family = one_editor("00", 0.4, EditKind::Delete, 2);
    const auto trace = gae::run_ga(problem, params, family, 91);
    REQUIRE(trace.records.size() == 60);
    double prev = -1.0;
    long total_edits = 0;
    for (const auto& r : trace.records) {
        REQUIRE(r.best_so_far >= prev);
        prev = r.best_so_far;
        REQUIRE(r.diversity >= 0.0);
        REQUIRE(r.diversity <= 1.0);
        total_edits += r.edit_count;
    }
    CHECK(total_edits > 0); // v=0.4 with 00 patterns: editing certainly happened
}

TEST_CASE("tracked schemata add densities to every record") {
    const gae::RoyalRoadS1 problem;
    GaParams params{};
    params.generations = 5;
    const auto& schemata = gae::RoyalRoadS1::schemata();
    const auto trace = gae::run_ga(problem, params, EditorFamily{}, 13, schemata);
    for (const auto& r : trace.records) {
        REQUIRE(r.schema_densities.size() == schemata.size());
        for (const double d : r.schema_densities) {
            REQUIRE(d >= 0.0);
            REQUIRE(d <= 1.0);
        }
    }
}

TEST_CASE("run_ga validates its parameters") {
    const gae::RoyalRoadS1 problem;
    GaParams params{};
    params.population_size = 1;
    CHECK_THROWS_AS(gae::run_ga(problem, params, EditorFamily{}, 1), std::invalid_argument);
    GaParams params2{};
    params2.generations = 0;
    CHECK_THROWS_AS(gae::run_ga(problem, params2, EditorFamily{}, 1), std::invalid_argument);
}

TEST_CASE("an empty family reproduces the reference plain GA byte for byte") {
    GaParams params{};
    params.generations = 40;

    const gae::RoyalRoadS1 rr;
    for (const std::uint64_t seed : {1ull, 99ull, 31337ull}) {
        const auto engine_trace = gae::run_ga(rr, params, EditorFamily{}, seed);
        const auto reference_trace = reference::plain_ga(rr, params, seed);
        REQUIRE(reference::serialize_trace(engine_trace) ==
                reference::serialize_trace(reference_trace));
    }

    const gae::EpistaticMichalewiczProblem mich;
    GaParams params2{};
    params2.population_size = 21; // odd population exercises the half-pair path
    params2.generations = 25;
    const auto engine_trace = gae::run_ga(mich, params2, EditorFamily{}, 424242);
    const auto reference_trace = reference::plain_ga(mich, params2, 424242);
    REQUIRE(reference::serialize_trace(engine_trace) ==
            reference::serialize_trace(reference_trace));
}

} // TEST_SUITE engine
