#include <doctest.h>

#include "flagdress/errors.hpp"
#include "flagdress/experiment.hpp"
#include "flagdress/generate.hpp"
#include "flagdress/io.hpp"

using namespace flagdress;

TEST_CASE("modes") {
    CHECK(parse_mode("realizable") == ExperimentMode::realizable);
    CHECK(to_string(parse_mode("random-weights")) == "random-weights");
    CHECK_THROWS_AS(parse_mode("bogus"), DomainError);
}

TEST_CASE("zero trials give an empty report") {
    const auto r = possibility_experiment(4, 2, 3, 0, 0, ExperimentMode::random_weights);
    CHECK(r.cells == 0);
    CHECK(r.totals == Quadrants{});
    CHECK(r.counterexamples.empty());
    CHECK_THROWS_AS(possibility_experiment(4, 3, 2, 0, 0, ExperimentMode::realizable), DomainError);
    CHECK_THROWS_AS(possibility_experiment(4, 2, 3, -1, 0, ExperimentMode::realizable), DomainError);
}

TEST_CASE("reports do not depend on the thread count") {
    for (auto mode : {ExperimentMode::random_weights, ExperimentMode::realizable}) {
        const auto one = possibility_experiment(4, 2, 3, 12, 5, mode, 1);
        const auto four = possibility_experiment(4, 2, 3, 12, 5, mode, 4);
        CHECK(to_json(one) == to_json(four));
        const Quadrants& t = one.totals;
        CHECK(t.no_internal_concordant + t.no_internal_not_concordant + t.internal_concordant +
                  t.internal_not_concordant + t.not_applicable + t.non_matroidal ==
              one.cells);
        CHECK(t.non_matroidal == 0); // every instance satisfies the relations
    }
}

TEST_CASE("realizable trials have concordant mixed cells") {
    const auto r = possibility_experiment(5, 2, 3, 10, 0, ExperimentMode::realizable, 1);
    CHECK(r.totals.internal_not_concordant == 0);
    CHECK(r.totals.no_internal_not_concordant == 0);
    CHECK(r.totals.no_internal_concordant > 0);
}

TEST_CASE("trials are reproducible and records replay") {
    const auto a = run_trial(4, 2, 3, ExperimentMode::random_weights, 3, 1234);
    const auto b = run_trial(4, 2, 3, ExperimentMode::random_weights, 3, 1234);
    CHECK(a.tally == b.tally);
    CHECK(a.attempts == b.attempts);

    // A record built by hand from a real cell replays to itself.
    const FlagInstance flag = valid_instance(4, {2, 3}, 1234);
    const auto cells = analyze_cells(WeightedConfig::from_flag(flag));
    REQUIRE_FALSE(cells.empty());
    CounterexampleRecord rec{0, 1234, ExperimentMode::random_weights, flag, cells.back(), "none"};
    const auto again = replay(rec);
    REQUIRE(again);
    CHECK(to_json(*again) == to_json(rec));
    CHECK(to_json(*replay(record_from_json(to_json(rec)))) == to_json(rec));

    rec.analysis.vertices = {0};
    CHECK_FALSE(replay(rec));
}
