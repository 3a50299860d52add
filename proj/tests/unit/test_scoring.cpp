#include <doctest.h>

#include <random>

#include "divisive/control.hpp"
#include "divisive/scoring.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace divisive;

TEST_SUITE("scoring") {

TEST_CASE("example Borda scores") {
    const Profile p = load("example1.soc");
    const std::vector<double> expected{0.5, 0.9, 0.1, 0.6, 0.5, 0.4};
    for (Issue a = 0; a < 6; ++a) CHECK(borda(a, p) == doctest::Approx(expected[a]).epsilon(1e-12));
    CHECK(borda(0, p) == borda(4, p));
    CHECK(copeland(1, p) == doctest::Approx(1.0));
    CHECK(copeland(2, p) == doctest::Approx(0.0));
}

TEST_CASE("Borda and Copeland agree with the oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 2 + trial % 5;
        const int n = 1 + trial % 9;
        const auto agents = oracle::random_agents(m, n, rng);
        const Profile p = oracle::profile_of(agents, m);
        for (int a = 0; a < m; ++a) {
            const auto issue = static_cast<Issue>(a);
            CHECK(borda(issue, p) == oracle::to_double(oracle::borda(a, agents, m)));
            CHECK(copeland(issue, p) == oracle::to_double(oracle::copeland(a, agents, m)));
        }
    }
}

TEST_CASE("win rate equals Borda on complete data") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = 2 + trial % 6;
        const auto agents = oracle::random_agents(m, 1 + trial % 13, rng);
        const Profile p = oracle::profile_of(agents, m);
        const auto q = PairwiseProfile::from_profile(p);
        for (Issue a = 0; a < p.num_issues(); ++a) {
            CHECK(std::abs(win_rate(a, q) - borda(a, p)) <= 1e-12);
            CHECK(copeland(a, q) == copeland(a, p));
        }
    }
}

TEST_CASE("win rate on incomplete comparisons") {
    PairwiseProfile q({"a", "b", "c"}, 3);
    q.add(0, 0, 1);
    q.add(1, 1, 0);
    q.add(2, 0, 1);
    q.add(0, 2, 0);
    // a vs b: 2 of 3; a vs c: 0 of 1; b vs c: nobody.
    CHECK(win_rate(0, q) == doctest::Approx((2.0 / 3.0 + 0.0) / 2.0));
    CHECK(win_rate(1, q) == doctest::Approx((1.0 / 3.0) / 2.0));
    CHECK(win_rate(2, q) == doctest::Approx(0.5));
    CHECK(copeland(0, q) == doctest::Approx(0.5));
    CHECK(copeland(1, q) == doctest::Approx(0.0));
    CHECK(score(ScoringRule::Borda, 0, q) == win_rate(0, q));
    CHECK_THROWS_AS(q.add(0, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(q.add(0, 1, 1), std::invalid_argument);
}

TEST_CASE("empty profiles have no score") {
    const Profile p = load("example1.soc");
    const Profile none = restrict(p, SubPopulation({}, 10));
    CHECK_THROWS_AS(borda(0, none), UndefinedScoreError);
    CHECK_THROWS_AS(copeland(0, none), UndefinedScoreError);
    CHECK_THROWS_AS(borda(6, p), std::domain_error);
}

TEST_CASE("scored rankings break ties by issue id") {
    const ScoredRanking r({0.2, 0.7, 0.2 + 1e-15, 0.9});
    REQUIRE(r.size() == 4);
    CHECK(r[0].issue == 3);
    CHECK(r[1].issue == 1);
    CHECK(r[2].issue == 0);
    CHECK(r[3].issue == 2);
    CHECK(r.top() == 3);
    CHECK(r.position_of(0) == 3);
    CHECK(r.ranking().order() == std::vector<Issue>{3, 1, 0, 2});
}

TEST_CASE("agreement ranking of the example") {
    const Profile p = load("example1.soc");
    CHECK(agreement_ranking(p, ScoringRule::Borda).ranking().order() == std::vector<Issue>{1, 3, 0, 4, 5, 2});
}

TEST_CASE("rule names") {
    CHECK(parse_rule("Borda") == ScoringRule::Borda);
    CHECK(parse_rule("copeland") == ScoringRule::Copeland);
    CHECK(parse_rule("winrate") == ScoringRule::WinRate);
    CHECK(to_string(ScoringRule::Copeland) == "copeland");
    CHECK_THROWS_AS(parse_rule("plurality"), std::invalid_argument);
}

}
