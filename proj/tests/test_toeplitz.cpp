#include "doctest.h"
#include "interlace/lattice2d.hpp"
#include "interlace/spec_io.hpp"
#include "interlace/toeplitz.hpp"
#include "oracles.hpp"

using namespace interlace;

namespace {

const char* const kSigma = "base: 0; stage: word=0; stage: word=1";
const char* const kSigmaHat = "base: 0; stage: word=1; stage: word=0";
const char* const kThree = "base: 0; stage: word=0; stage: word=1; stage: word=2";
const char* const kMixed = "base: A; stage: gap=2 word=A; stage: word=B; stage: gap=4 word=C";

bool is_power_of_two(Index v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace

TEST_CASE("expanded_period matches brute-force insertion") {
    for (Index x = 1; x <= 9; ++x) {
        for (int g = 1; g <= 9; ++g) {
            CHECK(expanded_period(x, g) == oracle::brute_expanded_period(x, g));
        }
    }
    CHECK(expanded_period(2, 1) == 4);
    CHECK_THROWS_AS(expanded_period(0, 1), DomainError);
}

TEST_CASE("period_bound of a round") {
    const auto spec = parse_spec(kSigma);
    CHECK(period_bound(1, spec.stages) == 4);
    CHECK(period_bound(1, round_ops(spec, 3)) == 64);
    const auto mixed = parse_spec(kMixed);
    CHECK(period_bound(1, mixed.stages) == 15);
}

TEST_CASE("minimal_period needs three periods") {
    const auto spec = parse_spec(kSigma);
    CHECK(minimal_period(compose(spec, 1, {-20, 20})) == 2);
    CHECK(minimal_period(compose(spec, 2, {-20, 20})) == 8);
    CHECK_THROWS_AS(minimal_period(compose(spec, 3, {-20, 20})), InsufficientDataError);
    const auto nulls = compose(spec, 1, {-20, 20}, NullWord{true});
    CHECK(minimal_period(nulls, NullComparison::any_null_equal) == 4);
}

TEST_CASE("window certificates find the smallest valid candidate") {
    const auto spec = parse_spec(kSigma);
    const auto lim = limit_window(spec, 200);
    const auto cands = candidate_periods(spec, 401);
    const auto c2 = certify_periodic_part(lim.window, 2, cands);
    REQUIRE(c2);
    CHECK(c2->period == 2);
    const auto c3 = certify_periodic_part(lim.window, 3, cands);
    REQUIRE(c3);
    CHECK(c3->period == 4);
    CHECK_FALSE(certify_periodic_part(lim.window, 1, cands));
}

TEST_CASE("traced periods are exact periods of the limit") {
    for (const auto* text : {kSigma, kSigmaHat, kThree, kMixed}) {
        const auto spec = parse_spec(text);
        const auto lim = limit_window(spec, 600);
        const auto ops = round_ops(spec, lim.rounds_used);
        for (Index i = -40; i <= 40; ++i) {
            const auto t = trace_position(ops, i);
            if (i == 1) {
                CHECK_FALSE(t);
                continue;
            }
            REQUIRE(t);
            CHECK(t->value == lim.window.at(i));
            const Index p = reduce_period(ops, i, *t);
            CHECK(t->period % p == 0);
            for (Index j = i - p * ((i + 600) / p); j <= 600; j += p) {
                CHECK(lim.window.at(j) == t->value);
            }
        }
    }
}

TEST_CASE("almost_toeplitz_check leaves only the seed") {
    for (const auto* text : {kSigma, kSigmaHat, kThree, kMixed}) {
        const auto spec = parse_spec(text);
        const auto r = almost_toeplitz_check(spec, 64);
        CHECK(r.uncertified == std::vector<Index>{1});
        CHECK(r.uncertified_is_seed());
        CHECK(r.certified.size() + r.uncertified.size() == 129);
    }
}

TEST_CASE("gap-1 certificates have power-of-two periods") {
    for (const auto* text : {kSigma, kSigmaHat}) {
        const auto r = almost_toeplitz_check(parse_spec(text), 128);
        for (const auto& c : r.certified) {
            CHECK(is_power_of_two(c.period));
            // a position defined by the k-th op from outside has period dividing 2^k
            const Index k = v2(c.position - 1) + 1;
            CHECK((Index{1} << k) % c.period == 0);
        }
    }
    const auto three = almost_toeplitz_check(parse_spec(kThree), 64);
    for (const auto& c : three.certified) {
        CHECK(is_power_of_two(c.period));
    }
}

TEST_CASE("certificates do not shrink when the radius grows") {
    const auto spec = parse_spec(kThree);
    const auto small = almost_toeplitz_check(spec, 32);
    const auto big = almost_toeplitz_check(spec, 64);
    for (const auto& c : small.certified) {
        const auto it = std::find_if(big.certified.begin(), big.certified.end(),
                                     [&](const auto& d) { return d.position == c.position; });
        REQUIRE(it != big.certified.end());
        CHECK(it->period == c.period);
    }
}

TEST_CASE("constant spec is certified with period 1 everywhere") {
    const auto r = almost_toeplitz_check(parse_spec("base: 0; stage: word=0"), 16);
    for (const auto& c : r.certified) {
        CHECK(c.period == 1);
    }
    CHECK(r.uncertified == std::vector<Index>{1});
}

TEST_CASE("report json round-trips") {
    const auto r = almost_toeplitz_check(parse_spec(kSigma), 8);
    const auto back = toeplitz_report_from_json(to_json(r));
    CHECK(back.certified == r.certified);
    CHECK(back.uncertified == r.uncertified);
    CHECK(back.seed_positions == r.seed_positions);
    CHECK(back.analysis_range == r.analysis_range);
    CHECK_THROWS_AS(toeplitz_report_from_json("{}"), ParseError);
}
