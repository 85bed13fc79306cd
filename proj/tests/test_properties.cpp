// Randomized and exhaustive property checks. Every generator is seeded, so a
// failure reproduces exactly.

#include <numeric>
#include <random>

#include "doctest.h"
#include "interlace/robinson.hpp"
#include "interlace/spec_io.hpp"
#include "interlace/substitution.hpp"
#include "interlace/toeplitz.hpp"
#include "oracles.hpp"

using namespace interlace;

namespace {

const std::vector<const char*> kGolden{
    "base: 0; stage: word=0; stage: word=1",
    "base: 0; stage: word=1; stage: word=0",
    "base: 0; stage: word=0; stage: word=1; stage: word=2",
    "base: A; stage: gap=2 word=A; stage: word=B; stage: gap=4 word=C",
};

// Random spec over letters a..d: 1-3 stages, gaps 1-4, word periods 1-3.
InterlaceSpec random_spec(std::mt19937& rng) {
    std::uniform_int_distribution<int> n_stages(1, 3);
    std::uniform_int_distribution<int> gap(1, 4);
    std::uniform_int_distribution<int> period(1, 3);
    std::uniform_int_distribution<int> letter(0, 3);
    const auto word = [&] {
        std::string w;
        for (int i = period(rng); i > 0; --i) {
            w += std::string(w.empty() ? "" : " ") + static_cast<char>('a' + letter(rng));
        }
        return w;
    };
    std::string text = "base: " + word();
    for (int i = n_stages(rng); i > 0; --i) {
        text += "; stage: gap=" + std::to_string(gap(rng)) + " word=" + word();
    }
    return parse_spec(text);
}

}  // namespace

TEST_CASE("periodic evaluation is invariant under whole periods") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<Index> pos(-100000, 100000);
    std::uniform_int_distribution<Index> mult(-50, 50);
    for (int t = 0; t < 40; ++t) {
        const auto spec = random_spec(rng);
        const auto& w = spec.base;
        for (int s = 0; s < 50; ++s) {
            const Index i = pos(rng);
            CHECK(eval_periodic(w, i + mult(rng) * w.period()) == eval_periodic(w, i));
        }
    }
}

TEST_CASE("window_equal is an equivalence") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coin(0, 1);
    const Interval range{-6, 6};
    std::vector<Window1D> ws;
    for (int t = 0; t < 12; ++t) {
        Window1D w(range, Cell::null());
        for (Index i = range.lo; i <= range.hi; ++i) {
            w.set(i, coin(rng) ? Cell::of({0}) : Cell::null());
        }
        ws.push_back(w);
    }
    for (const auto& u : ws) {
        CHECK(window_equal(u, u, -6, 6));
        for (const auto& v : ws) {
            CHECK(window_equal(u, v, -3, 3) == window_equal(v, u, -3, 3));
            for (const auto& w : ws) {
                if (window_equal(u, v, -3, 3) && window_equal(v, w, -3, 3)) {
                    CHECK(window_equal(u, w, -3, 3));
                }
            }
        }
    }
}

TEST_CASE("defined cells never change in later rounds") {
    std::mt19937 rng(3);
    std::vector<InterlaceSpec> specs;
    for (const auto* t : kGolden) {
        specs.push_back(parse_spec(t));
    }
    for (int t = 0; t < 6; ++t) {
        specs.push_back(random_spec(rng));
    }
    const Interval range{-60, 60};
    for (const auto& spec : specs) {
        std::vector<Window1D> runs;
        for (int m = 0; m <= 6; ++m) {
            runs.push_back(compose(spec, m, range, NullWord{true}));
        }
        for (int m = 0; m <= 6; ++m) {
            for (int k = 0; m + k <= 6; ++k) {
                for (Index q = range.lo; q <= range.hi; ++q) {
                    const Cell& c = runs[static_cast<std::size_t>(m)].at(q);
                    if (c.is_symbol()) {
                        CHECK(runs[static_cast<std::size_t>(m + k)].at(q) == c);
                    }
                }
            }
        }
    }
}

TEST_CASE("compose on a small range is the restriction of a larger one") {
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        const auto spec = random_spec(rng);
        for (const Index r : {5, 17, 40}) {
            const auto small = compose(spec, 3, {-r, r});
            const auto large = compose(spec, 3, {-2 * r, 2 * r});
            CHECK(small == large.slice({-r, r}));
        }
    }
}

TEST_CASE("position 1 keeps its base letter and 1..min gap survive every stage") {
    std::mt19937 rng(13);
    for (int t = 0; t < 40; ++t) {
        const auto spec = random_spec(rng);
        for (int m = 0; m <= 6; ++m) {
            CHECK(compose(spec, m, {1, 1}).at(1) == Cell::of(spec.base.at(1)));
        }
        int min_gap = spec.stages.front().gap;
        for (const auto& s : spec.stages) {
            min_gap = std::min(min_gap, s.gap);
        }
        for (const auto& s : spec.stages) {
            const auto w = cap_n(spec.base, s.word, s.gap, {1, min_gap});
            for (Index i = 1; i <= min_gap; ++i) {
                CHECK(w.at(i) == Cell::of(spec.base.at(i)));
            }
        }
    }
}

TEST_CASE("expanded_period algebraic identity") {
    for (Index x = 1; x <= 12; ++x) {
        for (int g = 1; g <= 12; ++g) {
            CHECK(expanded_period(x, g) * g == std::lcm(x, static_cast<Index>(g)) * (g + 1));
        }
    }
}

TEST_CASE("minimal period divides the period bound") {
    std::mt19937 rng(17);
    int checked = 0;
    for (int t = 0; t < 60 && checked < 25; ++t) {
        const auto spec = random_spec(rng);
        for (int m = 1; m <= 2; ++m) {
            const Index bound = period_bound(spec.base.period(), round_ops(spec, m));
            if (bound > 3000) {
                continue;
            }
            const Index p = minimal_period(compose(spec, m, {-1 - 3 * bound, 3 * bound}));
            CHECK(bound % p == 0);
            ++checked;
        }
    }
    CHECK(checked >= 10);
    const auto sigma = parse_spec(kGolden[0]);
    for (int m = 1; m <= 5; ++m) {
        CHECK(minimal_period(compose(sigma, m, {-2048, 2048})) == Index{1} << (2 * m - 1));
    }
}

TEST_CASE("substitution growth, prefix extension and anchoring") {
    for (const auto* text : kGolden) {
        const auto spec = parse_spec(text);
        const auto sub = derive_substitution(spec).substitution;
        REQUIRE(verify_fixed_point(sub, spec, 256));
        std::vector<Symbol> w = sub.seed;
        for (int it = 0; it < 4; ++it) {
            const auto next = apply_substitution(sub, w);
            CHECK(static_cast<Index>(next.size()) * sub.block_len == static_cast<Index>(w.size()) * sub.image_len());
            CHECK(std::equal(w.begin(), w.end(), next.begin()));
            CHECK(next.front() == sub.seed.front());
            const std::size_t whole = next.size() - next.size() % static_cast<std::size_t>(sub.block_len);
            w.assign(next.begin(), next.begin() + static_cast<std::ptrdiff_t>(whole));
        }
    }
}

TEST_CASE("expansion from the seed agrees with the limit to radius 1000") {
    for (const auto* text : kGolden) {
        const auto spec = parse_spec(text);
        const auto sub = derive_substitution(spec).substitution;
        const auto w = expand_from_seed(sub, 1000);
        const auto lim = limit_window(spec, 1000);
        for (Index i = 1; i <= 1000; ++i) {
            CHECK(lim.window.at(i) == Cell::of(w[static_cast<std::size_t>(i - 1)]));
        }
    }
}

TEST_CASE("one round doubles X cells") {
    using Tag = oracle::Tag;
    const auto tagged = [](Origin o) { return Source2D<Tag>([o](Index2 q) { return Tag{o, q}; }); };
    const auto one = round_source(tagged(Origin::x), tagged(Origin::a), tagged(Origin::b));
    for (Index a = -32; a <= 32; ++a) {
        for (Index b = -32; b <= 32; ++b) {
            CHECK(one({2 * a, 2 * b}) == Tag{Origin::x, {a, b}});
        }
    }
}

TEST_CASE("limit patch at R is the restriction of the limit patch at 2R") {
    const auto a = robinson_A();
    Alphabet al;
    const auto b = parse_tiling("period 3 1 : p q r", al);
    const auto x = parse_tiling("period 1 2 : s / t", al);
    for (const Index r : {3, 8, 13, 32}) {
        const auto small = limit_patch2d(x, a, b, r);
        const auto big = limit_patch2d(x, a, b, 2 * r);
        for (Index i = -r; i <= r; ++i) {
            for (Index j = -r; j <= r; ++j) {
                CHECK(small.at({i, j}) == big.at({i, j}));
            }
        }
    }
}

TEST_CASE("layer densities quarter per layer") {
    const Index L = 64;
    std::map<std::pair<Origin, int>, Index> counts;
    for (Index x = -L; x <= L; ++x) {
        for (Index y = -L; y <= L; ++y) {
            const auto l = definition_layer({x, y});
            ++counts[{l.source, l.round}];
        }
    }
    const double cells = static_cast<double>((2 * L + 1) * (2 * L + 1));
    for (int j = 1; j <= 5; ++j) {
        const double scale = 1.0 / static_cast<double>(Index{1} << (2 * (j - 1)));
        CHECK(std::abs(counts[{Origin::b, j}] - cells / 2 * scale) <= 4.0 * L);
        CHECK(std::abs(counts[{Origin::a, j}] - cells / 4 * scale) <= 4.0 * L);
    }
    CHECK(counts[{Origin::x, 0}] == 1);
}

TEST_CASE("marks sit where v2(x) = v2(y) and carry the A letter of their preimage") {
    const Index r = 64;
    const auto p = generate_robinson(r);
    const auto a = robinson_A();
    for (Index x = -r; x <= r; ++x) {
        for (Index y = -r; y <= r; ++y) {
            const bool origin = x == 0 && y == 0;
            const bool marked = to_mark(p.at({x, y})) != CornerMark::blank;
            CHECK(marked == (!origin && v2(x) == v2(y)));
            if (marked) {
                const int k = v2(x);
                const Index ax = floor_div(x / (Index{1} << k) - 1, 2);
                const Index ay = floor_div(y / (Index{1} << k) - 1, 2);
                CHECK(p.at({x, y}) == Cell::of(a.at(ax, ay)));
            }
        }
    }
    CHECK(verify_hierarchy(generate_robinson(63), 3).ok());
}
