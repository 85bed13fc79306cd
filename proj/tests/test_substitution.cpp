#include "doctest.h"
#include "interlace/spec_io.hpp"
#include "interlace/substitution.hpp"
#include "oracles.hpp"

using namespace interlace;

namespace {

std::string letters(const std::vector<Symbol>& w, const Alphabet& a) {
    std::string out;
    for (const auto s : w) {
        out += (out.empty() ? "" : " ") + a.label(s);
    }
    return out;
}

}  // namespace

TEST_CASE("derived substitutions for the constant-word specs") {
    struct Case {
        const char* spec;
        const char* text;
    };
    for (const auto& c : {Case{"base: 0; stage: word=0; stage: word=1", "n=1; L=4; template = x1 1 0 1; seed = 0"},
                          Case{"base: 0; stage: word=1; stage: word=0", "n=1; L=4; template = x1 0 1 0; seed = 0"},
                          Case{"base: 0; stage: word=0; stage: word=1; stage: word=2",
                               "n=1; L=8; template = x1 2 1 2 0 2 1 2; seed = 0"}}) {
        const auto spec = parse_spec(c.spec);
        const auto d = derive_substitution(spec);
        CHECK(to_text(d.substitution) == c.text);
        CHECK(d.trace.seed_positions == std::vector<Index>{1});
        CHECK(verify_fixed_point(d.substitution, spec, 512));
    }
}

TEST_CASE("derived substitution for mixed gaps") {
    const auto spec = parse_spec("base: A; stage: gap=2 word=A; stage: word=B; stage: gap=4 word=C");
    const auto d = derive_substitution(spec);
    CHECK(d.substitution.block_len == 4);
    CHECK(d.substitution.image_len() == 15);
    CHECK(format_cells(d.trace.period_word, spec.alphabet) == "* B * B C A B * B C * B A B C");
    CHECK(d.trace.null_slots == std::vector<int>{1, 3, 8, 11});
    CHECK(letters(d.substitution.seed, spec.alphabet) == "A B B B");
    CHECK(d.trace.rounds_for_seed == 2);
    CHECK(verify_fixed_point(d.substitution, spec, 600));
}

TEST_CASE("expansion from the seed reproduces the literal limit") {
    for (const auto* text : {"base: 0; stage: word=0; stage: word=1", "base: 0; stage: word=1; stage: word=0",
                             "base: A; stage: gap=2 word=A; stage: word=B; stage: gap=4 word=C",
                             "base: a b; stage: gap=3 word=c d; stage: gap=2 word=e"}) {
        const auto spec = parse_spec(text);
        const auto d = derive_substitution(spec);
        const auto w = expand_from_seed(d.substitution, 300);
        // the sparsest spec here halves its undefined cells per round
        const auto lit = oracle::compose(spec, 14, oracle::periodic(spec.base), 400);
        for (Index i = 1; i <= 300; ++i) {
            CHECK(Cell::of(w[static_cast<std::size_t>(i - 1)]) == lit.at(i));
        }
    }
}

TEST_CASE("apply_substitution works blockwise") {
    Alphabet a;
    const auto zero = a.intern("0");
    const auto one = a.intern("1");
    BlockSubstitution s{1, {TemplateCell::slot(1), TemplateCell::constant(one), TemplateCell::constant(zero),
                            TemplateCell::constant(one)}, {zero}, a};
    const std::vector<Symbol> in{zero, one};
    CHECK(letters(apply_substitution(s, in), a) == "0 1 0 1 1 1 0 1");
    CHECK(letters(expand_from_seed(s, 6), a) == "0 1 0 1 1 1");
    CHECK(letterwise(s) == std::vector<std::string>{"0 -> 0 1 0 1", "1 -> 1 1 0 1"});
    const std::vector<Cell> cells{Cell::null()};
    const auto out = apply_substitution_cells(s, cells);
    CHECK(out[0].is_null());
    CHECK(out[1] == Cell::of(one));
}

TEST_CASE("validation rejects malformed templates") {
    Alphabet a;
    const auto zero = a.intern("0");
    BlockSubstitution too_short{1, {TemplateCell::slot(1)}, {zero}, a};
    CHECK_THROWS_AS(too_short.validate(), DerivationError);
    BlockSubstitution unused{2, {TemplateCell::slot(1), TemplateCell::constant(zero), TemplateCell::constant(zero)},
                             {zero, zero}, a};
    CHECK_THROWS_AS(unused.validate(), DerivationError);
    BlockSubstitution outside{1, {TemplateCell::slot(2), TemplateCell::constant(zero)}, {zero}, a};
    CHECK_THROWS_AS(outside.validate(), DerivationError);
}

TEST_CASE("equality ignores slot names") {
    Alphabet a;
    const auto c = TemplateCell::constant(a.intern("c"));
    const auto s0 = a.intern("s");
    BlockSubstitution x{2, {TemplateCell::slot(1), c, TemplateCell::slot(2)}, {s0, s0}, a};
    BlockSubstitution y{2, {TemplateCell::slot(2), c, TemplateCell::slot(1)}, {s0, s0}, a};
    CHECK(x == y);
    CHECK(y.canonical().image == x.image);
    BlockSubstitution z{2, {TemplateCell::slot(1), TemplateCell::slot(2), c}, {s0, s0}, a};
    CHECK_FALSE(x == z);
}

TEST_CASE("text and json forms round-trip") {
    const auto spec = parse_spec("base: A; stage: gap=2 word=A; stage: word=B; stage: gap=4 word=C");
    const auto sub = derive_substitution(spec).substitution;
    const auto back = substitution_from_text(to_text(sub), spec.alphabet);
    CHECK(back == sub);
    CHECK(to_text(back) == to_text(sub));
    const auto from_json = substitution_from_json(to_json(sub));
    CHECK(from_json == sub);
    CHECK(to_json(from_json) == to_json(sub));
    CHECK_THROWS_AS(substitution_from_text("n=1; L=3; template = x1 0", spec.alphabet), ParseError);
    CHECK_THROWS_AS(substitution_from_json("[]"), ParseError);
}

TEST_CASE("verify_fixed_point rejects a wrong substitution") {
    const auto spec = parse_spec("base: 0; stage: word=0; stage: word=1");
    auto sub = derive_substitution(spec).substitution;
    std::swap(sub.image[1], sub.image[2]);
    CHECK_FALSE(verify_fixed_point(sub, spec, 64));
    auto bad_seed = derive_substitution(spec).substitution;
    bad_seed.seed[0] = *spec.alphabet.find("1");
    CHECK_THROWS_AS(verify_fixed_point(bad_seed, spec, 64), VerificationError);
}
