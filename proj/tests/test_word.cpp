#include "doctest.h"
#include "interlace/word.hpp"

using namespace interlace;

TEST_CASE("floor_mod and floor_div round toward negative infinity") {
    CHECK(floor_mod(-1, 4) == 3);
    CHECK(floor_mod(-4, 4) == 0);
    CHECK(floor_mod(5, 4) == 1);
    CHECK(floor_div(-1, 4) == -1);
    CHECK(floor_div(-4, 4) == -1);
    CHECK(floor_div(-5, 4) == -2);
    CHECK(floor_div(7, 4) == 1);
    for (Index a = -50; a <= 50; ++a) {
        for (Index m = 1; m <= 7; ++m) {
            CHECK(floor_div(a, m) * m + floor_mod(a, m) == a);
        }
    }
}

TEST_CASE("cells distinguish symbols, nulls and markers") {
    const Cell s = Cell::of({3});
    CHECK(s.is_symbol());
    CHECK_FALSE(s.is_null());
    CHECK(s.symbol().id == 3);
    CHECK(Cell::null().is_null());
    CHECK_FALSE(Cell::null().is_marker());
    CHECK(Cell::marker(-7).is_null());
    CHECK(Cell::marker(-7).tag() == -7);
    CHECK(Cell::marker(1) != Cell::marker(2));
    CHECK_THROWS_AS(Cell::null().symbol(), DomainError);
}

TEST_CASE("alphabet interns labels and reserves the null label") {
    Alphabet a;
    const Symbol zero = a.intern("0");
    CHECK(a.intern("1").id == 1);
    CHECK(a.intern("0") == zero);
    CHECK(a.find("1").has_value());
    CHECK_FALSE(a.find("2").has_value());
    CHECK(a.label(Cell::null()) == "*");
    CHECK(Alphabet::is_null_label("*"));
    CHECK(Alphabet::is_null_label("∗"));
    CHECK_THROWS_AS(a.intern("*"), ParseError);
}

TEST_CASE("periodic words evaluate at negative positions") {
    Alphabet a;
    const auto w = parse_word("0 1 2", a);
    CHECK(w.period() == 3);
    CHECK(a.label(w.at(-1)) == "2");
    CHECK(a.label(w.at(-3)) == "0");
    CHECK(a.label(eval_periodic(w, 7)) == "1");
    CHECK(format_word(w, a) == "0 1 2");
    CHECK_THROWS_AS(parse_word("", a), ParseError);
    CHECK_THROWS_AS(parse_word("0 * 1", a), ParseError);
}

TEST_CASE("windows check their domain") {
    Alphabet a;
    const auto w = parse_word("0 1", a);
    Window1D win = Window1D::from_periodic(w, {-3, 3});
    CHECK(win.domain().size() == 7);
    CHECK(win.at(-3) == Cell::of(w.at(-3)));
    CHECK_THROWS_AS(win.at(4), DomainError);
    win.set(0, Cell::null());
    CHECK(win.at(0).is_null());
    const auto s = win.slice({-1, 1});
    CHECK(s.lo() == -1);
    CHECK(s.at(0).is_null());
    CHECK_THROWS_AS(win.slice({-5, 0}), DomainError);
    CHECK(window_equal(win, s, -1, 1));
    CHECK(format_cells(s.values(), a) == "1 * 1");
}
