#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "interlace/error.hpp"

namespace interlace {

using Index = std::int64_t;

// Mathematical modulus: result always in [0, m).
constexpr Index floor_mod(Index a, Index m) {
    const Index r = a % m;
    return r < 0 ? r + m : r;
}

// Floor division (rounds toward negative infinity).
constexpr Index floor_div(Index a, Index m) {
    const Index q = a / m;
    return (a % m != 0 && ((a < 0) != (m < 0))) ? q - 1 : q;
}

struct Symbol {
    std::uint32_t id = 0;
    friend constexpr auto operator<=>(Symbol, Symbol) = default;
};

// One array position: a symbol, or the null point. Null points may carry a
// tag (the position of the base cell they came from) so that compositions
// run on a distinct-marker null word can be traced back.
class Cell {
public:
    constexpr Cell() = default;

    static constexpr Cell of(Symbol s) { return Cell{Kind::symbol, s.id}; }
    static constexpr Cell null() { return Cell{Kind::null, 0}; }
    static constexpr Cell marker(Index tag) { return Cell{Kind::marker, tag}; }

    constexpr bool is_symbol() const { return kind_ == Kind::symbol; }
    // True for plain and tagged null points alike.
    constexpr bool is_null() const { return kind_ != Kind::symbol; }
    constexpr bool is_marker() const { return kind_ == Kind::marker; }

    Symbol symbol() const;
    Index tag() const;

    friend constexpr bool operator==(const Cell&, const Cell&) = default;

private:
    enum class Kind : std::uint8_t { null, marker, symbol };
    constexpr Cell(Kind k, Index payload) : kind_(k), payload_(payload) {}

    Kind kind_ = Kind::null;
    Index payload_ = 0;
};

// Labels of the user alphabet. "*" and "∗" are reserved for the null point.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(const std::vector<std::string>& labels);

    // Returns the symbol for `label`, adding it if new.
    Symbol intern(std::string_view label);
    std::optional<Symbol> find(std::string_view label) const;
    const std::string& label(Symbol s) const;
    std::string label(const Cell& c) const;

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

    static bool is_null_label(std::string_view label);

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> labels_;
};

// A periodic bi-infinite word given by one period.
class PeriodicWord {
public:
    explicit PeriodicWord(std::vector<Symbol> cells);

    static PeriodicWord constant(Symbol s) { return PeriodicWord({s}); }

    Symbol at(Index i) const { return cells_[static_cast<std::size_t>(floor_mod(i, period()))]; }
    Index period() const { return static_cast<Index>(cells_.size()); }
    const std::vector<Symbol>& cells() const { return cells_; }

    friend bool operator==(const PeriodicWord&, const PeriodicWord&) = default;

private:
    std::vector<Symbol> cells_;
};

Symbol eval_periodic(const PeriodicWord& w, Index i);

// Closed integer interval [lo, hi].
struct Interval {
    Index lo = 0;
    Index hi = 0;

    Index size() const { return hi - lo + 1; }
    bool contains(Index i) const { return lo <= i && i <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

// A finite view [lo, hi] of a Z-array.
class Window1D {
public:
    Window1D(Interval domain, std::vector<Cell> values);
    Window1D(Interval domain, Cell fill);

    static Window1D from_periodic(const PeriodicWord& w, Interval domain);

    const Interval& domain() const { return domain_; }
    Index lo() const { return domain_.lo; }
    Index hi() const { return domain_.hi; }

    const Cell& at(Index i) const;
    void set(Index i, Cell c);
    // Sub-window over `range`; throws DomainError when not covered.
    Window1D slice(Interval range) const;

    const std::vector<Cell>& values() const { return values_; }

    friend bool operator==(const Window1D&, const Window1D&) = default;

private:
    Interval domain_;
    std::vector<Cell> values_;
};

// True iff u and v agree at every position of [lo, hi] (null points included).
bool window_equal(const Window1D& u, const Window1D& v, Index lo, Index hi);

// Whitespace-separated tokens; null labels are rejected.
PeriodicWord parse_word(std::string_view text, Alphabet& alphabet);

std::string format_word(const PeriodicWord& w, const Alphabet& alphabet);
std::string format_cells(const std::vector<Cell>& cells, const Alphabet& alphabet);

}  // namespace interlace
