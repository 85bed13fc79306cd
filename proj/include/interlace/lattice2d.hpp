#pragma once

#include <compare>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "interlace/word.hpp"

namespace interlace {

struct Index2 {
    Index x = 0;
    Index y = 0;
    friend constexpr auto operator<=>(const Index2&, const Index2&) = default;
};

// Square: basis e1, e2. Diamond: basis f1 = (1, 1)/sqrt2, f2 = (-1, 1)/sqrt2.
// The basis only matters for rendering.
enum class LatticeKind { square, diamond };

std::string to_string(LatticeKind kind);

// Exponent of 2 in v; v2(0) is treated as +infinity.
inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();
int v2(Index v);

// Doubly periodic tiling; cells[b * period_x + a] holds (a, b).
class PeriodicTiling2D {
public:
    PeriodicTiling2D(int period_x, int period_y, std::vector<Symbol> cells);
    static PeriodicTiling2D constant(Symbol s) { return PeriodicTiling2D(1, 1, {s}); }

    Symbol at(Index x, Index y) const;
    Symbol at(Index2 p) const { return at(p.x, p.y); }
    int period_x() const { return period_x_; }
    int period_y() const { return period_y_; }
    const std::vector<Symbol>& cells() const { return cells_; }

    friend bool operator==(const PeriodicTiling2D&, const PeriodicTiling2D&) = default;

private:
    int period_x_;
    int period_y_;
    std::vector<Symbol> cells_;
};

// `period 2 2 : SW SE / NW NE` -- rows separated by '/', first row is y = 0.
PeriodicTiling2D parse_tiling(std::string_view text, Alphabet& alphabet);
std::string format_tiling(const PeriodicTiling2D& t, const Alphabet& alphabet);

class Patch2D {
public:
    Patch2D(LatticeKind kind, Interval xs, Interval ys, Cell fill = Cell::null());

    LatticeKind kind() const { return kind_; }
    const Interval& xs() const { return xs_; }
    const Interval& ys() const { return ys_; }
    bool contains(Index2 p) const { return xs_.contains(p.x) && ys_.contains(p.y); }

    const Cell& at(Index2 p) const;
    void set(Index2 p, Cell c);
    const std::vector<Cell>& values() const { return values_; }

    friend bool operator==(const Patch2D&, const Patch2D&) = default;

private:
    std::size_t offset(Index2 p) const;

    LatticeKind kind_;
    Interval xs_;
    Interval ys_;
    std::vector<Cell> values_;
};

template <class T>
using Source2D = std::function<T(Index2)>;

// (A ∩ B) for square A, B; the result lives on the diamond lattice.
template <class T>
T eval_cap_square_square(const Source2D<T>& a, const Source2D<T>& b, Index2 at) {
    const auto [m, n] = at;
    if (floor_mod(m + n, 2) == 0) {
        return a({(m - n) / 2, (m + n) / 2});
    }
    return b({(m - n - 1) / 2, (m + n - 1) / 2});
}

// (A ∩ B) for diamond A and square B; the result lives on the square lattice.
template <class T>
T eval_cap_diamond_square(const Source2D<T>& a, const Source2D<T>& b, Index2 at) {
    const auto [m, n] = at;
    if (floor_mod(m + n, 2) == 0) {
        return a({(m + n) / 2, (-m + n) / 2});
    }
    return b({(m + n - 1) / 2, (-m + n + 1) / 2});
}

// X ∩ A ∩ B, evaluated left to right.
template <class T>
Source2D<T> round_source(Source2D<T> x, Source2D<T> a, Source2D<T> b) {
    Source2D<T> diamond = [x = std::move(x), a = std::move(a)](Index2 p) { return eval_cap_square_square(x, a, p); };
    return [diamond = std::move(diamond), b = std::move(b)](Index2 p) {
        return eval_cap_diamond_square(diamond, b, p);
    };
}

// X(∩A∩B)^rounds at one cell.
template <class T>
T eval_rounds(const Source2D<T>& x, const Source2D<T>& a, const Source2D<T>& b, int rounds, Index2 at) {
    Source2D<T> current = x;
    for (int r = 0; r < rounds; ++r) {
        current = round_source(std::move(current), a, b);
    }
    return current(at);
}

enum class Origin { x, a, b };
std::string to_string(Origin o);

// Closed form of one X ∩ A ∩ B round read backward: X(a, b) lands on
// (2a, 2b), A(a, b) on (2a + 1, 2b + 1), B(a, b) on (a - b + 1, a + b).
struct Preimage {
    Origin source;
    Index2 at;
    friend bool operator==(const Preimage&, const Preimage&) = default;
};
Preimage round_preimage(Index2 out);

struct Layer {
    Origin source;
    int round = 0;
    friend bool operator==(const Layer&, const Layer&) = default;
};

// Which array and which round (counting from 1) first define (x, y) in
// X(∩A∩B)^m. The origin is (X, 0).
Layer definition_layer(Index2 p);

// Patch of one round on `window`; x must be square.
Patch2D round2d(const Source2D<Cell>& x, const PeriodicTiling2D& a, const PeriodicTiling2D& b, Interval xs,
                Interval ys);
Patch2D round2d(const Patch2D& x, const PeriodicTiling2D& a, const PeriodicTiling2D& b, Interval xs, Interval ys);

// X(∩A∩B)^rounds on [-radius, radius]^2.
Patch2D staged_patch2d(const PeriodicTiling2D& x, const PeriodicTiling2D& a, const PeriodicTiling2D& b, int rounds,
                       Index radius);

// Rounds after which every cell of [-radius, radius]^2 is final.
int rounds_to_stabilize(Index radius);

Patch2D limit_patch2d(const PeriodicTiling2D& x, const PeriodicTiling2D& a, const PeriodicTiling2D& b,
                      Index radius);

Source2D<Cell> as_source(const PeriodicTiling2D& t);

}  // namespace interlace
