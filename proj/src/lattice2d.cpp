#include "interlace/lattice2d.hpp"

#include <bit>
#include <sstream>

namespace interlace {

std::string to_string(LatticeKind kind) { return kind == LatticeKind::square ? "square" : "diamond"; }

std::string to_string(Origin o) {
    switch (o) {
        case Origin::x: return "X";
        case Origin::a: return "A";
        case Origin::b: return "B";
    }
    return "?";
}

int v2(Index v) {
    if (v == 0) {
        return kInfiniteValuation;
    }
    return std::countr_zero(static_cast<std::uint64_t>(v));
}

PeriodicTiling2D::PeriodicTiling2D(int period_x, int period_y, std::vector<Symbol> cells)
    : period_x_(period_x), period_y_(period_y), cells_(std::move(cells)) {
    if (period_x_ < 1 || period_y_ < 1) {
        throw ParseError("tiling periods must be >= 1");
    }
    if (cells_.size() != static_cast<std::size_t>(period_x_) * static_cast<std::size_t>(period_y_)) {
        throw ParseError("tiling needs " + std::to_string(period_x_ * period_y_) + " cells, got " +
                         std::to_string(cells_.size()));
    }
}

Symbol PeriodicTiling2D::at(Index x, Index y) const {
    const auto a = floor_mod(x, period_x_);
    const auto b = floor_mod(y, period_y_);
    return cells_[static_cast<std::size_t>(b * period_x_ + a)];
}

PeriodicTiling2D parse_tiling(std::string_view text, Alphabet& alphabet) {
    std::istringstream in{std::string(text)};
    std::string word;
    int px = 0;
    int py = 0;
    std::string colon;
    if (!(in >> word) || word != "period" || !(in >> px >> py) || !(in >> colon) || colon != ":") {
        throw ParseError("tiling must start with 'period <px> <py> :'");
    }
    std::vector<std::vector<Symbol>> rows(1);
    std::string tok;
    while (in >> tok) {
        if (tok == "/") {
            rows.emplace_back();
        } else {
            rows.back().push_back(alphabet.intern(tok));
        }
    }
    if (static_cast<int>(rows.size()) != py) {
        throw ParseError("tiling declares " + std::to_string(py) + " rows, found " + std::to_string(rows.size()));
    }
    std::vector<Symbol> cells;
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != px) {
            throw ParseError("tiling row has " + std::to_string(r.size()) + " cells, expected " + std::to_string(px));
        }
        cells.insert(cells.end(), r.begin(), r.end());
    }
    return PeriodicTiling2D(px, py, std::move(cells));
}

std::string format_tiling(const PeriodicTiling2D& t, const Alphabet& alphabet) {
    std::string out = "period " + std::to_string(t.period_x()) + " " + std::to_string(t.period_y()) + " :";
    for (int b = 0; b < t.period_y(); ++b) {
        if (b > 0) {
            out += " /";
        }
        for (int a = 0; a < t.period_x(); ++a) {
            out += " " + alphabet.label(t.at(a, b));
        }
    }
    return out;
}

Patch2D::Patch2D(LatticeKind kind, Interval xs, Interval ys, Cell fill) : kind_(kind), xs_(xs), ys_(ys) {
    if (xs.lo > xs.hi || ys.lo > ys.hi) {
        throw DomainError("patch needs lo <= hi on both axes");
    }
    values_.assign(static_cast<std::size_t>(xs.size() * ys.size()), fill);
}

std::size_t Patch2D::offset(Index2 p) const {
    if (!contains(p)) {
        throw DomainError("cell (" + std::to_string(p.x) + ", " + std::to_string(p.y) + ") outside patch");
    }
    return static_cast<std::size_t>((p.y - ys_.lo) * xs_.size() + (p.x - xs_.lo));
}

const Cell& Patch2D::at(Index2 p) const { return values_[offset(p)]; }

void Patch2D::set(Index2 p, Cell c) { values_[offset(p)] = c; }

Preimage round_preimage(Index2 out) {
    const auto [m, n] = out;
    if (floor_mod(m + n, 2) == 1) {
        return {Origin::b, {(m + n - 1) / 2, (n - m + 1) / 2}};
    }
    if (floor_mod(n, 2) == 1) {
        return {Origin::a, {(m - 1) / 2, (n - 1) / 2}};
    }
    return {Origin::x, {m / 2, n / 2}};
}

Layer definition_layer(Index2 p) {
    if (p.x == 0 && p.y == 0) {
        return {Origin::x, 0};
    }
    const int j = std::min(v2(p.x), v2(p.y));
    const Index x = p.x / (Index{1} << j);
    const Index y = p.y / (Index{1} << j);
    if (floor_mod(x + y, 2) == 1) {
        return {Origin::b, j + 1};
    }
    return {Origin::a, j + 1};
}

Source2D<Cell> as_source(const PeriodicTiling2D& t) {
    return [t](Index2 p) { return Cell::of(t.at(p)); };
}

namespace {

Patch2D fill_patch(const Source2D<Cell>& src, Interval xs, Interval ys) {
    Patch2D out(LatticeKind::square, xs, ys);
    for (Index y = ys.lo; y <= ys.hi; ++y) {
        for (Index x = xs.lo; x <= xs.hi; ++x) {
            out.set({x, y}, src({x, y}));
        }
    }
    return out;
}

}  // namespace

Patch2D round2d(const Source2D<Cell>& x, const PeriodicTiling2D& a, const PeriodicTiling2D& b, Interval xs,
                Interval ys) {
    return fill_patch(round_source(x, as_source(a), as_source(b)), xs, ys);
}

Patch2D round2d(const Patch2D& x, const PeriodicTiling2D& a, const PeriodicTiling2D& b, Interval xs, Interval ys) {
    if (x.kind() != LatticeKind::square) {
        throw DomainError("round2d needs a square-kind input patch");
    }
    return round2d([&x](Index2 p) { return x.at(p); }, a, b, xs, ys);
}

Patch2D staged_patch2d(const PeriodicTiling2D& x, const PeriodicTiling2D& a, const PeriodicTiling2D& b, int rounds,
                       Index radius) {
    if (rounds < 0 || radius < 0) {
        throw DomainError("rounds and radius must be non-negative");
    }
    const Interval r{-radius, radius};
    Source2D<Cell> current = as_source(x);
    for (int k = 0; k < rounds; ++k) {
        current = round_source(std::move(current), as_source(a), as_source(b));
    }
    return fill_patch(current, r, r);
}

int rounds_to_stabilize(Index radius) {
    if (radius < 1) {
        throw DomainError("radius must be >= 1");
    }
    // ceil(log2(radius)) + 1
    return static_cast<int>(std::bit_width(static_cast<std::uint64_t>(radius - 1))) + 1;
}

Patch2D limit_patch2d(const PeriodicTiling2D& x, const PeriodicTiling2D& a, const PeriodicTiling2D& b,
                      Index radius) {
    return staged_patch2d(x, a, b, rounds_to_stabilize(radius), radius);
}

}  // namespace interlace
