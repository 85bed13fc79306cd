#include "interlace/robinson.hpp"

#include <algorithm>
#include <array>

namespace interlace {

namespace {

using Corners = std::array<CornerMark, 4>;  // LL, LR, UL, UR

constexpr Corners kInward{CornerMark::sw, CornerMark::se, CornerMark::nw, CornerMark::ne};
constexpr Corners kOutward{CornerMark::ne, CornerMark::nw, CornerMark::se, CornerMark::sw};

const Corners& arrangement(Chirality c) { return c == Chirality::inward ? kInward : kOutward; }

}  // namespace

const Alphabet& robinson_alphabet() {
    static const Alphabet alphabet({".", "SW", "SE", "NW", "NE"});
    return alphabet;
}

Symbol to_symbol(CornerMark m) { return Symbol{static_cast<std::uint32_t>(m)}; }

CornerMark to_mark(Symbol s) {
    if (s.id > static_cast<std::uint32_t>(CornerMark::ne)) {
        throw DomainError("symbol " + std::to_string(s.id) + " is not a corner mark");
    }
    return static_cast<CornerMark>(s.id);
}

CornerMark to_mark(const Cell& c) { return c.is_symbol() ? to_mark(c.symbol()) : CornerMark::blank; }

std::string to_string(CornerMark m) { return robinson_alphabet().label(to_symbol(m)); }

std::string to_string(Chirality c) { return c == Chirality::inward ? "inward" : "outward"; }

PeriodicTiling2D robinson_A() {
    // Frozen result of search_robinson_assignments(); test_robinson re-runs the search.
    return PeriodicTiling2D(2, 2,
                            {to_symbol(CornerMark::sw), to_symbol(CornerMark::se),  //
                             to_symbol(CornerMark::nw), to_symbol(CornerMark::ne)});
}

PeriodicTiling2D robinson_blank() { return PeriodicTiling2D::constant(to_symbol(CornerMark::blank)); }

std::vector<PeriodicTiling2D> search_robinson_assignments(Index radius, int max_level) {
    std::array<CornerMark, 3> rest{CornerMark::se, CornerMark::nw, CornerMark::ne};
    std::sort(rest.begin(), rest.end());
    std::vector<PeriodicTiling2D> accepted;
    do {
        const PeriodicTiling2D candidate(
            2, 2, {to_symbol(CornerMark::sw), to_symbol(rest[0]), to_symbol(rest[1]), to_symbol(rest[2])});
        if (verify_hierarchy(generate_robinson_with(candidate, radius), max_level).ok()) {
            accepted.push_back(candidate);
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return accepted;
}

Patch2D generate_robinson_with(const PeriodicTiling2D& a, Index radius, std::optional<int> rounds) {
    if (radius < 3) {
        throw UsageError("robinson patches need radius >= 3");
    }
    const auto blank = robinson_blank();
    if (rounds) {
        return staged_patch2d(blank, a, blank, *rounds, radius);
    }
    return limit_patch2d(blank, a, blank, radius);
}

Patch2D generate_robinson(Index radius, std::optional<int> rounds) {
    return generate_robinson_with(robinson_A(), radius, rounds);
}

std::vector<Index2> cross_positions(int level, Interval xs, Interval ys) {
    if (level < 0 || level > 60) {
        throw DomainError("cross level must lie in [0, 60]");
    }
    const Index step = Index{1} << level;
    const auto first_odd_multiple = [&](Index lo) {
        // smallest step * (2a + 1) >= lo
        Index q = floor_div(lo + step - 1, step);
        if (floor_mod(q, 2) == 0) {
            ++q;
        }
        return q * step;
    };
    std::vector<Index2> out;
    for (Index y = first_odd_multiple(ys.lo); y <= ys.hi; y += 2 * step) {
        for (Index x = first_odd_multiple(xs.lo); x <= xs.hi; x += 2 * step) {
            out.push_back({x, y});
        }
    }
    return out;
}

HierarchyReport verify_hierarchy(const Patch2D& patch, int max_level) {
    if (max_level < 0) {
        throw DomainError("max_level must be >= 0");
    }
    const Index need = Index{1} << (max_level + 2);
    if (patch.xs().lo > -need || patch.xs().hi < need || patch.ys().lo > -need || patch.ys().hi < need) {
        throw VerificationError("hierarchy check to level " + std::to_string(max_level) + " needs radius >= " +
                                std::to_string(need));
    }

    struct Quad {
        int level;
        Index2 center;
        std::array<Index2, 4> corners;
    };
    std::vector<Quad> quads;
    HierarchyReport report;
    report.centers.resize(static_cast<std::size_t>(max_level) + 1);
    for (int k = 0; k <= max_level; ++k) {
        const Index d = Index{1} << k;
        const Index stride = d * 4;
        const Index offset = d * 2;
        const auto first = [&](Index lo) { return offset + stride * floor_div(lo + d - offset + stride - 1, stride); };
        for (Index cy = first(patch.ys().lo); cy + d <= patch.ys().hi; cy += stride) {
            for (Index cx = first(patch.xs().lo); cx + d <= patch.xs().hi; cx += stride) {
                const Index2 c{cx, cy};
                quads.push_back({k, c, {Index2{cx - d, cy - d}, {cx + d, cy - d}, {cx - d, cy + d}, {cx + d, cy + d}}});
                report.centers[static_cast<std::size_t>(k)].push_back(c);
            }
        }
    }

    const auto read = [&](const Quad& q) {
        Corners found{};
        for (std::size_t i = 0; i < 4; ++i) {
            found[i] = to_mark(patch.at(q.corners[i]));
        }
        return found;
    };
    std::size_t inward = 0;
    std::size_t outward = 0;
    for (const auto& q : quads) {
        const auto found = read(q);
        inward += found == kInward;
        outward += found == kOutward;
    }
    report.chirality = outward > inward ? Chirality::outward : Chirality::inward;
    const Corners& expected = arrangement(report.chirality);
    for (const auto& q : quads) {
        const auto found = read(q);
        for (std::size_t i = 0; i < 4; ++i) {
            if (found[i] != expected[i]) {
                report.violations.push_back({q.corners[i], expected[i], found[i]});
            }
        }
    }

    for (Index y = patch.ys().lo; y <= patch.ys().hi; ++y) {
        for (Index x = patch.xs().lo; x <= patch.xs().hi; ++x) {
            if (v2(x) != v2(y)) {
                const auto found = to_mark(patch.at({x, y}));
                if (found != CornerMark::blank) {
                    report.violations.push_back({{x, y}, CornerMark::blank, found});
                }
            }
        }
    }
    return report;
}

}  // namespace interlace
