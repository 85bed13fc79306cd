#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "interlace/word.hpp"

namespace interlace {

// One interlacing step: after every `gap` cells of the current word a cell of
// `word` is inserted, with word(0) landing on position 0.
struct Stage {
    int gap = 1;
    PeriodicWord word;

    Stage(int gap, PeriodicWord word);
    friend bool operator==(const Stage&, const Stage&) = default;
};

// Base word plus an ordered list of stages. One round applies every stage in
// order; compose(spec, m) is the base followed by m rounds.
struct InterlaceSpec {
    Alphabet alphabet;
    PeriodicWord base;
    std::vector<Stage> stages;

    InterlaceSpec(Alphabet alphabet, PeriodicWord base, std::vector<Stage> stages);
};

// The null word. With `distinct`, position i carries a marker tagged i.
struct NullWord {
    bool distinct = false;
};

using StartWord = std::variant<PeriodicWord, NullWord, Window1D>;

// Input positions needed to evaluate a gap-`gap` interlace on `out`.
Interval cap_input_range(Interval out, int gap);

// (A ∩^gap B) on `out`: B(v / (gap+1)) where (gap+1) | v, else
// A(v - floor(v / (gap+1))). Null cells of A pass through unchanged.
Window1D cap_n(const Window1D& a, const PeriodicWord& b, int gap, Interval out);
Window1D cap_n(const PeriodicWord& a, const PeriodicWord& b, int gap, Interval out);

// Flattened stage sequence for `rounds` full rounds.
std::vector<Stage> round_ops(const InterlaceSpec& spec, int rounds);

// Applies `ops` left to right to `start`, evaluated on `out` only. The input
// range of every op is computed by walking the index maps backward first.
Window1D apply_ops(const StartWord& start, std::span<const Stage> ops, Interval out);

Window1D compose(const InterlaceSpec& spec, int rounds, Interval out);
Window1D compose(const InterlaceSpec& spec, int rounds, Interval out, const StartWord& start);

struct LimitOptions {
    // Overrides the default iteration cap (radius + sum of gaps + product of periods).
    std::optional<int> max_rounds;
};

struct LimitResult {
    Window1D window;
    // Positions never overwritten by any stage; they keep the base value.
    std::vector<Index> seed_positions;
    int rounds_used = 0;
};

int default_round_cap(const InterlaceSpec& spec, Index radius);

// Window on [-radius, radius] that every compose(spec, m), m >= rounds_used,
// agrees with. Stabilization is detected on a distinct-marker run: a round
// count is final once every still-null position is a fixed point of the
// round's index map.
LimitResult limit_window(const InterlaceSpec& spec, Index radius, const LimitOptions& options = {});

// {stride * s + offset : s in Z}
struct Progression {
    Index stride = 1;
    Index offset = 0;

    bool contains(Index v) const { return floor_mod(v - offset, stride) == 0; }
    friend bool operator==(const Progression&, const Progression&) = default;
};

// Positions first defined by the k-th gap-1 operation counted from the
// outermost: 2^k s - 2^(k-1) + 1. Only valid when every gap in `prefix` is 1
// and k <= prefix.size().
Progression defined_positions(std::span<const Stage> prefix, int k);

}  // namespace interlace
