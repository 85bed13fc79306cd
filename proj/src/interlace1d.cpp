#include "interlace/interlace1d.hpp"

#include <algorithm>
#include <limits>

namespace interlace {

Stage::Stage(int gap, PeriodicWord word) : gap(gap), word(std::move(word)) {
    if (gap < 1) {
        throw ParseError("stage gap must be >= 1, got " + std::to_string(gap));
    }
}

InterlaceSpec::InterlaceSpec(Alphabet alphabet, PeriodicWord base, std::vector<Stage> stages)
    : alphabet(std::move(alphabet)), base(std::move(base)), stages(std::move(stages)) {
    if (this->stages.empty()) {
        throw ParseError("spec needs at least one stage");
    }
}

Interval cap_input_range(Interval out, int gap) {
    const Index step = gap + 1;
    return {out.lo - floor_div(out.lo, step), out.hi - floor_div(out.hi, step)};
}

namespace {

template <class Source>
Window1D cap_impl(const Source& a, const PeriodicWord& b, int gap, Interval out) {
    const Index step = gap + 1;
    std::vector<Cell> values;
    values.reserve(static_cast<std::size_t>(out.size()));
    for (Index v = out.lo; v <= out.hi; ++v) {
        const Index q = floor_div(v, step);
        if (q * step == v) {
            values.push_back(Cell::of(b.at(q)));
        } else {
            values.push_back(a(v - q));
        }
    }
    return Window1D(out, std::move(values));
}

Window1D materialize(const StartWord& start, Interval range) {
    return std::visit(
        [&](const auto& w) -> Window1D {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, PeriodicWord>) {
                return Window1D::from_periodic(w, range);
            } else if constexpr (std::is_same_v<T, NullWord>) {
                Window1D out(range, Cell::null());
                if (w.distinct) {
                    for (Index i = range.lo; i <= range.hi; ++i) {
                        out.set(i, Cell::marker(i));
                    }
                }
                return out;
            } else {
                return w.slice(range);
            }
        },
        start);
}

}  // namespace

Window1D cap_n(const Window1D& a, const PeriodicWord& b, int gap, Interval out) {
    if (gap < 1) {
        throw DomainError("gap must be >= 1");
    }
    const Interval need = cap_input_range(out, gap);
    if (!a.domain().contains(need)) {
        throw DomainError("cap_n needs input positions [" + std::to_string(need.lo) + ", " +
                          std::to_string(need.hi) + "], window covers [" + std::to_string(a.lo()) + ", " +
                          std::to_string(a.hi()) + "]");
    }
    return cap_impl([&](Index i) { return a.at(i); }, b, gap, out);
}

Window1D cap_n(const PeriodicWord& a, const PeriodicWord& b, int gap, Interval out) {
    if (gap < 1) {
        throw DomainError("gap must be >= 1");
    }
    return cap_impl([&](Index i) { return Cell::of(a.at(i)); }, b, gap, out);
}

std::vector<Stage> round_ops(const InterlaceSpec& spec, int rounds) {
    std::vector<Stage> ops;
    ops.reserve(spec.stages.size() * static_cast<std::size_t>(std::max(rounds, 0)));
    for (int r = 0; r < rounds; ++r) {
        ops.insert(ops.end(), spec.stages.begin(), spec.stages.end());
    }
    return ops;
}

Window1D apply_ops(const StartWord& start, std::span<const Stage> ops, Interval out) {
    std::vector<Interval> ranges(ops.size() + 1);
    ranges.back() = out;
    for (std::size_t k = ops.size(); k-- > 0;) {
        ranges[k] = cap_input_range(ranges[k + 1], ops[k].gap);
    }
    Window1D current = materialize(start, ranges.front());
    for (std::size_t k = 0; k < ops.size(); ++k) {
        current = cap_n(current, ops[k].word, ops[k].gap, ranges[k + 1]);
    }
    return current;
}

Window1D compose(const InterlaceSpec& spec, int rounds, Interval out) {
    return compose(spec, rounds, out, spec.base);
}

Window1D compose(const InterlaceSpec& spec, int rounds, Interval out, const StartWord& start) {
    if (rounds < 0) {
        throw DomainError("round count must be >= 0");
    }
    const auto ops = round_ops(spec, rounds);
    return apply_ops(start, ops, out);
}

int default_round_cap(const InterlaceSpec& spec, Index radius) {
    constexpr Index limit = std::numeric_limits<int>::max() / 2;
    Index cap = radius;
    Index product = 1;
    for (const auto& s : spec.stages) {
        cap += s.gap;
        product = std::min(limit, product * s.word.period());
    }
    return static_cast<int>(std::min(limit, cap + product));
}

LimitResult limit_window(const InterlaceSpec& spec, Index radius, const LimitOptions& options) {
    if (radius < 1) {
        throw DomainError("limit radius must be >= 1");
    }
    const Interval range{-radius, radius};
    const int cap = options.max_rounds.value_or(default_round_cap(spec, radius));
    for (int m = 1; m <= cap; ++m) {
        const Window1D traced = compose(spec, m, range, NullWord{true});
        std::vector<Index> seeds;
        bool settled = true;
        for (Index i = range.lo; i <= range.hi && settled; ++i) {
            const Cell& c = traced.at(i);
            if (c.is_marker()) {
                if (c.tag() == i) {
                    seeds.push_back(i);
                } else {
                    settled = false;
                }
            }
        }
        if (!settled) {
            continue;
        }
        Window1D window = traced;
        for (const Index s : seeds) {
            window.set(s, Cell::of(spec.base.at(s)));
        }
        return LimitResult{std::move(window), std::move(seeds), m};
    }
    throw DivergenceError("limit window of radius " + std::to_string(radius) + " did not stabilize within " +
                          std::to_string(cap) + " rounds");
}

Progression defined_positions(std::span<const Stage> prefix, int k) {
    if (k < 1 || static_cast<std::size_t>(k) > prefix.size()) {
        throw DomainError("k must lie in [1, " + std::to_string(prefix.size()) + "]");
    }
    if (k > 60) {
        throw DomainError("k too large for 64-bit positions");
    }
    for (const auto& s : prefix) {
        if (s.gap != 1) {
            throw UnsupportedError("defined_positions only covers gap-1 stages");
        }
    }
    const Index stride = Index{1} << k;
    return Progression{stride, -(stride / 2) + 1};
}

}  // namespace interlace
