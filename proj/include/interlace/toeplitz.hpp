#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "interlace/interlace1d.hpp"

namespace interlace {

struct PeriodicPartCertificate {
    Index position = 0;
    Index period = 1;
    Interval checked_range;

    friend bool operator==(const PeriodicPartCertificate&, const PeriodicPartCertificate&) = default;
};

struct ToeplitzReport {
    Interval analysis_range;
    std::vector<PeriodicPartCertificate> certified;
    std::vector<Index> uncertified;
    std::vector<Index> seed_positions;

    bool uncertified_is_seed() const { return uncertified == seed_positions; }
};

// Minimum number of other occurrences (position + k * period) that must fall
// inside the window on each side before a period counts as certified.
inline constexpr int kMinCertifiedRepeats = 3;

// Smallest candidate period p for which w(position + k p) == w(position) at
// every checkable k. nullopt when no candidate validates.
std::optional<PeriodicPartCertificate> certify_periodic_part(const Window1D& w, Index position,
                                                             std::span<const Index> candidate_periods);

enum class NullComparison { exact, any_null_equal };

// Smallest p with w(t) == w(t + p) throughout the window, accepted only when
// the window spans at least three periods.
Index minimal_period(const Window1D& w, NullComparison nulls = NullComparison::exact);

// Period of the image of an x-periodic part under a gap-`gap` insertion:
// lcm(x, gap) + lcm(x, gap) / gap.
Index expanded_period(Index x, Index gap);

// Closure of the stage insertion periods (gap + 1) * period(word) under
// expanded_period for every gap of the spec, capped at `cap`, ascending.
std::vector<Index> candidate_periods(const InterlaceSpec& spec, Index cap);

// Upper bound on the period of a finite composition: every op maps the
// running period x to lcm(expanded_period(x, gap), (gap + 1) * period(word)).
Index period_bound(Index base_period, std::span<const Stage> ops);

struct PositionTrace {
    Cell value;
    // A period of the position's periodic part, in compose and in the limit.
    Index period = 1;
    // Index into `ops` of the stage that inserted the position.
    std::size_t op = 0;
};

// Follows `v` backward through `ops` to the stage that inserted it, then lifts
// that stage's insertion period forward with expanded_period. nullopt when no
// stage defines v, i.e. v keeps its start value.
std::optional<PositionTrace> trace_position(std::span<const Stage> ops, Index v);

// Smallest divisor d of trace.period (with period / d <= max_ratio) such that
// every position v + k d, 0 <= k < period / d, traces to the same value with a
// period dividing trace.period. That makes d an exact period of v.
Index reduce_period(std::span<const Stage> ops, Index v, const PositionTrace& trace, Index max_ratio = 4096);

// Certifies every position of [-radius, radius] of the limit. Each defined
// position gets its traced, reduced period, and the limit is re-evaluated at
// v + k p for 0 < |k| <= kMinCertifiedRepeats to confirm it; checked_range
// spans those samples.
ToeplitzReport almost_toeplitz_check(const InterlaceSpec& spec, Index radius, const LimitOptions& options = {});

std::string to_json(const ToeplitzReport& report);
ToeplitzReport toeplitz_report_from_json(const std::string& text);

}  // namespace interlace
