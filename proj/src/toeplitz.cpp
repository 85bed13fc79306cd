#include "interlace/toeplitz.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "json.hpp"

namespace interlace {

namespace {

Index checked_lcm(Index a, Index b) {
    const Index g = std::gcd(a, b);
    const Index q = a / g;
    if (q > std::numeric_limits<Index>::max() / b) {
        throw DomainError("period overflow");
    }
    return q * b;
}

bool cells_match(const Cell& a, const Cell& b, NullComparison nulls) {
    if (nulls == NullComparison::any_null_equal && a.is_null() && b.is_null()) {
        return true;
    }
    return a == b;
}

}  // namespace

std::optional<PeriodicPartCertificate> certify_periodic_part(const Window1D& w, Index position,
                                                             std::span<const Index> candidate_periods) {
    const Cell& value = w.at(position);
    for (const Index p : candidate_periods) {
        if (p < 1) {
            continue;
        }
        const Index k_lo = -floor_div(position - w.lo(), p);
        const Index k_hi = floor_div(w.hi() - position, p);
        if (-k_lo < kMinCertifiedRepeats || k_hi < kMinCertifiedRepeats) {
            // candidates ascend, so no larger period has enough evidence either
            break;
        }
        bool ok = true;
        for (Index t = position + k_lo * p; t <= w.hi(); t += p) {
            if (w.at(t) != value) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return PeriodicPartCertificate{position, p, w.domain()};
        }
    }
    return std::nullopt;
}

Index minimal_period(const Window1D& w, NullComparison nulls) {
    const Index len = w.domain().size();
    const auto& v = w.values();
    for (Index p = 1; 3 * p <= len; ++p) {
        bool ok = true;
        for (Index t = 0; t + p < len; ++t) {
            if (!cells_match(v[static_cast<std::size_t>(t)], v[static_cast<std::size_t>(t + p)], nulls)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return p;
        }
    }
    throw InsufficientDataError("window of length " + std::to_string(len) +
                                " does not contain three full periods of any candidate");
}

Index expanded_period(Index x, Index gap) {
    if (x < 1 || gap < 1) {
        throw DomainError("expanded_period needs x >= 1 and gap >= 1");
    }
    const Index l = checked_lcm(x, gap);
    return l + l / gap;
}

std::vector<Index> candidate_periods(const InterlaceSpec& spec, Index cap) {
    std::set<Index> seen{1};
    std::vector<Index> frontier;
    for (const auto& s : spec.stages) {
        const Index p = (s.gap + 1) * s.word.period();
        if (p <= cap && seen.insert(p).second) {
            frontier.push_back(p);
        }
    }
    std::set<int> gaps;
    for (const auto& s : spec.stages) {
        gaps.insert(s.gap);
    }
    while (!frontier.empty()) {
        const Index x = frontier.back();
        frontier.pop_back();
        for (const int g : gaps) {
            const Index l = expanded_period(x, g);
            if (l <= cap && seen.insert(l).second) {
                frontier.push_back(l);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

Index period_bound(Index base_period, std::span<const Stage> ops) {
    Index x = base_period;
    for (const auto& op : ops) {
        x = checked_lcm(expanded_period(x, op.gap), (op.gap + 1) * op.word.period());
    }
    return x;
}

std::optional<PositionTrace> trace_position(std::span<const Stage> ops, Index v) {
    for (std::size_t j = ops.size(); j-- > 0;) {
        const Index m = ops[j].gap + 1;
        if (floor_mod(v, m) == 0) {
            PositionTrace t{Cell::of(ops[j].word.at(v / m)), m * ops[j].word.period(), j};
            for (std::size_t later = j + 1; later < ops.size(); ++later) {
                t.period = expanded_period(t.period, ops[later].gap);
            }
            return t;
        }
        v -= floor_div(v, m);
    }
    return std::nullopt;
}

Index reduce_period(std::span<const Stage> ops, Index v, const PositionTrace& trace, Index max_ratio) {
    const Index p = trace.period;
    std::vector<Index> divisors;
    for (Index d = 1; d * d <= p; ++d) {
        if (p % d == 0) {
            divisors.push_back(d);
            divisors.push_back(p / d);
        }
    }
    std::sort(divisors.begin(), divisors.end());
    for (const Index d : divisors) {
        if (d == p) {
            break;
        }
        if (p / d > max_ratio) {
            continue;
        }
        bool ok = true;
        for (Index k = 1; k < p / d && ok; ++k) {
            const auto other = trace_position(ops, v + k * d);
            ok = other && other->value == trace.value && p % other->period == 0;
        }
        if (ok) {
            return d;
        }
    }
    return p;
}

ToeplitzReport almost_toeplitz_check(const InterlaceSpec& spec, Index radius, const LimitOptions& options) {
    if (radius < 1) {
        throw DomainError("analysis radius must be >= 1");
    }
    const LimitResult lim = limit_window(spec, radius, options);
    const auto ops = round_ops(spec, lim.rounds_used);
    // A single symbol everywhere makes every position 1-periodic.
    const bool constant_limit =
        spec.base.period() == 1 && std::all_of(spec.stages.begin(), spec.stages.end(), [&](const Stage& st) {
            return st.word.period() == 1 && st.word.at(0) == spec.base.at(0);
        });

    ToeplitzReport report;
    report.analysis_range = {-radius, radius};
    for (Index i = -radius; i <= radius; ++i) {
        const auto trace = trace_position(ops, i);
        bool ok = trace && lim.window.at(i) == trace->value;
        Index p = 0;
        if (ok) {
            p = constant_limit ? 1 : reduce_period(ops, i, *trace);
            for (Index k = -kMinCertifiedRepeats; k <= kMinCertifiedRepeats && ok; ++k) {
                const Index t = i + k * p;
                ok = compose(spec, lim.rounds_used, {t, t}).at(t) == trace->value;
            }
        }
        if (ok) {
            report.certified.push_back({i, p, {i - kMinCertifiedRepeats * p, i + kMinCertifiedRepeats * p}});
        } else {
            report.uncertified.push_back(i);
        }
    }
    for (const Index s : lim.seed_positions) {
        if (report.analysis_range.contains(s)) {
            report.seed_positions.push_back(s);
        }
    }
    return report;
}

std::string to_json(const ToeplitzReport& report) {
    nlohmann::json j;
    j["range"] = {report.analysis_range.lo, report.analysis_range.hi};
    j["uncertified"] = report.uncertified;
    j["seed_positions"] = report.seed_positions;
    auto& certs = j["certified"] = nlohmann::json::array();
    for (const auto& c : report.certified) {
        certs.push_back({{"position", c.position},
                         {"period", c.period},
                         {"checked_range", {c.checked_range.lo, c.checked_range.hi}}});
    }
    return j.dump();
}

ToeplitzReport toeplitz_report_from_json(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        ToeplitzReport r;
        r.analysis_range = {j.at("range").at(0).get<Index>(), j.at("range").at(1).get<Index>()};
        r.uncertified = j.at("uncertified").get<std::vector<Index>>();
        r.seed_positions = j.at("seed_positions").get<std::vector<Index>>();
        for (const auto& c : j.at("certified")) {
            r.certified.push_back({c.at("position").get<Index>(), c.at("period").get<Index>(),
                                   {c.at("checked_range").at(0).get<Index>(),
                                    c.at("checked_range").at(1).get<Index>()}});
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad toeplitz report: ") + e.what());
    }
}

}  // namespace interlace
