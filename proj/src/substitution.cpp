#include "interlace/substitution.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "interlace/toeplitz.hpp"
#include "json.hpp"

namespace interlace {

namespace {

constexpr Index kMaxDerivationPeriod = Index{1} << 22;

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) {
        out.push_back(t);
    }
    return out;
}

TemplateCell parse_template_token(const std::string& tok, Alphabet& alphabet) {
    if (tok.size() > 1 && tok[0] == 'x' &&
        std::all_of(tok.begin() + 1, tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        return TemplateCell::slot(std::stoi(tok.substr(1)));
    }
    return TemplateCell::constant(alphabet.intern(tok));
}

}  // namespace

int TemplateCell::slot_index() const {
    if (!is_slot_) {
        throw DomainError("template cell is a constant");
    }
    return static_cast<int>(value_);
}

Symbol TemplateCell::symbol() const {
    if (is_slot_) {
        throw DomainError("template cell is a slot");
    }
    return Symbol{value_};
}

void BlockSubstitution::validate() const {
    if (block_len < 1) {
        throw DerivationError("block length must be >= 1");
    }
    if (image_len() <= block_len) {
        throw DerivationError("image of length " + std::to_string(image_len()) +
                              " does not grow blocks of length " + std::to_string(block_len));
    }
    std::vector<bool> used(static_cast<std::size_t>(block_len) + 1, false);
    for (const auto& c : image) {
        if (c.is_slot()) {
            if (c.slot_index() < 1 || c.slot_index() > block_len) {
                throw DerivationError("slot x" + std::to_string(c.slot_index()) + " outside the block");
            }
            used[static_cast<std::size_t>(c.slot_index())] = true;
        }
    }
    for (int i = 1; i <= block_len; ++i) {
        if (!used[static_cast<std::size_t>(i)]) {
            throw DerivationError("slot x" + std::to_string(i) + " never appears in the image");
        }
    }
}

BlockSubstitution BlockSubstitution::canonical() const {
    BlockSubstitution out = *this;
    std::map<int, int> rename;
    for (auto& c : out.image) {
        if (c.is_slot()) {
            auto [it, inserted] = rename.try_emplace(c.slot_index(), static_cast<int>(rename.size()) + 1);
            c = TemplateCell::slot(it->second);
        }
    }
    return out;
}

bool operator==(const BlockSubstitution& a, const BlockSubstitution& b) {
    if (a.block_len != b.block_len || a.seed != b.seed || a.image.size() != b.image.size()) {
        return false;
    }
    const auto ca = a.canonical();
    const auto cb = b.canonical();
    for (std::size_t i = 0; i < ca.image.size(); ++i) {
        const auto& x = ca.image[i];
        const auto& y = cb.image[i];
        if (x.is_slot() != y.is_slot()) {
            return false;
        }
        if (x.is_slot() ? x.slot_index() != y.slot_index()
                        : a.alphabet.label(x.symbol()) != b.alphabet.label(y.symbol())) {
            return false;
        }
    }
    return true;
}

std::vector<Cell> apply_substitution_cells(const BlockSubstitution& sub, std::span<const Cell> word) {
    const auto n = static_cast<std::size_t>(sub.block_len);
    if (word.size() % n != 0) {
        throw DomainError("word of length " + std::to_string(word.size()) + " is not a whole number of blocks of " +
                          std::to_string(n));
    }
    std::vector<Cell> out;
    out.reserve(word.size() / n * sub.image.size());
    for (std::size_t b = 0; b < word.size(); b += n) {
        for (const auto& c : sub.image) {
            out.push_back(c.is_slot() ? word[b + static_cast<std::size_t>(c.slot_index()) - 1]
                                      : Cell::of(c.symbol()));
        }
    }
    return out;
}

std::vector<Symbol> apply_substitution(const BlockSubstitution& sub, std::span<const Symbol> word) {
    std::vector<Cell> cells;
    cells.reserve(word.size());
    for (const auto s : word) {
        cells.push_back(Cell::of(s));
    }
    std::vector<Symbol> out;
    for (const auto& c : apply_substitution_cells(sub, cells)) {
        out.push_back(c.symbol());
    }
    return out;
}

std::vector<Symbol> expand_from_seed(const BlockSubstitution& sub, Index length) {
    sub.validate();
    const Index n = sub.block_len;
    const Index len = sub.image_len();
    std::vector<Cell> cells(static_cast<std::size_t>(std::max<Index>(length, 0)), Cell::null());
    for (Index i = 0; i < std::min<Index>(length, static_cast<Index>(sub.seed.size())); ++i) {
        cells[static_cast<std::size_t>(i)] = Cell::of(sub.seed[static_cast<std::size_t>(i)]);
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (Index b = 0; b * len < length && (b + 1) * n <= length; ++b) {
            for (Index k = 0; k < len && b * len + k < length; ++k) {
                auto& target = cells[static_cast<std::size_t>(b * len + k)];
                if (target.is_symbol()) {
                    continue;
                }
                const auto& t = sub.image[static_cast<std::size_t>(k)];
                const Cell v = t.is_slot() ? cells[static_cast<std::size_t>(b * n + t.slot_index() - 1)]
                                           : Cell::of(t.symbol());
                if (v.is_symbol()) {
                    target = v;
                    changed = true;
                }
            }
        }
    }
    std::vector<Symbol> out;
    out.reserve(cells.size());
    for (const auto& c : cells) {
        if (!c.is_symbol()) {
            throw DerivationError("seed does not generate a word of length " + std::to_string(length));
        }
        out.push_back(c.symbol());
    }
    return out;
}

Derivation derive_substitution(const InterlaceSpec& spec, const LimitOptions& options) {
    const Index bound = period_bound(1, spec.stages);
    if (bound > kMaxDerivationPeriod) {
        throw DerivationError("period bound " + std::to_string(bound) + " of one round is too large to extract");
    }
    const Interval range{1, 4 * bound};
    const Window1D traced = apply_ops(NullWord{true}, spec.stages, range);
    const Index period = minimal_period(traced, NullComparison::any_null_equal);

    DerivationTrace trace;
    BlockSubstitution sub;
    sub.alphabet = spec.alphabet;
    int n = 0;
    for (Index i = 1; i <= period; ++i) {
        const Cell& c = traced.at(i);
        if (c.is_marker()) {
            ++n;
            if (c.tag() != n) {
                throw DerivationError("null slots of one period are not consecutive base cells");
            }
            trace.period_word.push_back(Cell::marker(n));
            trace.null_slots.push_back(static_cast<int>(i));
            sub.image.push_back(TemplateCell::slot(n));
        } else {
            trace.period_word.push_back(c);
            sub.image.push_back(TemplateCell::constant(c.symbol()));
        }
    }
    if (n == 0) {
        throw DerivationError("one round leaves no null slot");
    }
    for (Index i = range.lo; i + period <= range.hi; ++i) {
        const Cell& a = traced.at(i);
        const Cell& b = traced.at(i + period);
        if (a.is_marker() && (!b.is_marker() || b.tag() != a.tag() + n)) {
            throw DerivationError("null slots do not advance by a whole block per period");
        }
    }
    sub.block_len = n;

    const LimitResult lim = limit_window(spec, std::max<Index>(period, 8), options);
    trace.seed_positions = lim.seed_positions;
    if (std::find(lim.seed_positions.begin(), lim.seed_positions.end(), Index{1}) == lim.seed_positions.end()) {
        throw DerivationError("position 1 is not part of the seed");
    }
    for (Index p = 1; std::binary_search(lim.seed_positions.begin(), lim.seed_positions.end(), p); ++p) {
        trace.invariant_seed.push_back(spec.base.at(p));
    }

    // Pad the seed with null points and run rounds until the first block is defined.
    Window1D start(Interval{1, n}, Cell::null());
    for (const Index p : lim.seed_positions) {
        if (p >= 1 && p <= n) {
            start.set(p, Cell::of(spec.base.at(p)));
        }
    }
    const int cap = options.max_rounds.value_or(default_round_cap(spec, n));
    Window1D block = start;
    int rounds = 0;
    while (std::any_of(block.values().begin(), block.values().end(), [](const Cell& c) { return c.is_null(); })) {
        if (++rounds > cap) {
            throw DivergenceError("seed extension did not define the first block within " + std::to_string(cap) +
                                  " rounds");
        }
        block = compose(spec, rounds, Interval{1, n}, start);
    }
    trace.rounds_for_seed = rounds;
    for (Index i = 1; i <= n; ++i) {
        sub.seed.push_back(block.at(i).symbol());
        if (lim.window.at(i) != block.at(i)) {
            throw DerivationError("extended seed disagrees with the limit at position " + std::to_string(i));
        }
    }
    sub.validate();
    return Derivation{std::move(sub), std::move(trace)};
}

bool verify_fixed_point(const BlockSubstitution& sub, const InterlaceSpec& spec, Index radius,
                        const LimitOptions& options) {
    sub.validate();
    if (radius < 1) {
        throw DomainError("verification radius must be >= 1");
    }
    const Index n = sub.block_len;
    const Index len = sub.image_len();
    const Index blocks = (radius + len - 1) / len + 1;
    const LimitResult lim = limit_window(spec, blocks * len, options);

    if (static_cast<Index>(sub.seed.size()) != n) {
        throw VerificationError("seed length " + std::to_string(sub.seed.size()) + " differs from block length " +
                                std::to_string(n));
    }
    for (Index i = 1; i <= n; ++i) {
        if (lim.window.at(i) != Cell::of(sub.seed[static_cast<std::size_t>(i - 1)])) {
            throw VerificationError("seed is not block-aligned with the limit: position " + std::to_string(i) +
                                    " holds a different letter");
        }
    }

    const auto expands_to = [&](Interval in, Interval out) {
        const auto src = lim.window.slice(in).values();
        const auto image = apply_substitution_cells(sub, src);
        return image == lim.window.slice(out).values();
    };
    const bool right = expands_to({1, blocks * n}, {1, blocks * len});
    const bool left = expands_to({-blocks * n + 1, 0}, {-blocks * len + 1, 0});
    return right && left;
}

std::string format_template(const std::vector<TemplateCell>& image, const Alphabet& alphabet) {
    std::string out;
    for (const auto& c : image) {
        if (!out.empty()) {
            out += ' ';
        }
        out += c.is_slot() ? "x" + std::to_string(c.slot_index()) : alphabet.label(c.symbol());
    }
    return out;
}

std::string to_text(const BlockSubstitution& sub) {
    std::string seed;
    for (const auto s : sub.seed) {
        seed += (seed.empty() ? "" : " ") + sub.alphabet.label(s);
    }
    return "n=" + std::to_string(sub.block_len) + "; L=" + std::to_string(sub.image_len()) +
           "; template = " + format_template(sub.image, sub.alphabet) + "; seed = " + seed;
}

BlockSubstitution substitution_from_text(const std::string& text, Alphabet alphabet) {
    BlockSubstitution sub;
    Index declared_len = -1;
    bool have_n = false;
    bool have_template = false;
    std::istringstream in(text);
    std::string clause;
    while (std::getline(in, clause, ';')) {
        const auto eq = clause.find('=');
        if (eq == std::string::npos) {
            if (trim(clause).empty()) {
                continue;
            }
            throw ParseError("expected key=value in substitution clause '" + trim(clause) + "'");
        }
        const std::string key = trim(clause.substr(0, eq));
        const std::string value = trim(clause.substr(eq + 1));
        try {
            if (key == "n") {
                sub.block_len = std::stoi(value);
                have_n = true;
            } else if (key == "L") {
                declared_len = std::stoll(value);
            } else if (key == "template") {
                for (const auto& t : tokens(value)) {
                    sub.image.push_back(parse_template_token(t, alphabet));
                }
                have_template = true;
            } else if (key == "seed") {
                for (const auto& t : tokens(value)) {
                    sub.seed.push_back(alphabet.intern(t));
                }
            } else {
                throw ParseError("unknown substitution key '" + key + "'");
            }
        } catch (const std::logic_error&) {
            throw ParseError("bad number in substitution clause '" + trim(clause) + "'");
        }
    }
    if (!have_n || !have_template) {
        throw ParseError("substitution needs n= and template=");
    }
    if (declared_len >= 0 && declared_len != sub.image_len()) {
        throw ParseError("L=" + std::to_string(declared_len) + " does not match template length " +
                         std::to_string(sub.image_len()));
    }
    sub.alphabet = std::move(alphabet);
    sub.validate();
    return sub;
}

std::vector<std::string> letterwise(const BlockSubstitution& sub) {
    std::vector<std::string> lines;
    if (sub.block_len != 1) {
        return lines;
    }
    for (std::uint32_t id = 0; id < sub.alphabet.size(); ++id) {
        const Symbol s{id};
        std::string line = sub.alphabet.label(s) + " ->";
        for (const auto& c : sub.image) {
            line += ' ' + sub.alphabet.label(c.is_slot() ? s : c.symbol());
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

std::string to_json(const BlockSubstitution& sub) {
    nlohmann::json j;
    j["n"] = sub.block_len;
    j["L"] = sub.image_len();
    auto& tmpl = j["template"] = nlohmann::json::array();
    for (const auto& c : sub.image) {
        tmpl.push_back(c.is_slot() ? "x" + std::to_string(c.slot_index()) : sub.alphabet.label(c.symbol()));
    }
    auto& seed = j["seed"] = nlohmann::json::array();
    for (const auto s : sub.seed) {
        seed.push_back(sub.alphabet.label(s));
    }
    j["alphabet"] = sub.alphabet.labels();
    return j.dump();
}

BlockSubstitution substitution_from_json(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        Alphabet alphabet(j.at("alphabet").get<std::vector<std::string>>());
        BlockSubstitution sub;
        sub.block_len = j.at("n").get<int>();
        for (const auto& t : j.at("template")) {
            sub.image.push_back(parse_template_token(t.get<std::string>(), alphabet));
        }
        for (const auto& t : j.at("seed")) {
            sub.seed.push_back(alphabet.intern(t.get<std::string>()));
        }
        if (j.at("L").get<Index>() != sub.image_len()) {
            throw ParseError("L does not match template length");
        }
        sub.alphabet = std::move(alphabet);
        sub.validate();
        return sub;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad substitution document: ") + e.what());
    }
}

}  // namespace interlace
