#include "interlace/word.hpp"

#include <algorithm>
#include <sstream>

namespace interlace {

Symbol Cell::symbol() const {
    if (kind_ != Kind::symbol) {
        throw DomainError("cell holds a null point, not a symbol");
    }
    return Symbol{static_cast<std::uint32_t>(payload_)};
}

Index Cell::tag() const {
    if (kind_ != Kind::marker) {
        throw DomainError("cell is not a tagged null point");
    }
    return payload_;
}

Alphabet::Alphabet(const std::vector<std::string>& labels) {
    for (const auto& l : labels) {
        if (find(l)) {
            throw ParseError("duplicate alphabet label '" + l + "'");
        }
        intern(l);
    }
}

bool Alphabet::is_null_label(std::string_view label) { return label == "*" || label == "∗"; }

Symbol Alphabet::intern(std::string_view label) {
    if (label.empty()) {
        throw ParseError("empty symbol label");
    }
    if (is_null_label(label)) {
        throw ParseError("'*' is reserved for the null point");
    }
    if (auto s = find(label)) {
        return *s;
    }
    labels_.emplace_back(label);
    return Symbol{static_cast<std::uint32_t>(labels_.size() - 1)};
}

std::optional<Symbol> Alphabet::find(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        return std::nullopt;
    }
    return Symbol{static_cast<std::uint32_t>(it - labels_.begin())};
}

const std::string& Alphabet::label(Symbol s) const {
    if (s.id >= labels_.size()) {
        throw DomainError("symbol id " + std::to_string(s.id) + " outside alphabet");
    }
    return labels_[s.id];
}

std::string Alphabet::label(const Cell& c) const { return c.is_symbol() ? label(c.symbol()) : "*"; }

PeriodicWord::PeriodicWord(std::vector<Symbol> cells) : cells_(std::move(cells)) {
    if (cells_.empty()) {
        throw ParseError("periodic word needs at least one cell");
    }
}

Symbol eval_periodic(const PeriodicWord& w, Index i) { return w.at(i); }

Window1D::Window1D(Interval domain, std::vector<Cell> values) : domain_(domain), values_(std::move(values)) {
    if (domain_.lo > domain_.hi) {
        throw DomainError("window needs lo <= hi");
    }
    if (static_cast<Index>(values_.size()) != domain_.size()) {
        throw DomainError("window value count does not match its domain");
    }
}

Window1D::Window1D(Interval domain, Cell fill)
    : Window1D(domain, std::vector<Cell>(static_cast<std::size_t>(std::max<Index>(domain.size(), 0)), fill)) {}

Window1D Window1D::from_periodic(const PeriodicWord& w, Interval domain) {
    Window1D out(domain, Cell::null());
    for (Index i = domain.lo; i <= domain.hi; ++i) {
        out.values_[static_cast<std::size_t>(i - domain.lo)] = Cell::of(w.at(i));
    }
    return out;
}

const Cell& Window1D::at(Index i) const {
    if (!domain_.contains(i)) {
        throw DomainError("position " + std::to_string(i) + " outside window [" + std::to_string(domain_.lo) +
                          ", " + std::to_string(domain_.hi) + "]");
    }
    return values_[static_cast<std::size_t>(i - domain_.lo)];
}

void Window1D::set(Index i, Cell c) {
    if (!domain_.contains(i)) {
        throw DomainError("position " + std::to_string(i) + " outside window");
    }
    values_[static_cast<std::size_t>(i - domain_.lo)] = c;
}

Window1D Window1D::slice(Interval range) const {
    if (!domain_.contains(range)) {
        throw DomainError("slice [" + std::to_string(range.lo) + ", " + std::to_string(range.hi) +
                          "] not covered by window [" + std::to_string(domain_.lo) + ", " +
                          std::to_string(domain_.hi) + "]");
    }
    auto first = values_.begin() + (range.lo - domain_.lo);
    return Window1D(range, std::vector<Cell>(first, first + range.size()));
}

bool window_equal(const Window1D& u, const Window1D& v, Index lo, Index hi) {
    const Interval range{lo, hi};
    if (!u.domain().contains(range) || !v.domain().contains(range)) {
        throw DomainError("range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          "] not covered by both windows");
    }
    for (Index i = lo; i <= hi; ++i) {
        if (u.at(i) != v.at(i)) {
            return false;
        }
    }
    return true;
}

PeriodicWord parse_word(std::string_view text, Alphabet& alphabet) {
    std::istringstream in{std::string(text)};
    std::vector<Symbol> cells;
    std::string token;
    while (in >> token) {
        cells.push_back(alphabet.intern(token));
    }
    if (cells.empty()) {
        throw ParseError("empty word");
    }
    return PeriodicWord(std::move(cells));
}

std::string format_word(const PeriodicWord& w, const Alphabet& alphabet) {
    std::string out;
    for (const auto s : w.cells()) {
        if (!out.empty()) {
            out += ' ';
        }
        out += alphabet.label(s);
    }
    return out;
}

std::string format_cells(const std::vector<Cell>& cells, const Alphabet& alphabet) {
    std::string out;
    for (const auto& c : cells) {
        if (!out.empty()) {
            out += ' ';
        }
        out += alphabet.label(c);
    }
    return out;
}

}  // namespace interlace
