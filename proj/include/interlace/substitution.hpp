#pragma once

#include <span>
#include <string>
#include <vector>

#include "interlace/interlace1d.hpp"

namespace interlace {

// One cell of a substitution image: a constant symbol, or slot i (1-based)
// standing for the i-th letter of the input block.
class TemplateCell {
public:
    static TemplateCell constant(Symbol s) { return TemplateCell(false, s.id); }
    static TemplateCell slot(int index) { return TemplateCell(true, static_cast<std::uint32_t>(index)); }

    bool is_slot() const { return is_slot_; }
    int slot_index() const;
    Symbol symbol() const;

    friend bool operator==(const TemplateCell&, const TemplateCell&) = default;

private:
    TemplateCell(bool is_slot, std::uint32_t value) : is_slot_(is_slot), value_(value) {}
    bool is_slot_ = false;
    std::uint32_t value_ = 0;
};

// Blockwise substitution: every block of `block_len` letters b1..bn is
// replaced by `image` with slot i filled by bi.
struct BlockSubstitution {
    int block_len = 1;
    std::vector<TemplateCell> image;
    std::vector<Symbol> seed;
    Alphabet alphabet;

    Index image_len() const { return static_cast<Index>(image.size()); }

    // Throws DerivationError unless image is longer than the block, every
    // slot index lies in 1..block_len, and every slot appears.
    void validate() const;

    // Slots renumbered by order of first appearance.
    BlockSubstitution canonical() const;

    // Template equality up to slot renaming, plus equal seeds.
    friend bool operator==(const BlockSubstitution& a, const BlockSubstitution& b);
};

std::vector<Symbol> apply_substitution(const BlockSubstitution& sub, std::span<const Symbol> word);

// Same as apply_substitution, on cells; a null input letter yields null in
// every slot it fills.
std::vector<Cell> apply_substitution_cells(const BlockSubstitution& sub, std::span<const Cell> word);

// Iterates the substitution from its seed until `length` letters are known.
std::vector<Symbol> expand_from_seed(const BlockSubstitution& sub, Index length);

struct DerivationTrace {
    // One period of F applied to the distinct-marker null word, anchored at
    // position 1. Markers are retagged with their slot number.
    std::vector<Cell> period_word;
    // 1-based offsets of the null slots inside period_word.
    std::vector<int> null_slots;
    // Seed positions of the limit and the base letters they carry.
    std::vector<Index> seed_positions;
    std::vector<Symbol> invariant_seed;
    // Extra rounds run on the seed to define the first block_len positions.
    int rounds_for_seed = 0;
};

struct Derivation {
    BlockSubstitution substitution;
    DerivationTrace trace;
};

Derivation derive_substitution(const InterlaceSpec& spec, const LimitOptions& options = {});

// Expands the limit window blockwise on both rays (right ray from position 1,
// left ray in blocks ending at position 0) and compares with the limit on at
// least `radius` positions per side.
bool verify_fixed_point(const BlockSubstitution& sub, const InterlaceSpec& spec, Index radius,
                        const LimitOptions& options = {});

// `n=<n>; L=<L>; template = x1 2 1 2 0 2 1 2; seed = 0`
std::string to_text(const BlockSubstitution& sub);
BlockSubstitution substitution_from_text(const std::string& text, Alphabet alphabet);
// One line per letter, only when block_len == 1: "0 -> 0 1 0 1".
std::vector<std::string> letterwise(const BlockSubstitution& sub);
std::string to_json(const BlockSubstitution& sub);
BlockSubstitution substitution_from_json(const std::string& text);

std::string format_template(const std::vector<TemplateCell>& image, const Alphabet& alphabet);

}  // namespace interlace
