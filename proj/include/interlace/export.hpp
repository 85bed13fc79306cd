#pragma once

#include <string>

#include "interlace/lattice2d.hpp"

namespace interlace {

enum class PatchFormat { svg, ascii, json };

// Throws UsageError for anything other than svg, ascii, json.
PatchFormat parse_patch_format(const std::string& name);

// Unit squares in row-major order (top row first), one rect per tile and a
// two-segment polyline per corner mark.
std::string to_svg(const Patch2D& patch, const Alphabet& alphabet);

// One glyph per cell, top row first: '.' blank, 'L' SW, 'J' SE, 'r' NW,
// '7' NE, '*' null; other labels print their first character.
std::string to_ascii(const Patch2D& patch, const Alphabet& alphabet);

// {"kind": ..., "x": [lo, hi], "y": [lo, hi], "rows": [[label, ...], ...]}
// with rows listed from y = lo upward.
std::string to_json(const Patch2D& patch, const Alphabet& alphabet);
Patch2D patch_from_json(const std::string& text, Alphabet& alphabet);

std::string export_patch(const Patch2D& patch, const Alphabet& alphabet, PatchFormat format);

}  // namespace interlace
