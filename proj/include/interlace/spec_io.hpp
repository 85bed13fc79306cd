#pragma once

#include <string>
#include <string_view>

#include "interlace/interlace1d.hpp"

namespace interlace {

// Text form, clauses separated by ';' or newlines, '#' starts a comment:
//   base: 0 ; stage: gap=1 word=0 ; stage: gap=1 word=1
// The colons are optional. A missing base defaults to the first stage word.
// JSON form: { "base": "0", "stages": [{"gap": 1, "word": "0"}, ...] }
InterlaceSpec parse_spec(std::string_view text);

// Reads `arg` as a file when one exists at that path, otherwise parses it inline.
InterlaceSpec load_spec(const std::string& arg);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

std::string to_text(const InterlaceSpec& spec);
std::string to_json(const InterlaceSpec& spec);

}  // namespace interlace
