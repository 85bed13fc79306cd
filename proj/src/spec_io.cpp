#include "interlace/spec_io.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace interlace {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string_view strip_keyword(std::string_view clause, std::string_view keyword) {
    auto rest = trim(clause.substr(keyword.size()));
    if (!rest.empty() && rest.front() == ':') {
        rest = trim(rest.substr(1));
    }
    return rest;
}

int parse_gap(const std::string& value) {
    std::size_t used = 0;
    int gap = 0;
    try {
        gap = std::stoi(value, &used);
    } catch (const std::logic_error&) {
        throw ParseError("gap '" + value + "' is not an integer");
    }
    if (used != value.size()) {
        throw ParseError("gap '" + value + "' is not an integer");
    }
    if (gap < 1) {
        throw ParseError("gap must be >= 1, got " + value);
    }
    return gap;
}

Stage parse_stage(std::string_view body, Alphabet& alphabet) {
    std::istringstream in{std::string(body)};
    std::optional<int> gap;
    std::string word_text;
    bool in_word = false;
    std::string tok;
    while (in >> tok) {
        if (tok.rfind("gap=", 0) == 0) {
            gap = parse_gap(tok.substr(4));
            in_word = false;
        } else if (tok.rfind("word=", 0) == 0) {
            word_text = tok.substr(5);
            in_word = true;
        } else if (in_word) {
            word_text += ' ' + tok;
        } else {
            throw ParseError("unexpected token '" + tok + "' in stage clause");
        }
    }
    if (trim(word_text).empty()) {
        throw ParseError("stage clause needs word=<word>");
    }
    return Stage(gap.value_or(1), parse_word(word_text, alphabet));
}

InterlaceSpec parse_json_spec(std::string_view text) {
    try {
        const auto j = nlohmann::json::parse(text);
        Alphabet alphabet;
        std::vector<Stage> stages;
        for (const auto& s : j.at("stages")) {
            const int gap = s.contains("gap") ? s.at("gap").get<int>() : 1;
            if (gap < 1) {
                throw ParseError("gap must be >= 1");
            }
            stages.emplace_back(gap, parse_word(s.at("word").get<std::string>(), alphabet));
        }
        if (stages.empty()) {
            throw ParseError("spec needs at least one stage");
        }
        PeriodicWord base = j.contains("base") ? parse_word(j.at("base").get<std::string>(), alphabet)
                                               : stages.front().word;
        return InterlaceSpec(std::move(alphabet), std::move(base), std::move(stages));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON spec: ") + e.what());
    }
}

}  // namespace

InterlaceSpec parse_spec(std::string_view text) {
    const auto body = trim(text);
    if (!body.empty() && body.front() == '{') {
        return parse_json_spec(body);
    }
    std::string cleaned;
    {
        std::istringstream lines{std::string(body)};
        std::string line;
        while (std::getline(lines, line)) {
            cleaned += line.substr(0, line.find('#'));
            cleaned += ';';
        }
    }
    Alphabet alphabet;
    std::optional<PeriodicWord> base;
    std::vector<Stage> stages;
    std::istringstream clauses(cleaned);
    std::string raw;
    while (std::getline(clauses, raw, ';')) {
        const auto clause = trim(raw);
        if (clause.empty()) {
            continue;
        }
        if (clause.rfind("base", 0) == 0) {
            if (base) {
                throw ParseError("spec has more than one base clause");
            }
            auto word = strip_keyword(clause, "base");
            if (!word.empty() && word.front() == '=') {
                word = trim(word.substr(1));
            }
            base = parse_word(word, alphabet);
        } else if (clause.rfind("stage", 0) == 0) {
            stages.push_back(parse_stage(strip_keyword(clause, "stage"), alphabet));
        } else {
            throw ParseError("unknown spec clause '" + std::string(clause) + "'");
        }
    }
    if (stages.empty()) {
        throw ParseError("spec needs at least one stage");
    }
    PeriodicWord start = base ? *base : stages.front().word;
    return InterlaceSpec(std::move(alphabet), std::move(start), std::move(stages));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read '" + path + "'");
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out || !(out << contents) || !out.flush()) {
            throw IoError("cannot write '" + path + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot write '" + path + "'");
    }
}

InterlaceSpec load_spec(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        return parse_spec(read_file(arg));
    }
    return parse_spec(arg);
}

std::string to_text(const InterlaceSpec& spec) {
    std::string out = "base: " + format_word(spec.base, spec.alphabet);
    for (const auto& s : spec.stages) {
        out += "; stage: gap=" + std::to_string(s.gap) + " word=" + format_word(s.word, spec.alphabet);
    }
    return out;
}

std::string to_json(const InterlaceSpec& spec) {
    nlohmann::json j;
    j["base"] = format_word(spec.base, spec.alphabet);
    auto& stages = j["stages"] = nlohmann::json::array();
    for (const auto& s : spec.stages) {
        stages.push_back({{"gap", s.gap}, {"word", format_word(s.word, spec.alphabet)}});
    }
    return j.dump();
}

}  // namespace interlace
