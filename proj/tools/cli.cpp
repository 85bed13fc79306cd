#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "interlace/export.hpp"
#include "interlace/robinson.hpp"
#include "interlace/spec_io.hpp"
#include "interlace/substitution.hpp"
#include "interlace/toeplitz.hpp"
#include "json.hpp"

namespace interlace::cli {

namespace {

struct RunConfig {
    std::string command;
    std::string spec;
    std::string spec_file;
    Index radius = 0;
    std::string rounds = "limit";
    std::string format = "text";
    std::string out_path;
    bool verbose = false;
};

std::string join(const std::vector<Index>& v) {
    std::string s;
    for (const auto i : v) {
        s += (s.empty() ? "" : ", ") + std::to_string(i);
    }
    return "{" + s + "}";
}

LimitOptions limit_options() {
    LimitOptions opts;
    if (const char* env = std::getenv("INTERLACE_MAX_ROUNDS")) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(env, &used);
            if (used != std::string_view(env).size() || v < 1) {
                throw std::invalid_argument(env);
            }
            opts.max_rounds = v;
        } catch (const std::logic_error&) {
            throw UsageError(std::string("INTERLACE_MAX_ROUNDS must be a positive integer, got '") + env + "'");
        }
    }
    return opts;
}

InterlaceSpec spec_of(const RunConfig& cfg) {
    if (!cfg.spec_file.empty()) {
        return parse_spec(read_file(cfg.spec_file));
    }
    if (cfg.spec.empty()) {
        throw UsageError("--spec or --spec-file is required");
    }
    return load_spec(cfg.spec);
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed) {
        if (cfg.format == f) {
            return;
        }
    }
    throw UsageError("format '" + cfg.format + "' is not available for " + cfg.command);
}

struct Outcome {
    std::string document;
    int code = kOk;
};

Outcome cmd_derive(const RunConfig& cfg) {
    require_format(cfg, {"text", "json"});
    const auto spec = spec_of(cfg);
    const auto opts = limit_options();
    const auto d = derive_substitution(spec, opts);
    const bool verified = verify_fixed_point(d.substitution, spec, cfg.radius, opts);
    const auto& sub = d.substitution;

    std::vector<Index> slots(d.trace.null_slots.begin(), d.trace.null_slots.end());
    if (cfg.format == "json") {
        nlohmann::json j;
        j["substitution"] = nlohmann::json::parse(to_json(sub));
        j["letterwise"] = letterwise(sub);
        j["trace"] = {{"period_word", format_cells(d.trace.period_word, spec.alphabet)},
                      {"null_slots", slots},
                      {"seed_positions", d.trace.seed_positions},
                      {"rounds_for_seed", d.trace.rounds_for_seed}};
        j["verified"] = verified;
        j["radius"] = cfg.radius;
        return {j.dump(2) + "\n", verified ? kOk : kVerification};
    }
    std::ostringstream out;
    out << "substitution: " << to_text(sub) << '\n';
    for (const auto& line : letterwise(sub)) {
        out << "  " << line << '\n';
    }
    out << "period: " << format_cells(d.trace.period_word, spec.alphabet) << '\n';
    out << "null slots: " << join(slots) << '\n';
    out << "seed positions: " << join(d.trace.seed_positions) << '\n';
    out << "rounds for seed: " << d.trace.rounds_for_seed << '\n';
    out << "fixed point: " << (verified ? "verified" : "FAILED") << " (radius " << cfg.radius << ")\n";
    return {out.str(), verified ? kOk : kVerification};
}

Outcome cmd_window(const RunConfig& cfg) {
    require_format(cfg, {"text", "json"});
    const auto spec = spec_of(cfg);
    const auto lim = limit_window(spec, cfg.radius, limit_options());
    if (cfg.format == "json") {
        nlohmann::json j;
        j["lo"] = lim.window.lo();
        j["hi"] = lim.window.hi();
        auto& cells = j["cells"] = nlohmann::json::array();
        for (const auto& c : lim.window.values()) {
            cells.push_back(spec.alphabet.label(c));
        }
        j["seed_positions"] = lim.seed_positions;
        j["rounds_used"] = lim.rounds_used;
        return {j.dump() + "\n"};
    }
    std::ostringstream out;
    out << "...";
    for (Index i = lim.window.lo(); i <= lim.window.hi(); ++i) {
        const auto label = spec.alphabet.label(lim.window.at(i));
        const bool seed = std::binary_search(lim.seed_positions.begin(), lim.seed_positions.end(), i);
        out << ' ' << (seed ? "[" + label + "]" : label);
    }
    out << " ...\n";
    if (cfg.verbose) {
        out << "positions " << lim.window.lo() << ".." << lim.window.hi() << ", seed "
            << join(lim.seed_positions) << ", stable after " << lim.rounds_used << " rounds\n";
    }
    return {out.str()};
}

Outcome cmd_check(const RunConfig& cfg) {
    require_format(cfg, {"text", "json"});
    const auto spec = spec_of(cfg);
    const auto report = almost_toeplitz_check(spec, cfg.radius, limit_options());
    const int code = report.uncertified_is_seed() ? kOk : kVerification;
    if (cfg.format == "json") {
        return {to_json(report) + "\n", code};
    }
    std::ostringstream out;
    out << "certified: " << report.certified.size() << " positions in [" << report.analysis_range.lo << ", "
        << report.analysis_range.hi << "]\n";
    out << "uncertified: " << join(report.uncertified) << '\n';
    out << "seed: " << join(report.seed_positions) << '\n';
    if (cfg.verbose) {
        for (const auto& c : report.certified) {
            out << "  " << c.position << " period " << c.period << " checked [" << c.checked_range.lo << ", "
                << c.checked_range.hi << "]\n";
        }
    }
    out << "almost toeplitz: " << (code == kOk ? "yes" : "NO") << '\n';
    return {out.str(), code};
}

Outcome cmd_tile(const RunConfig& cfg, std::ostream& err) {
    const auto format = parse_patch_format(cfg.format == "text" ? "ascii" : cfg.format);
    if (cfg.radius < 3) {
        throw UsageError("tile needs --radius >= 3");
    }
    std::optional<int> rounds;
    if (cfg.rounds != "limit") {
        try {
            std::size_t used = 0;
            rounds = std::stoi(cfg.rounds, &used);
            if (used != cfg.rounds.size() || *rounds < 0) {
                throw std::invalid_argument(cfg.rounds);
            }
        } catch (const std::logic_error&) {
            throw UsageError("--rounds takes a non-negative integer or 'limit'");
        }
    }
    const auto patch = generate_robinson(cfg.radius, rounds);
    int code = kOk;
    if (!rounds) {
        const int max_level = std::bit_width(static_cast<std::uint64_t>(cfg.radius)) - 3;
        if (max_level >= 0) {
            const auto report = verify_hierarchy(patch, max_level);
            if (cfg.verbose || !report.ok()) {
                err << "hierarchy: levels 0.." << max_level << ", " << report.violations.size() << " violations, "
                    << to_string(report.chirality) << " chirality\n";
            }
            code = report.ok() ? kOk : kVerification;
        }
    }
    return {export_patch(patch, robinson_alphabet(), format), code};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Interlacing periodic words: substitution fixed points and Robinson hierarchies", "interlace"};
    app.require_subcommand(1);
    RunConfig cfg;

    std::optional<Index> radius;
    const auto add_common = [&](CLI::App* sub, Index default_radius, bool takes_spec) {
        if (takes_spec) {
            sub->add_option("--spec", cfg.spec, "inline spec, or a path to a spec file");
            sub->add_option("--spec-file", cfg.spec_file, "spec file");
        }
        sub->add_option("--radius", radius, "window radius (default " + std::to_string(default_radius) + ")");
        sub->callback([&cfg, &radius, default_radius] { cfg.radius = radius.value_or(default_radius); });
        sub->add_option("--format", cfg.format, "text, json, svg or ascii")->default_val("text");
        sub->add_option("--out", cfg.out_path, "write the result here instead of stdout");
        sub->add_flag("-v,--verbose", cfg.verbose);
    };
    add_common(app.add_subcommand("derive", "derive and verify the substitution of a spec"), 256, true);
    add_common(app.add_subcommand("window", "print the limit word around the origin"), 16, true);
    add_common(app.add_subcommand("check", "certify periodic parts of the limit"), 64, true);
    auto* tile = app.add_subcommand("tile", "generate a Robinson-hierarchy patch");
    add_common(tile, 15, false);
    tile->add_option("--rounds", cfg.rounds, "number of rounds, or 'limit'")->default_val("limit");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "interlace: " << e.what() << '\n';
        return kParseError;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        if (cfg.radius < 1) {
            throw UsageError("--radius must be >= 1");
        }
        Outcome result;
        if (cfg.command == "derive") {
            result = cmd_derive(cfg);
        } else if (cfg.command == "window") {
            result = cmd_window(cfg);
        } else if (cfg.command == "check") {
            result = cmd_check(cfg);
        } else {
            result = cmd_tile(cfg, err);
        }
        if (cfg.out_path.empty()) {
            out << result.document;
        } else {
            write_file(cfg.out_path, result.document);
        }
        return result.code;
    } catch (const ParseError& e) {
        err << "interlace: parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const UsageError& e) {
        err << "interlace: usage error: " << e.what() << '\n';
        return kParseError;
    } catch (const DivergenceError& e) {
        err << "interlace: divergence: " << e.what() << '\n';
        return kDivergence;
    } catch (const VerificationError& e) {
        err << "interlace: verification error: " << e.what() << '\n';
        return kVerification;
    } catch (const DerivationError& e) {
        err << "interlace: derivation error: " << e.what() << '\n';
        return kVerification;
    } catch (const IoError& e) {
        err << "interlace: " << e.what() << '\n';
        return kIoError;
    } catch (const Error& e) {
        err << "interlace: " << e.what() << '\n';
        return kFailure;
    }
}

}  // namespace interlace::cli
