#include "interlace/export.hpp"

#include <array>
#include <sstream>

#include "json.hpp"

namespace interlace {

namespace {

constexpr int kCellPx = 16;

struct MarkPath {
    std::string_view label;
    char glyph;
    // bend path in tile-local coordinates, y pointing up
    std::array<std::array<double, 2>, 3> points;
};

constexpr std::array<MarkPath, 4> kMarks{{
    {"SW", 'L', {{{0.2, 0.8}, {0.2, 0.2}, {0.8, 0.2}}}},
    {"SE", 'J', {{{0.2, 0.2}, {0.8, 0.2}, {0.8, 0.8}}}},
    {"NW", 'r', {{{0.2, 0.2}, {0.2, 0.8}, {0.8, 0.8}}}},
    {"NE", '7', {{{0.2, 0.8}, {0.8, 0.8}, {0.8, 0.2}}}},
}};

const MarkPath* find_mark(std::string_view label) {
    for (const auto& m : kMarks) {
        if (m.label == label) {
            return &m;
        }
    }
    return nullptr;
}

std::string fmt(double v) {
    std::ostringstream o;
    o << v;
    return o.str();
}

}  // namespace

PatchFormat parse_patch_format(const std::string& name) {
    if (name == "svg") {
        return PatchFormat::svg;
    }
    if (name == "ascii") {
        return PatchFormat::ascii;
    }
    if (name == "json") {
        return PatchFormat::json;
    }
    throw UsageError("unknown patch format '" + name + "' (expected svg, ascii or json)");
}

std::string to_svg(const Patch2D& patch, const Alphabet& alphabet) {
    const Index w = patch.xs().size();
    const Index h = patch.ys().size();
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * kCellPx << "\" height=\"" << h * kCellPx
        << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    if (patch.kind() == LatticeKind::diamond) {
        // diamond cells sit on the 45-degree lattice; draw them as rotated unit squares
        out << "<g transform=\"rotate(-45 " << fmt(w / 2.0) << ' ' << fmt(h / 2.0) << ")\">\n";
    }
    for (Index y = patch.ys().hi; y >= patch.ys().lo; --y) {
        const Index row = patch.ys().hi - y;
        for (Index x = patch.xs().lo; x <= patch.xs().hi; ++x) {
            const Index col = x - patch.xs().lo;
            const Cell& c = patch.at({x, y});
            out << "<rect x=\"" << col << "\" y=\"" << row
                << "\" width=\"1\" height=\"1\" fill=\"" << (c.is_null() ? "#ddd" : "#fff")
                << "\" stroke=\"#999\" stroke-width=\"0.02\"/>\n";
            if (!c.is_symbol()) {
                continue;
            }
            const std::string& label = alphabet.label(c.symbol());
            if (const auto* m = find_mark(label)) {
                out << "<polyline points=\"";
                for (std::size_t i = 0; i < m->points.size(); ++i) {
                    const auto [u, v] = m->points[i];
                    out << (i ? " " : "") << fmt(static_cast<double>(col) + u) << ','
                        << fmt(static_cast<double>(row) + 1.0 - v);
                }
                out << "\" fill=\"none\" stroke=\"#c00\" stroke-width=\"0.12\"/>\n";
            } else if (label != ".") {
                out << "<text x=\"" << fmt(static_cast<double>(col) + 0.5) << "\" y=\""
                    << fmt(static_cast<double>(row) + 0.7) << "\" font-size=\"0.6\" text-anchor=\"middle\">" << label
                    << "</text>\n";
            }
        }
    }
    if (patch.kind() == LatticeKind::diamond) {
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string to_ascii(const Patch2D& patch, const Alphabet& alphabet) {
    std::string out;
    for (Index y = patch.ys().hi; y >= patch.ys().lo; --y) {
        for (Index x = patch.xs().lo; x <= patch.xs().hi; ++x) {
            const Cell& c = patch.at({x, y});
            if (!c.is_symbol()) {
                out += '*';
                continue;
            }
            const std::string& label = alphabet.label(c.symbol());
            const auto* m = find_mark(label);
            out += m ? m->glyph : label.front();
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Patch2D& patch, const Alphabet& alphabet) {
    nlohmann::json j;
    j["kind"] = to_string(patch.kind());
    j["x"] = {patch.xs().lo, patch.xs().hi};
    j["y"] = {patch.ys().lo, patch.ys().hi};
    auto& rows = j["rows"] = nlohmann::json::array();
    for (Index y = patch.ys().lo; y <= patch.ys().hi; ++y) {
        auto row = nlohmann::json::array();
        for (Index x = patch.xs().lo; x <= patch.xs().hi; ++x) {
            row.push_back(alphabet.label(patch.at({x, y})));
        }
        rows.push_back(std::move(row));
    }
    return j.dump();
}

Patch2D patch_from_json(const std::string& text, Alphabet& alphabet) {
    try {
        const auto j = nlohmann::json::parse(text);
        const auto kind_name = j.at("kind").get<std::string>();
        LatticeKind kind{};
        if (kind_name == "square") {
            kind = LatticeKind::square;
        } else if (kind_name == "diamond") {
            kind = LatticeKind::diamond;
        } else {
            throw ParseError("unknown lattice kind '" + kind_name + "'");
        }
        const Interval xs{j.at("x").at(0).get<Index>(), j.at("x").at(1).get<Index>()};
        const Interval ys{j.at("y").at(0).get<Index>(), j.at("y").at(1).get<Index>()};
        Patch2D patch(kind, xs, ys);
        const auto& rows = j.at("rows");
        if (static_cast<Index>(rows.size()) != ys.size()) {
            throw ParseError("patch row count does not match its y range");
        }
        for (Index y = ys.lo; y <= ys.hi; ++y) {
            const auto& row = rows.at(static_cast<std::size_t>(y - ys.lo));
            if (static_cast<Index>(row.size()) != xs.size()) {
                throw ParseError("patch row width does not match its x range");
            }
            for (Index x = xs.lo; x <= xs.hi; ++x) {
                const auto label = row.at(static_cast<std::size_t>(x - xs.lo)).get<std::string>();
                patch.set({x, y}, Alphabet::is_null_label(label) ? Cell::null() : Cell::of(alphabet.intern(label)));
            }
        }
        return patch;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad patch document: ") + e.what());
    }
}

std::string export_patch(const Patch2D& patch, const Alphabet& alphabet, PatchFormat format) {
    switch (format) {
        case PatchFormat::svg: return to_svg(patch, alphabet);
        case PatchFormat::ascii: return to_ascii(patch, alphabet);
        case PatchFormat::json: return to_json(patch, alphabet);
    }
    throw UsageError("unknown patch format");
}

}  // namespace interlace
