#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "interlace/export.hpp"
#include "interlace/robinson.hpp"
#include "interlace/spec_io.hpp"
#include "interlace/substitution.hpp"
#include "interlace/toeplitz.hpp"
#include "json.hpp"

namespace py = pybind11;
using namespace interlace;

namespace {

py::object from_json(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

LimitOptions limit_options(std::optional<int> max_rounds) { return LimitOptions{max_rounds}; }

py::dict derive(const InterlaceSpec& spec, Index radius, std::optional<int> max_rounds) {
    const auto opts = limit_options(max_rounds);
    const auto d = derive_substitution(spec, opts);
    py::dict out;
    out["text"] = to_text(d.substitution);
    out["substitution"] = from_json(to_json(d.substitution));
    out["letterwise"] = letterwise(d.substitution);
    out["period_word"] = format_cells(d.trace.period_word, spec.alphabet);
    out["null_slots"] = d.trace.null_slots;
    out["seed_positions"] = d.trace.seed_positions;
    out["rounds_for_seed"] = d.trace.rounds_for_seed;
    out["verified"] = verify_fixed_point(d.substitution, spec, radius, opts);
    return out;
}

py::dict window(const InterlaceSpec& spec, Index radius, std::optional<int> max_rounds) {
    const auto lim = limit_window(spec, radius, limit_options(max_rounds));
    std::vector<std::string> cells;
    for (const auto& c : lim.window.values()) {
        cells.push_back(spec.alphabet.label(c));
    }
    py::dict out;
    out["lo"] = lim.window.lo();
    out["hi"] = lim.window.hi();
    out["cells"] = cells;
    out["seed_positions"] = lim.seed_positions;
    out["rounds_used"] = lim.rounds_used;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Interlaced periodic words, derived substitutions and Robinson patches";

    auto base = py::register_exception<Error>(m, "InterlaceError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base);
    py::register_exception<DivergenceError>(m, "DivergenceError", base);
    py::register_exception<DerivationError>(m, "DerivationError", base);
    py::register_exception<VerificationError>(m, "VerificationError", base);
    py::register_exception<DomainError>(m, "DomainError", base);
    py::register_exception<UsageError>(m, "UsageError", base);

    py::class_<InterlaceSpec>(m, "Spec")
        .def(py::init([](const std::string& text) { return parse_spec(text); }), py::arg("text"))
        .def_property_readonly("stage_count", [](const InterlaceSpec& s) { return s.stages.size(); })
        .def("to_text", [](const InterlaceSpec& s) { return to_text(s); })
        .def("to_json", [](const InterlaceSpec& s) { return to_json(s); })
        .def("__repr__", [](const InterlaceSpec& s) { return "Spec('" + to_text(s) + "')"; });

    m.def("derive", &derive, py::arg("spec"), py::arg("radius") = 256, py::arg("max_rounds") = py::none(),
          "Derive the blockwise substitution of a spec and verify its fixed point.");
    m.def("window", &window, py::arg("spec"), py::arg("radius") = 16, py::arg("max_rounds") = py::none(),
          "Limit word on [-radius, radius].");
    m.def(
        "compose",
        [](const InterlaceSpec& spec, int rounds, Index lo, Index hi) {
            const auto w = compose(spec, rounds, {lo, hi});
            std::vector<std::string> out;
            for (const auto& c : w.values()) {
                out.push_back(spec.alphabet.label(c));
            }
            return out;
        },
        py::arg("spec"), py::arg("rounds"), py::arg("lo"), py::arg("hi"));
    m.def(
        "check",
        [](const InterlaceSpec& spec, Index radius, std::optional<int> max_rounds) {
            return from_json(to_json(almost_toeplitz_check(spec, radius, limit_options(max_rounds))));
        },
        py::arg("spec"), py::arg("radius") = 64, py::arg("max_rounds") = py::none(),
        "Periodic-part certificates for every position of [-radius, radius].");
    m.def("expanded_period", &expanded_period, py::arg("x"), py::arg("gap"));
    m.def(
        "definition_layer",
        [](Index x, Index y) {
            const auto l = definition_layer({x, y});
            return py::make_tuple(to_string(l.source), l.round);
        },
        py::arg("x"), py::arg("y"));
    m.def(
        "robinson_patch",
        [](Index radius, std::optional<int> rounds, const std::string& format) {
            const auto patch = generate_robinson(radius, rounds);
            const auto text = export_patch(patch, robinson_alphabet(), parse_patch_format(format));
            return format == "json" ? from_json(text) : py::str(text);
        },
        py::arg("radius") = 15, py::arg("rounds") = py::none(), py::arg("format") = "json",
        "Robinson-hierarchy patch on [-radius, radius]^2 as json, ascii or svg.");
    m.def(
        "verify_hierarchy",
        [](Index radius, int max_level) {
            const auto r = verify_hierarchy(generate_robinson(radius), max_level);
            py::dict out;
            out["ok"] = r.ok();
            out["violations"] = r.violations.size();
            out["chirality"] = to_string(r.chirality);
            std::vector<std::size_t> counts;
            for (const auto& c : r.centers) {
                counts.push_back(c.size());
            }
            out["centers_per_level"] = counts;
            return out;
        },
        py::arg("radius"), py::arg("max_level"));
}
