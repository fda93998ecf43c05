#include "diffsys/jsonio.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace diffsys;

namespace {

EquationSystem systemOf(const std::string& script) { return parseScript(script).system(); }

// Same contract as the command line tool: the script must contain exactly one
// deduce directive.
std::string deduceFromScript(const std::string& text) {
    WorkbenchScript s = parseScript(text);
    EquationSystem S = s.system();
    const WorkbenchScript::Directive* chosen = nullptr;
    for (const auto& d : s.directives)
        if (d.kind == WorkbenchScript::Directive::Kind::Deduce) {
            if (chosen) throw Error("script contains more than one deduce directive");
            chosen = &d;
        }
    if (!chosen) throw Error("script contains no deduce directive");
    std::vector<std::pair<DifferenceOperator, int>> entries;
    for (const auto& e : chosen->entries) entries.emplace_back(e.multiplier, e.equation - 1);
    auto [op, rhs] = deduce(S, entries);
    return deduceReportJson(S, entries, op, rhs);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact workbench for finite systems of difference equations. All entry "
              "points exchange script text and JSON report strings; the python package "
              "wraps them with json decoding.";

    py::register_exception<Error>(m, "WorkbenchError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ScriptError", PyExc_ValueError);

    m.def(
        "solve",
        [](const std::string& script, int radius) {
            EquationSystem S = systemOf(script);
            Window w{radius};
            return solveReportJson(S, w, solveFinite(S, w));
        },
        py::arg("script"), py::arg("radius") = 4,
        "Solve the script's system on a finite window; returns a JSON report.");

    m.def(
        "min_supnorm",
        [](const std::string& script, int radius) {
            EquationSystem S = systemOf(script);
            Window w{radius};
            return minSupNormReportJson(S, w, minSupNormOnWindow(S, w));
        },
        py::arg("script"), py::arg("radius") = 4,
        "Exact minimum sup-norm over window assignments satisfying the system.");

    m.def("deduce", &deduceFromScript, py::arg("script"),
          "Run the script's deduce directive; returns a JSON report.");

    m.def(
        "poly_solve",
        [](const std::string& script, int degreeBound) {
            EquationSystem S = systemOf(script);
            return polySolveReportJson(S, degreeBound, solvePolynomial(S, degreeBound));
        },
        py::arg("script"), py::arg("degree_bound") = -1,
        "Solve by polynomial ansatz up to a degree bound (-1 picks one from the system).");

    m.def(
        "gallery",
        [](const std::string& name, const std::map<std::string, std::string>& params) {
            return galleryReportJson(runGallery(name, params));
        },
        py::arg("name"), py::arg("params") = std::map<std::string, std::string>{},
        "Run a named example construction and check its claims.");

    m.def("gallery_names", &galleryNames, "Names accepted by gallery().");

    m.def(
        "certify",
        [](const std::string& report) {
            CertifyResult r = certifyReport(report);
            return py::make_tuple(r.ok, r.exitCode, r.detail);
        },
        py::arg("report"), "Re-verify a JSON report; returns (ok, exit_code, detail).");

    m.def(
        "canonical",
        [](const std::string& script) { return renderScript(parseScript(script)); },
        py::arg("script"), "Parse a script and return its canonical rendering.");
}
