#include "diffsys/jsonio.hpp"
#include "diffsys/solver.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace diffsys;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconclusive = 2;

std::string readInput(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* certificateKindName(CertificateKind k) {
    return k == CertificateKind::ZeroOperator ? "zero-operator" : "vanishing-obstruction";
}

void printCertificateText(std::ostream& os, const Certificate& c) {
    os << "certificate: " << certificateKindName(c.kind) << "\n";
    for (const auto& [mult, idx] : c.entries)
        os << "  multiplier " << mult.render() << " applied to equation " << idx + 1 << "\n";
    os << "combined operator: " << c.combinedOperator.render() << "\n";
    os << "combined rhs: " << c.combinedRHS.render() << "\n";
}

int outcomeExit(const SolveOutcome& out) {
    return out.kind == OutcomeKind::Inconclusive ? kExitInconclusive : kExitOk;
}

int runSolve(const std::string& script, const std::string& format, int radius) {
    WorkbenchScript s = parseScript(script);
    EquationSystem S = s.system();
    Window w{radius};
    SolveOutcome out = solveFinite(S, w);
    if (format == "json") {
        std::cout << solveReportJson(S, w, out) << "\n";
        return outcomeExit(out);
    }
    std::cout << "equations: " << S.size() << "\n";
    std::cout << "window: radius " << w.radius << "\n";
    switch (out.kind) {
    case OutcomeKind::Solution:
        std::cout << "outcome: solution\n";
        std::cout << "solution: " << out.solution.render() << "\n";
        std::cout << "verified: every interior window point"
                  << (out.windowOnly ? " (window only; right-hand sides do not vanish off "
                                       "the shift lattice)"
                                     : " and zero off the shift lattice")
                  << "\n";
        break;
    case OutcomeKind::Unsolvable:
        std::cout << "outcome: unsolvable\n";
        printCertificateText(std::cout, *out.certificate);
        break;
    case OutcomeKind::Inconclusive:
        std::cout << "outcome: inconclusive\n";
        std::cout << "reason: " << out.reason << "\n";
        break;
    }
    return outcomeExit(out);
}

int runMinSupNorm(const std::string& script, const std::string& format, int radius) {
    WorkbenchScript s = parseScript(script);
    EquationSystem S = s.system();
    Window w{radius};
    SupNormResult r = minSupNormOnWindow(S, w);
    if (format == "json") {
        std::cout << minSupNormReportJson(S, w, r) << "\n";
        return kExitOk;
    }
    std::cout << "equations: " << S.size() << "\n";
    std::cout << "window: radius " << w.radius << "\n";
    if (!r.feasible) {
        std::cout << "outcome: unsolvable\n";
        printCertificateText(std::cout, *r.certificate);
        return kExitOk;
    }
    std::cout << "outcome: value\n";
    std::cout << "minimum sup-norm over window assignments: " << renderRational(r.value) << "\n";
    std::cout << "witness points: " << r.witness.size() << "\n";
    return kExitOk;
}

int runDeduce(const std::string& script, const std::string& format) {
    WorkbenchScript s = parseScript(script);
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
    if (format == "json") {
        std::cout << deduceReportJson(S, entries, op, rhs) << "\n";
        return kExitOk;
    }
    std::cout << "equations: " << S.size() << "\n";
    for (const auto& e : chosen->entries)
        std::cout << "entry: multiplier " << e.multiplier.render() << " applied to equation "
                  << e.equation << "\n";
    std::cout << "deduced operator: " << op.render() << "\n";
    std::cout << "deduced rhs: " << rhs.render() << "\n";
    return kExitOk;
}

int runPolySolve(const std::string& script, const std::string& format, int degreeBound) {
    WorkbenchScript s = parseScript(script);
    EquationSystem S = s.system();
    std::optional<SymbolicFunction> sol = solvePolynomial(S, degreeBound);
    if (format == "json") {
        std::cout << polySolveReportJson(S, degreeBound, sol) << "\n";
        return kExitOk;
    }
    std::cout << "equations: " << S.size() << "\n";
    if (sol) {
        std::cout << "outcome: solution\n";
        std::cout << "solution: " << sol->render() << "\n";
    } else {
        std::cout << "outcome: no-polynomial\n";
        std::cout << "degree bound: "
                  << (degreeBound < 0 ? std::string("automatic") : std::to_string(degreeBound))
                  << "\n";
    }
    return kExitOk;
}

const char* verdictName(GalleryClaim::Verdict v) {
    switch (v) {
    case GalleryClaim::Verdict::Pass: return "pass";
    case GalleryClaim::Verdict::Fail: return "fail";
    default: return "inconclusive";
    }
}

int runGalleryCmd(const std::string& name, const std::map<std::string, std::string>& params,
                  const std::string& format) {
    GalleryReport rep = runGallery(name, params);
    bool anyInconclusive = false;
    for (const auto& c : rep.claims)
        if (c.verdict == GalleryClaim::Verdict::Inconclusive) anyInconclusive = true;
    if (format == "json") {
        std::cout << galleryReportJson(rep) << "\n";
    } else {
        std::cout << "gallery: " << rep.name << "\n";
        for (const auto& [k, v] : rep.parameters) std::cout << "parameter: " << k << "=" << v << "\n";
        size_t i = 0;
        for (const auto& c : rep.claims) {
            std::cout << "claim " << ++i << " [" << verdictName(c.verdict)
                      << "]: " << c.description << "\n";
            if (!c.evidence.empty()) std::cout << "  evidence: " << c.evidence << "\n";
        }
        std::cout << "result: " << (rep.allPass() ? "all claims pass" : "not all claims pass")
                  << "\n";
    }
    return anyInconclusive ? kExitInconclusive : kExitOk;
}

int runParse(const std::string& script, const std::string& format, bool checkOnly) {
    WorkbenchScript s = parseScript(script);
    if (format == "json") {
        std::cout << parseReportJson(s) << "\n";
        return kExitOk;
    }
    if (checkOnly)
        std::cout << "ok\n";
    else
        std::cout << renderScript(s);
    return kExitOk;
}

int runCertify(const std::string& reportText, const std::string& format) {
    CertifyResult r = certifyReport(reportText);
    if (format == "json") {
        nlohmann::json doc;
        doc["schema"] = 1;
        doc["command"] = "certify";
        doc["ok"] = r.ok;
        doc["detail"] = r.detail;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << (r.ok ? "certified" : r.exitCode == kExitInconclusive ? "inconclusive"
                                                                           : "rejected")
                  << ": " << r.detail << "\n";
    }
    return r.exitCode;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for finite systems of difference equations over the reals"};
    app.require_subcommand(1);

    std::string format = "text";
    bool timings = false;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_flag("--timings", timings, "print elapsed wall time to stderr");

    std::string scriptPath = "-";
    int radius = 4;
    int degreeBound = -1;
    std::string reportPath;
    bool checkOnly = false;
    std::string galleryConstruction;
    std::map<std::string, long long> galleryParams;

    auto addScriptArg = [&](CLI::App* sub) {
        sub->add_option("script", scriptPath, "script file, or '-' for standard input")
            ->capture_default_str();
        sub->fallthrough();
    };

    CLI::App* solveCmd = app.add_subcommand("solve", "solve the script's system on a window");
    addScriptArg(solveCmd);
    solveCmd->add_option("--radius", radius, "window radius")->capture_default_str();

    CLI::App* normCmd = app.add_subcommand(
        "min-supnorm", "exact minimum sup-norm over window assignments satisfying the system");
    addScriptArg(normCmd);
    normCmd->add_option("--radius", radius, "window radius")->capture_default_str();

    CLI::App* deduceCmd =
        app.add_subcommand("deduce", "run the script's deduce directive and print the result");
    addScriptArg(deduceCmd);

    CLI::App* polyCmd =
        app.add_subcommand("poly-solve", "solve by polynomial ansatz up to a degree bound");
    addScriptArg(polyCmd);
    polyCmd->add_option("--degree-bound", degreeBound,
                        "maximum polynomial degree (-1 picks one from the system)")
        ->capture_default_str();

    CLI::App* galleryCmd =
        app.add_subcommand("gallery", "run a named example construction and check its claims");
    galleryCmd->add_option("name", galleryConstruction, "construction name")->required();
    galleryCmd->fallthrough();
    for (const char* key : {"n", "k", "radius", "rank", "samples", "trials", "seed"})
        galleryCmd->add_option(std::string("--") + key, galleryParams[key]);

    CLI::App* parseCmd = app.add_subcommand("parse", "parse a script and print its canonical form");
    addScriptArg(parseCmd);
    parseCmd->add_flag("--check", checkOnly, "validate only; print 'ok' instead of the script");

    CLI::App* certifyCmd =
        app.add_subcommand("certify", "re-verify a JSON report produced by another subcommand");
    certifyCmd->add_option("report", reportPath, "report file, or '-' for standard input")
        ->required();
    certifyCmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    auto started = std::chrono::steady_clock::now();
    int rc = kExitUsage;
    try {
        if (solveCmd->parsed()) {
            rc = runSolve(readInput(scriptPath), format, radius);
        } else if (normCmd->parsed()) {
            rc = runMinSupNorm(readInput(scriptPath), format, radius);
        } else if (deduceCmd->parsed()) {
            rc = runDeduce(readInput(scriptPath), format);
        } else if (polyCmd->parsed()) {
            rc = runPolySolve(readInput(scriptPath), format, degreeBound);
        } else if (galleryCmd->parsed()) {
            std::map<std::string, std::string> params;
            for (const auto& [key, value] : galleryParams)
                if (galleryCmd->count(std::string("--") + key) > 0)
                    params[key] = std::to_string(value);
            rc = runGalleryCmd(galleryConstruction, params, format);
        } else if (parseCmd->parsed()) {
            rc = runParse(readInput(scriptPath), format, checkOnly);
        } else if (certifyCmd->parsed()) {
            rc = runCertify(readInput(reportPath), format);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        rc = kExitUsage;
    } catch (const ResourceError& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        rc = kExitInconclusive;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = kExitUsage;
    }
    if (timings) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
        std::cerr << "elapsed: " << ms << " ms\n";
    }
    return rc;
}
