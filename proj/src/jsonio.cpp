#include "diffsys/jsonio.hpp"

#include "diffsys/error.hpp"
#include "diffsys/solver.hpp"

#include <nlohmann/json.hpp>

namespace diffsys {

namespace {

using nlohmann::json;

// ---- writers ----

json basisJson(const BasisPtr& ctx) {
    json arr = json::array();
    for (size_t i = 1; i <= ctx->symbolCount(); ++i) arr.push_back(ctx->name(static_cast<int>(i)));
    return arr;
}

json systemJson(const EquationSystem& S) {
    json arr = json::array();
    for (const auto& eq : S.equations())
        arr.push_back({{"op", eq.op.render()}, {"rhs", eq.rhs.render()}});
    return arr;
}

json entriesJson(const std::vector<std::pair<DifferenceOperator, int>>& entries) {
    json arr = json::array();
    for (const auto& [mult, idx] : entries)
        arr.push_back({{"multiplier", mult.render()}, {"equation", idx + 1}});
    return arr;
}

json certificateJson(const Certificate& c) {
    return {{"kind", c.kind == CertificateKind::ZeroOperator ? "zero-operator"
                                                             : "vanishing-obstruction"},
            {"entries", entriesJson(c.entries)},
            {"combinedOperator", c.combinedOperator.render()},
            {"combinedRHS", c.combinedRHS.render()}};
}

json envelope(const char* command, const EquationSystem& S) {
    json doc;
    doc["schema"] = 1;
    doc["command"] = command;
    doc["basis"] = basisJson(S.context());
    doc["system"] = systemJson(S);
    return doc;
}

std::string dumpDoc(const json& doc) { return doc.dump(2); }

// ---- readers ----

BasisPtr readBasis(const json& doc) {
    std::vector<std::string> names;
    for (const auto& n : doc.at("basis")) names.push_back(n.get<std::string>());
    return makeBasis(std::move(names));
}

EquationSystem readSystem(const BasisPtr& ctx, const json& doc) {
    std::vector<Equation> eqs;
    for (const auto& row : doc.at("system"))
        eqs.push_back({parseOperatorText(ctx, row.at("op").get<std::string>()),
                       parseFunctionText(ctx, row.at("rhs").get<std::string>())});
    return EquationSystem(ctx, std::move(eqs));
}

Window readWindow(const json& doc) {
    Window w;
    w.radius = doc.at("window").at("radius").get<int>();
    return w;
}

Rational readRational(const json& node) {
    auto q = parseRational(node.get<std::string>());
    if (!q) throw Error("not a rational literal: " + node.get<std::string>());
    return *q;
}

std::vector<std::pair<DifferenceOperator, int>> readEntries(const BasisPtr& ctx, const json& node,
                                                            size_t systemSize) {
    std::vector<std::pair<DifferenceOperator, int>> entries;
    for (const auto& e : node) {
        int idx = e.at("equation").get<int>();
        if (idx < 1 || static_cast<size_t>(idx) > systemSize)
            throw Error("certificate entry references equation " + std::to_string(idx) +
                        " of a " + std::to_string(systemSize) + "-equation system");
        entries.emplace_back(parseOperatorText(ctx, e.at("multiplier").get<std::string>()),
                             idx - 1);
    }
    return entries;
}

Certificate readCertificate(const BasisPtr& ctx, const json& node, size_t systemSize) {
    Certificate c;
    std::string kind = node.at("kind").get<std::string>();
    if (kind == "zero-operator")
        c.kind = CertificateKind::ZeroOperator;
    else if (kind == "vanishing-obstruction")
        c.kind = CertificateKind::VanishingObstruction;
    else
        throw Error("unknown certificate kind '" + kind + "'");
    c.entries = readEntries(ctx, node.at("entries"), systemSize);
    c.combinedOperator = parseOperatorText(ctx, node.at("combinedOperator").get<std::string>());
    c.combinedRHS = parseFunctionText(ctx, node.at("combinedRHS").get<std::string>());
    return c;
}

// ---- certify per command ----

CertifyResult pass(std::string detail) { return {true, 0, std::move(detail)}; }
CertifyResult reject(std::string detail) { return {false, 1, std::move(detail)}; }
CertifyResult inconclusive(std::string detail) { return {false, 2, std::move(detail)}; }

CertifyResult certifyUnsolvable(const EquationSystem& S, const json& outcome) {
    Certificate c = readCertificate(S.context(), outcome.at("certificate"), S.size());
    if (c.kind != CertificateKind::ZeroOperator)
        return reject("only zero-operator certificates are certifiable from a report; "
                      "vanishing obstructions depend on a constraint context the report "
                      "does not carry");
    if (!verifyCertificate(S, c))
        return reject("certificate does not verify: the stored combination either "
                      "mismatches its recomputation, has a nonzero combined operator, or "
                      "has a zero combined right-hand side");
    return pass("unsolvability certificate verified: combined operator is zero, combined "
                "right-hand side " +
                c.combinedRHS.render() + " is nonzero");
}

CertifyResult certifySolve(const json& doc) {
    BasisPtr ctx = readBasis(doc);
    EquationSystem S = readSystem(ctx, doc);
    Window w = readWindow(doc);
    const json& outcome = doc.at("outcome");
    std::string kind = outcome.at("kind").get<std::string>();
    if (kind == "solution") {
        SymbolicFunction f = parseFunctionText(ctx, outcome.at("solution").get<std::string>());
        if (!verifySolutionOnWindow(S, f, w))
            return reject("claimed solution fails an equation at a window point");
        return pass("solution verified at every interior point of the radius-" +
                    std::to_string(w.radius) + " window");
    }
    if (kind == "unsolvable") return certifyUnsolvable(S, outcome);
    if (kind == "inconclusive")
        return inconclusive("report outcome is inconclusive: " +
                            outcome.value("reason", std::string("(no reason recorded)")));
    return reject("unknown outcome kind '" + kind + "'");
}

CertifyResult certifyMinSupNorm(const json& doc) {
    BasisPtr ctx = readBasis(doc);
    EquationSystem S = readSystem(ctx, doc);
    Window w = readWindow(doc);
    const json& outcome = doc.at("outcome");
    std::string kind = outcome.at("kind").get<std::string>();
    if (kind == "unsolvable") return certifyUnsolvable(S, outcome);
    if (kind != "value") return reject("unknown outcome kind '" + kind + "'");

    Rational value = readRational(outcome.at("value"));
    std::map<LatticePoint, Rational> witness;
    for (const auto& row : outcome.at("witness")) {
        LatticePoint p;
        for (const auto& c : row.at("point")) p.push_back(Int(c.get<long>()));
        witness[p] = readRational(row.at("value"));
    }

    const Lattice& L = S.shiftLattice();
    std::vector<LatticePoint> pts = windowPoints(L.rank(), w.radius);
    for (const auto& p : pts)
        if (!witness.count(p)) return reject("witness is missing a window point");
    if (witness.size() != pts.size()) return reject("witness lists points outside the window");

    // Feasibility: every equation whose translated stencil stays inside the
    // window must hold on the witness values.
    Rational maxAbs(0);
    for (const auto& [p, v] : witness) maxAbs = std::max(maxAbs, ratAbs(v));
    if (maxAbs != value) return reject("witness sup-norm differs from the claimed value");
    for (const auto& eq : S.equations()) {
        std::vector<LatticePoint> offsets;
        for (const auto& [coeff, shift] : eq.op.terms()) {
            auto c = L.coords(shift);
            if (!c) return reject("operator shift lies outside the shift lattice");
            offsets.push_back(*c);
        }
        for (const auto& p : pts) {
            bool inside = true;
            std::vector<LatticePoint> translated;
            for (const auto& off : offsets) {
                LatticePoint q = p;
                for (size_t i = 0; i < q.size(); ++i) q[i] += off[i];
                for (const auto& ci : q)
                    if (ci > w.radius || ci < -w.radius) inside = false;
                translated.push_back(std::move(q));
            }
            if (!inside) continue;
            Rational lhs(0);
            size_t t = 0;
            for (const auto& [coeff, shift] : eq.op.terms())
                lhs += coeff * witness.at(translated[t++]);
            if (lhs != rhsValueAt(eq.rhs, L.toAmbient(p)))
                return reject("witness violates an in-window equation constraint");
        }
    }

    SupNormResult rerun = minSupNormOnWindow(S, w);
    if (!rerun.feasible) return reject("recomputation finds the window constraints infeasible");
    if (rerun.value != value)
        return reject("recomputed optimum " + renderRational(rerun.value) +
                      " differs from the claimed value " + renderRational(value));
    return pass("witness is feasible with sup-norm " + renderRational(value) +
                " and an independent recomputation attains the same optimum");
}

CertifyResult certifyDeduce(const json& doc) {
    BasisPtr ctx = readBasis(doc);
    EquationSystem S = readSystem(ctx, doc);
    const json& outcome = doc.at("outcome");
    auto entries = readEntries(ctx, outcome.at("entries"), S.size());
    auto [op, rhs] = deduce(S, entries);
    DifferenceOperator storedOp = parseOperatorText(ctx, outcome.at("operator").get<std::string>());
    SymbolicFunction storedRhs = parseFunctionText(ctx, outcome.at("rhs").get<std::string>());
    if (op != storedOp) return reject("recomputed combined operator differs from the report");
    if (!zeroTest(rhs - storedRhs))
        return reject("recomputed combined right-hand side differs from the report");
    return pass("deduction recomputed: " + op.render() + " f = " + rhs.render());
}

CertifyResult certifyPolySolve(const json& doc) {
    BasisPtr ctx = readBasis(doc);
    EquationSystem S = readSystem(ctx, doc);
    const json& outcome = doc.at("outcome");
    std::string kind = outcome.at("kind").get<std::string>();
    if (kind == "solution") {
        SymbolicFunction f = parseFunctionText(ctx, outcome.at("solution").get<std::string>());
        for (const auto& eq : S.equations())
            if (!zeroTest(applyOperator(eq.op, f) - eq.rhs))
                return reject("claimed polynomial leaves a nonzero residual in an equation");
        return pass("polynomial solution satisfies every equation identically");
    }
    if (kind == "no-polynomial") {
        int bound = doc.value("degreeBound", -1);
        if (solvePolynomial(S, bound))
            return reject("recomputation finds a polynomial solution after all");
        return pass("recomputation confirms no polynomial solution up to the degree bound");
    }
    return reject("unknown outcome kind '" + kind + "'");
}

const char* verdictName(GalleryClaim::Verdict v) {
    switch (v) {
    case GalleryClaim::Verdict::Pass: return "pass";
    case GalleryClaim::Verdict::Fail: return "fail";
    default: return "inconclusive";
    }
}

CertifyResult certifyGallery(const json& doc) {
    const json& g = doc.at("gallery");
    std::map<std::string, std::string> params;
    for (const auto& [k, v] : g.at("parameters").items()) params[k] = v.get<std::string>();
    GalleryReport rerun = runGallery(g.at("name").get<std::string>(), params);
    const json& claims = g.at("claims");
    if (claims.size() != rerun.claims.size())
        return reject("rerun produced a different number of claims");
    for (size_t i = 0; i < rerun.claims.size(); ++i) {
        const json& c = claims[i];
        if (c.at("description").get<std::string>() != rerun.claims[i].description ||
            c.at("verdict").get<std::string>() != verdictName(rerun.claims[i].verdict))
            return reject("claim " + std::to_string(i + 1) + " does not reproduce on rerun");
    }
    for (const auto& c : rerun.claims)
        if (c.verdict == GalleryClaim::Verdict::Inconclusive)
            return inconclusive("report contains an inconclusive claim");
    return pass("all " + std::to_string(rerun.claims.size()) +
                " claims reproduce on an independent rerun");
}

CertifyResult certifyParse(const json& doc) {
    std::string text = doc.at("script").get<std::string>();
    WorkbenchScript script = parseScript(text);
    if (renderScript(script) != text)
        return reject("stored script is not in canonical form");
    return pass("script re-parses and is canonical");
}

} // namespace

std::string solveReportJson(const EquationSystem& S, const Window& w, const SolveOutcome& out) {
    json doc = envelope("solve", S);
    doc["window"] = {{"radius", w.radius}};
    json outcome;
    switch (out.kind) {
    case OutcomeKind::Solution:
        outcome["kind"] = "solution";
        outcome["solution"] = out.solution.render();
        outcome["windowOnly"] = out.windowOnly;
        break;
    case OutcomeKind::Unsolvable:
        outcome["kind"] = "unsolvable";
        outcome["certificate"] = certificateJson(*out.certificate);
        break;
    case OutcomeKind::Inconclusive:
        outcome["kind"] = "inconclusive";
        outcome["reason"] = out.reason;
        break;
    }
    doc["outcome"] = std::move(outcome);
    return dumpDoc(doc);
}

std::string minSupNormReportJson(const EquationSystem& S, const Window& w,
                                 const SupNormResult& r) {
    json doc = envelope("min-supnorm", S);
    doc["window"] = {{"radius", w.radius}};
    json outcome;
    if (!r.feasible) {
        outcome["kind"] = "unsolvable";
        outcome["certificate"] = certificateJson(*r.certificate);
    } else {
        outcome["kind"] = "value";
        outcome["value"] = renderRational(r.value);
        json wit = json::array();
        for (const auto& [p, v] : r.witness) {
            json pt = json::array();
            for (const auto& c : p) pt.push_back(c.convert_to<long>());
            wit.push_back({{"point", std::move(pt)}, {"value", renderRational(v)}});
        }
        outcome["witness"] = std::move(wit);
    }
    doc["outcome"] = std::move(outcome);
    return dumpDoc(doc);
}

std::string deduceReportJson(const EquationSystem& S,
                             const std::vector<std::pair<DifferenceOperator, int>>& entries,
                             const DifferenceOperator& combinedOp,
                             const SymbolicFunction& combinedRhs) {
    json doc = envelope("deduce", S);
    doc["outcome"] = {{"kind", "deduced"},
                      {"entries", entriesJson(entries)},
                      {"operator", combinedOp.render()},
                      {"rhs", combinedRhs.render()}};
    return dumpDoc(doc);
}

std::string polySolveReportJson(const EquationSystem& S, int degreeBound,
                                const std::optional<SymbolicFunction>& solution) {
    json doc = envelope("poly-solve", S);
    doc["degreeBound"] = degreeBound;
    if (solution)
        doc["outcome"] = {{"kind", "solution"}, {"solution", solution->render()}};
    else
        doc["outcome"] = {{"kind", "no-polynomial"}};
    return dumpDoc(doc);
}

std::string galleryReportJson(const GalleryReport& report) {
    json doc;
    doc["schema"] = 1;
    doc["command"] = "gallery";
    json params = json::object();
    for (const auto& [k, v] : report.parameters) params[k] = v;
    json claims = json::array();
    for (const auto& c : report.claims)
        claims.push_back({{"description", c.description},
                          {"verdict", verdictName(c.verdict)},
                          {"evidence", c.evidence}});
    doc["gallery"] = {{"name", report.name},
                      {"parameters", std::move(params)},
                      {"claims", std::move(claims)},
                      {"allPass", report.allPass()}};
    return dumpDoc(doc);
}

std::string parseReportJson(const WorkbenchScript& script) {
    json doc;
    doc["schema"] = 1;
    doc["command"] = "parse";
    doc["basis"] = basisJson(script.ctx);
    doc["ok"] = true;
    doc["script"] = renderScript(script);
    return dumpDoc(doc);
}

CertifyResult certifyReport(const std::string& jsonText) {
    try {
        json doc = json::parse(jsonText);
        if (!doc.is_object()) return reject("report is not a JSON object");
        if (doc.value("schema", 0) != 1)
            return reject("unsupported schema version");
        std::string command = doc.at("command").get<std::string>();
        if (command == "solve") return certifySolve(doc);
        if (command == "min-supnorm") return certifyMinSupNorm(doc);
        if (command == "deduce") return certifyDeduce(doc);
        if (command == "poly-solve") return certifyPolySolve(doc);
        if (command == "gallery") return certifyGallery(doc);
        if (command == "parse") return certifyParse(doc);
        return reject("unknown command '" + command + "'");
    } catch (const nlohmann::json::exception& e) {
        return reject(std::string("malformed report: ") + e.what());
    } catch (const Error& e) {
        return reject(std::string("invalid report content: ") + e.what());
    }
}

} // namespace diffsys
