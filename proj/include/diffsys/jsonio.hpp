#pragma once

#include "diffsys/dsl.hpp"
#include "diffsys/gallery.hpp"

#include <optional>
#include <string>

namespace diffsys {

/// JSON report builders, schema version 1. Every exact quantity is embedded
/// as a string in the same grammar the parsers accept, so a report is a
/// self-contained input for independent re-verification; object keys
/// serialize in sorted order, making the bytes a function of the content.
/// Equation indices are 1-based in reports.
std::string solveReportJson(const EquationSystem& S, const Window& w, const SolveOutcome& out);
std::string minSupNormReportJson(const EquationSystem& S, const Window& w,
                                 const SupNormResult& r);
std::string deduceReportJson(const EquationSystem& S,
                             const std::vector<std::pair<DifferenceOperator, int>>& entries,
                             const DifferenceOperator& combinedOp,
                             const SymbolicFunction& combinedRhs);
std::string polySolveReportJson(const EquationSystem& S, int degreeBound,
                                const std::optional<SymbolicFunction>& solution);
std::string galleryReportJson(const GalleryReport& report);
std::string parseReportJson(const WorkbenchScript& script);

/// Re-verification of a previously emitted report.
///   exitCode 0: the report's claims verify against a recomputation.
///   exitCode 1: malformed report, or a claim that fails verification.
///   exitCode 2: the report's outcome is inconclusive, which is not a
///               certifiable claim.
struct CertifyResult {
    bool ok = false;
    int exitCode = 1;
    std::string detail;
};
CertifyResult certifyReport(const std::string& jsonText);

} // namespace diffsys
