#pragma once

#include "diffsys/system.hpp"

namespace diffsys {

/// Parsed workbench script: a basis declaration, named shift and function
/// bindings, the accumulated equation system, and the command directives to
/// run against it. Name references are resolved at parse time, so the script
/// stores canonical values and rendering is reference-free.
struct WorkbenchScript {
    BasisPtr ctx;
    std::vector<std::pair<std::string, FormalReal>> shiftBindings;
    std::vector<std::pair<std::string, SymbolicFunction>> functionBindings;
    std::vector<Equation> equations;

    struct DeduceEntry {
        DifferenceOperator multiplier;
        int equation = 0; // 1-based equation index
    };
    struct Directive {
        enum class Kind { Solve, MinSupnorm, PolySolve, Deduce, Gallery };
        Kind kind = Kind::Solve;
        std::vector<DeduceEntry> entries;                          // Deduce
        std::string galleryName;                                   // Gallery
        std::vector<std::pair<std::string, std::string>> galleryParams; // Gallery
    };
    std::vector<Directive> directives;

    EquationSystem system() const { return EquationSystem(ctx, equations); }
};

/// LL(1) recursive descent over the statement grammar
///   basis NAME...;  shift NAME = <shift>;  let NAME = <function>;
///   eq <operator> f = <function>;  solve;  min-supnorm;  poly-solve;
///   deduce <operator>:<eq>, ...;  gallery <name> [key=value ...];
/// with '#' line comments. Throws ParseError with a 1-based location and the
/// expected tokens on syntax or name-resolution failure.
WorkbenchScript parseScript(const std::string& text);

/// Canonical text form; parseScript(renderScript(s)) is structurally
/// identical to s.
std::string renderScript(const WorkbenchScript& s);

/// Structural equality used by the round-trip property.
bool scriptsEquivalent(const WorkbenchScript& a, const WorkbenchScript& b);

/// Standalone expression parsers over a fixed basis context (only basis
/// symbol names resolve). These accept exactly the render() forms of the
/// corresponding types.
FormalReal parseShiftText(const BasisPtr& ctx, const std::string& text);
DifferenceOperator parseOperatorText(const BasisPtr& ctx, const std::string& text);
SymbolicFunction parseFunctionText(const BasisPtr& ctx, const std::string& text);

} // namespace diffsys
