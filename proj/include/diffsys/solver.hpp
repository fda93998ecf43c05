#pragma once

#include "diffsys/system.hpp"

#include <optional>

namespace diffsys {

/// Window solver for systems in which every operator is a two-term difference
/// Δ_b. Builds the translation graph of the shift lattice restricted to the
/// window, integrates the right-hand sides along a spanning tree, and checks
/// every fundamental cycle: a nonzero cycle sum is returned as an
/// unsolvability certificate, otherwise the integrated values (fitted to a
/// lattice rule when possible, a window table when not) form the solution.
/// Requires exactly evaluable right-hand sides at window points.
SolveOutcome solveDeltaSystem(const EquationSystem& S, const Window& w = {});

/// Generating set of zero-operator deductions: converts each operator to a
/// Laurent polynomial over the shift lattice, computes generators of the
/// syzygy module, and packages each generator as a Certificate whose combined
/// operator is zero. Throws ResourceError when the computation exceeds its
/// budget; callers usually surface that as an Inconclusive outcome.
std::vector<Certificate> syzygyCertificates(const EquationSystem& S);

/// General finite solver: all-Δ systems go through solveDeltaSystem;
/// otherwise every syzygy generator's combined right-hand side is zero-tested
/// (a failure is a certified unsolvability) and a concrete window solution is
/// produced by exact linear elimination with free values set to 0.
SolveOutcome solveFinite(const EquationSystem& S, const Window& w = {});

/// The brute-force window path on its own: one unknown per window point, one
/// exact linear constraint per in-window (equation, point) pair, free values
/// 0. No syzygy screen and no graph integration, which makes it the
/// independent oracle for solveDeltaSystem on small systems.
SolveOutcome solveByWindowElimination(const EquationSystem& S, const Window& w);

/// Exact pointwise re-verification of a claimed solution: every equation
/// holds at every window point whose operator stencil stays inside the
/// window. This is the check a Solution outcome's window descriptor refers
/// to.
bool verifySolutionOnWindow(const EquationSystem& S, const SymbolicFunction& f, const Window& w);

/// Exact minimum of max |f(p)| over window assignments satisfying every
/// in-window equation constraint. The value is a lower bound for the sup-norm
/// of any global solution. Infeasible window constraints yield a certificate
/// instead.
struct SupNormResult {
    bool feasible = true;
    Rational value;
    std::map<LatticePoint, Rational> witness; // window point -> optimal value
    std::optional<Certificate> certificate;   // present when infeasible
};
SupNormResult minSupNormOnWindow(const EquationSystem& S, const Window& w);

/// Polynomial-ansatz solver for systems whose right-hand sides are all
/// polynomial and whose shifts are all rational. Matches coefficients of
/// f = Σ c_d x^d up to the bound (default: max RHS degree + equation count
/// + 2, since each two-term difference drops the degree by exactly one) and
/// returns a solution, or nothing when no polynomial of that degree works.
std::optional<SymbolicFunction> solvePolynomial(const EquationSystem& S, int degreeBound = -1);

/// Window solve with f pinned to 0 on the constrained point set. An
/// infeasible combination uses only equation rows, so its combined operator
/// is supported entirely on constrained points: a VanishingObstruction
/// certificate (nonzero operator, nonzero combined RHS at 0) or, when even
/// those coefficients cancel, a plain ZeroOperator certificate.
SolveOutcome solveVanishingOn(const EquationSystem& S, const ConstraintSet& H, const Window& w);

/// Exact decision of |a1|^(1/b1) = |a2|^(1/b2) by cross-powering with the
/// common denominator of the exponents.
enum class BaseVerdict { Equal, Distinct };
BaseVerdict twoTermBaseCompare(const Rational& a1, const Rational& b1, const Rational& a2,
                               const Rational& b2);

/// Normal form of a two-term equation f(x+b) - a f(x) = g under the scaling
/// substitution f(x) = c^x f~(x) with c = |a|^(1/b): a Δ_b equation for
/// a > 0, the anti-periodic form f~(x+b) + f~(x) = g~ for a < 0. The
/// transformed right-hand side g~(x) = g(x)/c^(x+b) stays exact only when
/// |a| = 1; otherwise it is available numerically via scaledRhsAt.
struct TwoTermNormalForm {
    enum class Kind { Delta, AntiPeriodic };
    Kind kind = Kind::Delta;
    Rational baseAbs; // |a|
    Rational shift;   // b
    bool exactRhs = false;
    SymbolicFunction rhs; // untransformed right-hand side g
};
TwoTermNormalForm normalizeTwoTerm(const Rational& a, const Rational& b,
                                   const SymbolicFunction& g);
double scaledRhsAt(const TwoTermNormalForm& form, double x);

} // namespace diffsys
