#pragma once

#include "diffsys/function.hpp"

namespace diffsys {

/// One difference equation D f = g.
struct Equation {
    DifferenceOperator op;
    SymbolicFunction rhs;
};

/// Finite system of difference equations together with the lattice generated
/// by every shift appearing in the operators. Right-hand sides may reference
/// directions outside the shift lattice; only operator shifts generate it.
class EquationSystem {
public:
    EquationSystem(BasisPtr ctx, std::vector<Equation> eqs);

    const BasisPtr& context() const { return ctx_; }
    const std::vector<Equation>& equations() const { return eqs_; }
    size_t size() const { return eqs_.size(); }
    const Lattice& shiftLattice() const { return lattice_; }

    EquationSystem subsystem(const std::vector<size_t>& indices) const;

private:
    BasisPtr ctx_;
    std::vector<Equation> eqs_;
    Lattice lattice_;
};

/// Deduction of a new pair from the system: (Σ Aᵢ D_idx(i), Σ Aᵢ g_idx(i)).
std::pair<DifferenceOperator, SymbolicFunction> deduce(
    const EquationSystem& S, const std::vector<std::pair<DifferenceOperator, int>>& entries);

enum class CertificateKind {
    /// Combined operator is zero while the combined right-hand side is not
    /// the zero function: no f can satisfy the system anywhere.
    ZeroOperator,
    /// Combined operator's shifts all lie in the constrained point set and
    /// the combined right-hand side is nonzero at 0: no solution vanishing on
    /// that set exists.
    VanishingObstruction,
};

/// Machine-checkable deduction witness. The combined pair is stored for
/// readability but is always recomputable from the entries, and verification
/// recomputes it.
struct Certificate {
    CertificateKind kind = CertificateKind::ZeroOperator;
    std::vector<std::pair<DifferenceOperator, int>> entries;
    DifferenceOperator combinedOperator;
    SymbolicFunction combinedRHS;
};

Certificate makeCertificate(const EquationSystem& S, CertificateKind kind,
                            std::vector<std::pair<DifferenceOperator, int>> entries);

/// Point set on which solutions are required to vanish: every point off the
/// shift lattice, and/or every point of the listed cosets.
struct ConstraintSet {
    bool offLattice = false;
    std::vector<std::pair<Lattice, FormalReal>> cosets;

    bool containsPoint(const FormalReal& x, const Lattice& shiftLattice) const;
    bool empty() const { return !offLattice && cosets.empty(); }
};

/// True iff the certificate verifies against S: the stored combined pair
/// matches a recomputation from the entries, the combined operator is zero,
/// and the combined right-hand side is not the zero function.
bool verifyCertificate(const EquationSystem& S, const Certificate& c);

/// Verification for vanishing-constrained solves: the recomputed combined
/// operator must be nonzero with every shift inside H, and the combined
/// right-hand side must be nonzero at 0.
bool verifyVanishingCertificate(const EquationSystem& S, const ConstraintSet& H,
                                const Certificate& c);

/// Finite symmetric box of lattice coordinates, the desk-scale restriction
/// on which window solvers operate.
struct Window {
    int radius = 4;
};

/// All coordinate vectors of the given rank with entries in [-radius, radius],
/// in deterministic lexicographic order. Throws ResourceError when the box
/// exceeds the enumeration cap.
std::vector<LatticePoint> windowPoints(size_t rank, int radius);

enum class OutcomeKind { Solution, Unsolvable, Inconclusive };

/// Result of a solve: exactly one of a window-verified solution, an
/// unsolvability certificate, or an explicit inconclusive with its reason.
struct SolveOutcome {
    OutcomeKind kind = OutcomeKind::Inconclusive;
    SymbolicFunction solution; // valid() only for Solution
    Window window;
    /// True when correctness is claimed only at window points (some RHS does
    /// not vanish off the shift lattice, so the 0-off-lattice extension is
    /// not checked globally).
    bool windowOnly = false;
    std::optional<Certificate> certificate; // present only for Unsolvable
    std::string reason;                     // present only for Inconclusive

    static SolveOutcome solved(SymbolicFunction f, Window w, bool windowOnlyFlag);
    static SolveOutcome unsolvable(Certificate c);
    static SolveOutcome inconclusive(std::string why);
};

/// Exact rational value of g at x; throws EvalError if the value is not
/// exactly rational there.
Rational rhsValueAt(const SymbolicFunction& g, const FormalReal& x);

} // namespace diffsys
