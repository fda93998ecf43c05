#pragma once

#include <map>

#include "diffsys/lattice.hpp"

namespace diffsys {

/// One exact linear constraint Σ coeffs[j]·unknown_j = rhs over window
/// unknowns, tagged with the (equation, base point) that produced it so
/// infeasibility witnesses can be repackaged as certificates.
struct LinearConstraint {
    std::map<int, Rational> coeffs;
    Rational rhs;
    int equationIndex = -1;
    LatticePoint basePoint;
};

/// Outcome of exact Gauss-Jordan elimination with provenance tracking.
struct EliminationResult {
    bool feasible = false;

    /// Particular solution with every free unknown set to 0.
    std::vector<Rational> values;
    std::vector<bool> isFree;
    /// Affine solution set: unknown vector = values + Σ_k z_k · nullBasis[k].
    /// One row per free unknown, in increasing free-column order.
    std::vector<std::vector<Rational>> nullBasis;

    /// On infeasibility: multipliers over the input constraint list whose
    /// combination has zero coefficient on every unknown but nonzero rhs.
    std::map<size_t, Rational> infeasibleCombo;
};

/// Pivot order is deterministic: constraints are processed in input order and
/// each new pivot is the lowest-index unknown remaining in the row, so callers
/// control tie-breaking by how they order constraints and number unknowns.
/// Unknowns with pinned[j] = true are treated as fixed to 0 (their columns are
/// ignored; they stay 0 in the solution).
EliminationResult eliminate(const std::vector<LinearConstraint>& constraints, size_t nUnknowns,
                            const std::vector<bool>& pinned = {});

} // namespace diffsys
