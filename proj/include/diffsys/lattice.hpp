#pragma once

#include <optional>
#include <vector>

#include "diffsys/basis.hpp"

namespace diffsys {

using IntVec = std::vector<Int>;
/// Column-major integer matrix: mat[j] is column j.
using IntMat = std::vector<IntVec>;

struct HnfResult {
    IntMat cols;                // echelon columns, pivots positive, rank = cols.size()
    std::vector<int> pivotRows; // strictly increasing, one per column
};

/// Column-style Hermite normal form. Column j has its topmost nonzero entry at
/// pivotRows[j] (positive); in each pivot row every other column's entry lies
/// in [0, pivot). Zero columns are dropped.
HnfResult columnHnf(IntMat cols, size_t rows);

/// Basis of {v : M v = 0} over the integers (columns of the result, each of
/// length cols.size()). Exact: every integer kernel vector is an integer
/// combination of the returned columns.
IntMat integerKernel(const IntMat& cols, size_t rows);

/// Coordinates of integer lattice points.
using LatticePoint = std::vector<Int>;

/// Finitely generated subgroup of the span of a basis context, stored as
/// denominator scale d plus a column-HNF integer basis of d*L. The scale is
/// minimal, so equal subgroups have identical representations.
class Lattice {
public:
    static Lattice fromGenerators(BasisPtr ctx, const std::vector<FormalReal>& gens);
    static Lattice trivial(BasisPtr ctx); // {0}

    const BasisPtr& context() const { return ctx_; }
    size_t rank() const { return basis_.size(); }
    size_t ambientDim() const { return m_; }
    const Int& denominatorScale() const { return d_; }
    const IntMat& basisMatrix() const { return basis_; }
    const std::vector<int>& pivotRows() const { return pivotRows_; }

    bool member(const FormalReal& x) const;
    /// Integer coordinates of x in the canonical basis; nullopt if not a member.
    std::optional<LatticePoint> coords(const FormalReal& x) const;
    /// Inverse of coords: sum of pt[j] * basisVector(j).
    FormalReal toAmbient(const LatticePoint& pt) const;
    FormalReal basisVector(size_t j) const;

    /// Canonical representative of x + L (pivot-row coordinates of d*x reduced
    /// into [0, pivot)). reduceOffset(x) == reduceOffset(y) iff x - y is a member.
    FormalReal reduceOffset(const FormalReal& x) const;

    bool operator==(const Lattice& o) const;
    bool operator!=(const Lattice& o) const { return !(*this == o); }
    /// Deterministic total order on lattices in one context.
    static int compare(const Lattice& a, const Lattice& b);

    bool contains(const Lattice& other) const;
    static Lattice intersect(const Lattice& a, const Lattice& b);
    static Lattice sum(const Lattice& a, const Lattice& b);

    /// Rational row-reduced echelon basis of the linear span; canonical, so two
    /// lattices span the same subspace iff these are equal.
    const std::vector<std::vector<Rational>>& spanRref() const;
    bool sameSpan(const Lattice& o) const;
    /// Component of x orthogonal to the span in the RREF elimination sense:
    /// canonical representative of x modulo the span.
    std::vector<Rational> reduceModSpan(const FormalReal& x) const;

    /// Representatives of this/sub for a full-rank sublattice sub (same span).
    /// Throws LatticeError if sub is not a sublattice or ranks differ,
    /// ResourceError if the index exceeds cap.
    std::vector<FormalReal> cosetRepresentatives(const Lattice& sub, size_t cap) const;

private:
    BasisPtr ctx_;
    size_t m_ = 1;
    Int d_ = 1;
    IntMat basis_;
    std::vector<int> pivotRows_;
    mutable std::optional<std::vector<std::vector<Rational>>> spanCache_;
};

} // namespace diffsys
