#include "diffsys/system.hpp"

namespace diffsys {

namespace {

Lattice latticeOfShifts(const BasisPtr& ctx, const std::vector<Equation>& eqs) {
    std::vector<FormalReal> shifts;
    for (const auto& eq : eqs)
        for (const auto& [coeff, shift] : eq.op.terms()) shifts.push_back(shift);
    return Lattice::fromGenerators(ctx, shifts);
}

} // namespace

EquationSystem::EquationSystem(BasisPtr ctx, std::vector<Equation> eqs)
    : ctx_(std::move(ctx)), eqs_(std::move(eqs)), lattice_(latticeOfShifts(ctx_, eqs_)) {
    for (const auto& eq : eqs_) {
        requireSameContext(ctx_, eq.op.context());
        requireSameContext(ctx_, eq.rhs.context());
    }
}

EquationSystem EquationSystem::subsystem(const std::vector<size_t>& indices) const {
    std::vector<Equation> sub;
    for (size_t i : indices) sub.push_back(eqs_.at(i));
    return EquationSystem(ctx_, std::move(sub));
}

std::pair<DifferenceOperator, SymbolicFunction> deduce(
    const EquationSystem& S, const std::vector<std::pair<DifferenceOperator, int>>& entries) {
    DifferenceOperator combined = DifferenceOperator::zero(S.context());
    std::vector<std::pair<Rational, SymbolicFunction>> parts;
    for (const auto& [mult, index] : entries) {
        const Equation& eq = S.equations().at(static_cast<size_t>(index));
        combined = combined + mult.compose(eq.op);
        parts.emplace_back(Rational(1), applyOperator(mult, eq.rhs));
    }
    return {combined, SymbolicFunction::linComb(S.context(), std::move(parts))};
}

Certificate makeCertificate(const EquationSystem& S, CertificateKind kind,
                            std::vector<std::pair<DifferenceOperator, int>> entries) {
    auto [op, rhs] = deduce(S, entries);
    return Certificate{kind, std::move(entries), std::move(op), std::move(rhs)};
}

bool ConstraintSet::containsPoint(const FormalReal& x, const Lattice& shiftLattice) const {
    if (offLattice && !shiftLattice.member(x)) return true;
    for (const auto& [L, offset] : cosets)
        if (L.member(x - offset)) return true;
    return false;
}

namespace {

bool sameFunction(const SymbolicFunction& f, const SymbolicFunction& g) {
    if (f == g) return true;
    try {
        return functionsEqual(f, g).equal;
    } catch (const Error&) {
        return false;
    }
}

bool entriesValid(const EquationSystem& S, const Certificate& c) {
    for (const auto& [mult, index] : c.entries)
        if (index < 0 || static_cast<size_t>(index) >= S.size()) return false;
    return true;
}

} // namespace

bool verifyCertificate(const EquationSystem& S, const Certificate& c) {
    if (c.kind != CertificateKind::ZeroOperator) return false;
    if (!entriesValid(S, c)) return false;
    auto [op, rhs] = deduce(S, c.entries);
    if (!(op == c.combinedOperator) || !sameFunction(rhs, c.combinedRHS)) return false;
    if (!op.isZero()) return false;
    return !zeroTest(rhs);
}

bool verifyVanishingCertificate(const EquationSystem& S, const ConstraintSet& H,
                                const Certificate& c) {
    if (c.kind != CertificateKind::VanishingObstruction) return false;
    if (!entriesValid(S, c)) return false;
    auto [op, rhs] = deduce(S, c.entries);
    if (!(op == c.combinedOperator) || !sameFunction(rhs, c.combinedRHS)) return false;
    if (op.isZero()) return false;
    for (const auto& [coeff, shift] : op.terms())
        if (!H.containsPoint(shift, S.shiftLattice())) return false;
    EvalValue atZero = evaluate(rhs, FormalReal(S.context()));
    return atZero.exact && atZero.r != 0;
}

std::vector<LatticePoint> windowPoints(size_t rank, int radius) {
    if (radius < 0) throw Error("window radius must be nonnegative");
    constexpr size_t kWindowCap = 200000;
    size_t count = 1;
    size_t side = static_cast<size_t>(2 * radius + 1);
    for (size_t i = 0; i < rank; ++i) {
        count *= side;
        if (count > kWindowCap)
            throw ResourceError("window of rank " + std::to_string(rank) + ", radius " +
                                std::to_string(radius) + " exceeds the enumeration cap");
    }
    std::vector<LatticePoint> pts;
    pts.reserve(count);
    LatticePoint cur(rank, Int(-radius));
    if (rank == 0) {
        pts.push_back({});
        return pts;
    }
    while (true) {
        pts.push_back(cur);
        size_t i = rank;
        while (i > 0) {
            --i;
            if (cur[i] < radius) {
                ++cur[i];
                break;
            }
            cur[i] = -radius;
            if (i == 0) return pts;
        }
    }
}

SolveOutcome SolveOutcome::solved(SymbolicFunction f, Window w, bool windowOnlyFlag) {
    SolveOutcome o;
    o.kind = OutcomeKind::Solution;
    o.solution = std::move(f);
    o.window = w;
    o.windowOnly = windowOnlyFlag;
    return o;
}

SolveOutcome SolveOutcome::unsolvable(Certificate c) {
    SolveOutcome o;
    o.kind = OutcomeKind::Unsolvable;
    o.certificate = std::move(c);
    return o;
}

SolveOutcome SolveOutcome::inconclusive(std::string why) {
    SolveOutcome o;
    o.kind = OutcomeKind::Inconclusive;
    o.reason = std::move(why);
    return o;
}

Rational rhsValueAt(const SymbolicFunction& g, const FormalReal& x) {
    EvalValue v = evaluate(g, x);
    if (!v.exact) throw EvalError("right-hand side is not exactly rational at a window point");
    return v.r;
}

} // namespace diffsys
