#include <set>

#include "diffsys/function_detail.hpp"

namespace diffsys {

namespace {

constexpr size_t kCosetEnumCap = size_t(1) << 16;

/// f split into class parts. Off-lattice values of rule functions are folded
/// into the constant term (latfun(L, rule, c) = c + latfun(L, rule - c, 0)),
/// so rule supports are genuinely contained in their lattices afterwards.
struct Decomposition {
    std::vector<Rational> poly;
    std::map<Rational, CyclotomicNumber> trig;
    struct CosetTerm {
        Lattice L;
        FormalReal offset;
        Rational coeff;
    };
    std::vector<CosetTerm> cosets;
    std::vector<std::pair<Lattice, LatticeRule>> rules; // merged per lattice
};

void decompose(const SymbolicFunction& f, const Rational& q, Decomposition& out) {
    if (q == 0) return;
    switch (f.kind()) {
    case FuncKind::Constant:
        if (out.poly.empty()) out.poly.resize(1, Rational(0));
        out.poly[0] += q * f.constantValue();
        return;
    case FuncKind::Polynomial: {
        const auto& c = f.polyCoeffs();
        if (out.poly.size() < c.size()) out.poly.resize(c.size(), Rational(0));
        for (size_t i = 0; i < c.size(); ++i) out.poly[i] += q * c[i];
        return;
    }
    case FuncKind::TrigPoly:
        for (const auto& [freq, coeff] : f.trigTerms()) {
            auto [it, fresh] = out.trig.emplace(freq, coeff.scaled(q));
            if (!fresh) it->second = it->second + coeff.scaled(q);
        }
        return;
    case FuncKind::CosetIndicator:
        out.cosets.push_back({f.lattice(), f.cosetOffset(), q});
        return;
    case FuncKind::LatticeFunction: {
        if (f.offLatticeValue() != 0) {
            if (out.poly.empty()) out.poly.resize(1, Rational(0));
            out.poly[0] += q * f.offLatticeValue();
        }
        LatticeRule adjusted = f.rule();
        adjusted.c0 -= f.offLatticeValue();
        for (auto& [L, rule] : out.rules) {
            if (L == f.lattice()) {
                rule.addScaled(adjusted, q);
                return;
            }
        }
        LatticeRule scaledRule;
        scaledRule.addScaled(adjusted, q);
        out.rules.emplace_back(f.lattice(), std::move(scaledRule));
        return;
    }
    case FuncKind::WindowTable:
        throw RepresentabilityError(
            "window-restricted values support only pointwise checks, not a global zero test");
    case FuncKind::LinComb:
        for (const auto& [qq, sub] : f.parts()) decompose(sub, q * qq, out);
        return;
    }
    throw Error("unreachable");
}

/// Is a rational combination of coset indicators the zero function? Terms are
/// grouped by the affine span of their coset; sums over distinct affine spans
/// vanish independently (a nonzero group value covers a full coset of a
/// full-rank lattice of its span, which finitely many smaller intersections
/// cannot absorb). Within a group all lattices share a span, so they are
/// commensurable; refining to their intersection makes supports disjoint and
/// the sum zero iff every net coefficient is zero.
bool cosetCombinationIsZero(const std::vector<Decomposition::CosetTerm>& terms) {
    using Key = std::pair<std::vector<std::vector<Rational>>, std::vector<Rational>>;
    std::map<Key, std::vector<const Decomposition::CosetTerm*>> groups;
    for (const auto& t : terms) {
        if (t.coeff == 0) continue;
        groups[{t.L.spanRref(), t.L.reduceModSpan(t.offset)}].push_back(&t);
    }
    for (const auto& [key, group] : groups) {
        Lattice common = group[0]->L;
        for (size_t i = 1; i < group.size(); ++i)
            common = Lattice::intersect(common, group[i]->L);
        std::map<FormalReal, Rational, FormalRealLess> net;
        for (const auto* t : group) {
            for (const auto& rep : t->L.cosetRepresentatives(common, kCosetEnumCap))
                net[common.reduceOffset(t->offset + rep)] += t->coeff;
        }
        for (const auto& [rep, value] : net)
            if (value != 0) return false;
    }
    return true;
}

/// Indicator of sub + offset as a coordinate rule on L, when expressible in
/// the rule grammar: sub's coordinate image in L must be spanned by standard
/// unit vectors with at most one coordinate left unconstrained.
std::optional<LatticeRule> cosetAsRule(const Lattice& L, const Lattice& sub,
                                       const LatticePoint& k0) {
    size_t r = L.rank();
    IntMat cols;
    for (size_t j = 0; j < sub.rank(); ++j) {
        auto c = L.coords(sub.basisVector(j));
        if (!c) return std::nullopt;
        cols.push_back(*c);
    }
    HnfResult h = columnHnf(std::move(cols), r);
    std::set<int> covered;
    for (const auto& col : h.cols) {
        int nonzeroRow = -1;
        for (size_t i = 0; i < col.size(); ++i) {
            if (col[i] == 0) continue;
            if (nonzeroRow >= 0 || col[i] != 1) return std::nullopt;
            nonzeroRow = static_cast<int>(i);
        }
        covered.insert(nonzeroRow);
    }
    std::vector<int> missing;
    for (size_t i = 0; i < r; ++i)
        if (!covered.count(static_cast<int>(i))) missing.push_back(static_cast<int>(i));
    if (missing.empty()) return LatticeRule::constant(Rational(1));
    if (missing.size() > 1) return std::nullopt;
    int i = missing[0];
    // [k_i = w] as a difference of half-line indicators.
    LatticeRule rule;
    Int w = k0.at(static_cast<size_t>(i));
    rule.steps[{i, w - 1}] += 1;
    rule.steps[{i, w}] -= 1;
    return rule;
}

} // namespace

bool zeroTest(const SymbolicFunction& f) {
    Decomposition d;
    decompose(f, Rational(1), d);

    // The continuous part (polynomial + trig) and the countably supported part
    // (cosets, rule functions) vanish independently; within the continuous
    // part, powers and distinct positive frequencies are linearly independent.
    for (const auto& c : d.poly)
        if (c != 0) return false;
    for (const auto& [freq, coeff] : d.trig)
        if (!coeff.isZero()) return false;

    std::vector<std::pair<Lattice, LatticeRule>> rules;
    for (auto& [L, rule] : d.rules)
        if (!rule.isZero()) rules.emplace_back(L, std::move(rule));

    if (rules.empty()) return cosetCombinationIsZero(d.cosets);
    if (rules.size() > 1)
        throw RepresentabilityError(
            "zero test does not cover rule functions on two different lattices");

    const Lattice& L = rules[0].first;
    LatticeRule onLattice = rules[0].second;
    std::map<FormalReal, std::vector<Decomposition::CosetTerm>, FormalRealLess> offGroups;
    for (const auto& t : d.cosets) {
        if (t.coeff == 0) continue;
        if (!L.contains(t.L))
            throw RepresentabilityError(
                "zero test needs coset lattices inside the rule function's lattice");
        auto k0 = L.coords(t.offset);
        if (!k0) {
            // Supported in a different coset of L: independent of the rule part.
            offGroups[L.reduceOffset(t.offset)].push_back(t);
            continue;
        }
        auto converted = cosetAsRule(L, t.L, *k0);
        if (!converted)
            throw RepresentabilityError(
                "coset is not expressible in the rule grammar (needs two or more "
                "constrained coordinates)");
        onLattice.addScaled(*converted, t.coeff);
    }
    if (!onLattice.isZero()) return false;
    for (const auto& [rep, group] : offGroups)
        if (!cosetCombinationIsZero(group)) return false;
    return true;
}

namespace {

/// Exact value of f at x as a cyclotomic number when every part evaluates
/// exactly there; nullopt otherwise.
std::optional<CyclotomicNumber> tryExactValue(const SymbolicFunction& f, const FormalReal& x) {
    switch (f.kind()) {
    case FuncKind::Constant:
        return CyclotomicNumber::fromRational(f.constantValue());
    case FuncKind::Polynomial: {
        if (!x.isRational()) return std::nullopt;
        Rational t = x.rationalPart(), v(0);
        const auto& a = f.polyCoeffs();
        for (size_t i = a.size(); i-- > 0;) v = v * t + a[i];
        return CyclotomicNumber::fromRational(v);
    }
    case FuncKind::TrigPoly: {
        if (!x.isRational()) return std::nullopt;
        Rational t = x.rationalPart();
        CyclotomicNumber acc;
        for (const auto& [freq, coeff] : f.trigTerms())
            acc = acc + (coeff * CyclotomicNumber::rootOfUnity(PhaseQ(freq * t))).realPart();
        return acc;
    }
    case FuncKind::CosetIndicator:
        return CyclotomicNumber::fromRational(
            Rational(f.lattice().member(x - f.cosetOffset()) ? 1 : 0));
    case FuncKind::LatticeFunction: {
        auto k = f.lattice().coords(x);
        if (!k) return CyclotomicNumber::fromRational(f.offLatticeValue());
        return CyclotomicNumber::fromRational(f.rule().evaluate(*k));
    }
    case FuncKind::WindowTable: {
        auto k = f.lattice().coords(x);
        if (!k) return CyclotomicNumber::fromRational(f.offLatticeValue());
        auto it = f.windowValues().find(*k);
        if (it == f.windowValues().end()) return std::nullopt;
        return CyclotomicNumber::fromRational(it->second);
    }
    case FuncKind::LinComb: {
        CyclotomicNumber acc;
        for (const auto& [q, sub] : f.parts()) {
            auto v = tryExactValue(sub, x);
            if (!v) return std::nullopt;
            acc = acc + v->scaled(q);
        }
        return acc;
    }
    }
    return std::nullopt;
}

void pushCandidate(std::vector<FormalReal>& cands, const FormalReal& x) {
    for (const auto& c : cands)
        if (c == x) return;
    cands.push_back(x);
}

void collectCandidates(const SymbolicFunction& f, std::vector<FormalReal>& cands) {
    const auto& ctx = f.context();
    switch (f.kind()) {
    case FuncKind::Polynomial:
        for (size_t i = 0; i < f.polyCoeffs().size(); ++i)
            pushCandidate(cands, FormalReal::rational(ctx, Rational(i)));
        return;
    case FuncKind::CosetIndicator: {
        pushCandidate(cands, f.cosetOffset());
        for (size_t j = 0; j < f.lattice().rank(); ++j) {
            FormalReal b = f.lattice().basisVector(j);
            pushCandidate(cands, f.cosetOffset() + b);
            pushCandidate(cands, f.cosetOffset() - b);
        }
        return;
    }
    case FuncKind::LatticeFunction:
    case FuncKind::WindowTable: {
        const Lattice& L = f.lattice();
        pushCandidate(cands, FormalReal(ctx));
        for (size_t j = 0; j < L.rank(); ++j) {
            FormalReal b = L.basisVector(j);
            pushCandidate(cands, b);
            pushCandidate(cands, -b);
            pushCandidate(cands, b + b);
            pushCandidate(cands, -(b + b));
        }
        if (f.kind() == FuncKind::WindowTable)
            for (const auto& [pt, v] : f.windowValues()) pushCandidate(cands, L.toAmbient(pt));
        return;
    }
    case FuncKind::LinComb:
        for (const auto& [q, sub] : f.parts()) collectCandidates(sub, cands);
        return;
    default:
        return;
    }
}

} // namespace

std::optional<FormalReal> findNonzeroPoint(const SymbolicFunction& f) {
    const auto& ctx = f.context();
    std::vector<FormalReal> cands;
    pushCandidate(cands, FormalReal(ctx));
    collectCandidates(f, cands);
    for (int k = 1; k <= 3; ++k) {
        pushCandidate(cands, FormalReal::rational(ctx, Rational(k)));
        pushCandidate(cands, FormalReal::rational(ctx, Rational(-k)));
        pushCandidate(cands, FormalReal::rational(ctx, Rational(1, k + 1)));
    }

    // Dense enough rational grid to pin down a nonzero trig part: with
    // frequencies n_j/q the function is a trig polynomial of degree
    // d = max n_j in x/q, so it has at most 2d roots per period q.
    Decomposition d;
    bool decomposable = true;
    try {
        decompose(f, Rational(1), d);
    } catch (const RepresentabilityError&) {
        decomposable = false;
    }
    if (decomposable && !d.trig.empty()) {
        Int den = 1, degree = 1;
        for (const auto& [freq, coeff] : d.trig) den = intLcm(den, denominator(freq));
        for (const auto& [freq, coeff] : d.trig) {
            Int n = intAbs(numerator(freq) * (den / denominator(freq)));
            if (n > degree) degree = n;
        }
        Int samples = 2 * degree + 1;
        for (Int k = 0; k < samples; ++k)
            pushCandidate(cands, FormalReal::rational(ctx, Rational(k * den, samples)));
    }

    for (const auto& x : cands) {
        auto v = tryExactValue(f, x);
        if (v && !v->isZero()) return x;
    }
    return std::nullopt;
}

} // namespace diffsys
