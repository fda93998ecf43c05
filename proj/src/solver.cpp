#include "diffsys/solver.hpp"

#include "diffsys/elimination.hpp"
#include "diffsys/error.hpp"
#include "diffsys/groebner.hpp"
#include "diffsys/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace diffsys {

namespace {

/// Window points in lexicographic order plus O(1) neighbor lookup: the box
/// enumeration is row-major, so index(p) = Σ (pᵢ+r)·strideᵢ and a translation
/// by d lands at index + Σ dᵢ·strideᵢ whenever it stays inside the box.
struct WindowIndex {
    std::vector<LatticePoint> points;
    size_t rank = 0;
    int radius = 0;
    std::vector<int> coord;        // flattened [u * rank + i]
    std::vector<long long> stride; // stride[i] = (2r+1)^(rank-1-i)

    long long offsetOf(const std::vector<int>& d) const {
        long long off = 0;
        for (size_t i = 0; i < rank; ++i) off += stride[i] * d[i];
        return off;
    }
    /// Index of points[u] + d, or nullopt when the sum leaves the box.
    std::optional<size_t> neighbor(size_t u, const std::vector<int>& d,
                                   long long dOffset) const {
        for (size_t i = 0; i < rank; ++i) {
            int c = coord[u * rank + i] + d[i];
            if (c > radius || c < -radius) return std::nullopt;
        }
        return static_cast<size_t>(static_cast<long long>(u) + dOffset);
    }
};

std::vector<int> smallCoords(const LatticePoint& p) {
    std::vector<int> d(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] > std::numeric_limits<int>::max() || p[i] < std::numeric_limits<int>::min())
            throw ResourceError("window displacement exceeds the machine range");
        d[i] = static_cast<int>(p[i].convert_to<long>());
    }
    return d;
}

WindowIndex buildWindow(size_t rank, int radius) {
    WindowIndex w;
    w.points = windowPoints(rank, radius);
    w.rank = rank;
    w.radius = radius;
    w.stride.assign(rank, 1);
    for (size_t i = rank; i-- > 1;) w.stride[i - 1] = w.stride[i] * (2 * radius + 1);
    w.coord.resize(w.points.size() * rank);
    for (size_t u = 0; u < w.points.size(); ++u)
        for (size_t i = 0; i < rank; ++i)
            w.coord[u * rank + i] = static_cast<int>(w.points[u][i].convert_to<long>());
    return w;
}

/// Per-equation right-hand-side evaluator over window points with a fast path
/// for constant functions, which dominate large solves.
struct RhsAt {
    const Lattice& L;
    const WindowIndex& win;
    std::optional<Rational> constant;
    const SymbolicFunction* g = nullptr;

    RhsAt(const Lattice& lat, const WindowIndex& w, const SymbolicFunction& rhs)
        : L(lat), win(w), g(&rhs) {
        if (rhs.kind() == FuncKind::Constant) constant = rhs.constantValue();
    }
    Rational at(size_t u) const {
        if (constant) return *constant;
        return rhsValueAt(*g, L.toAmbient(win.points[u]));
    }
};

bool inBox(const LatticePoint& p, int radius) {
    for (const auto& c : p)
        if (c > radius || c < -radius) return false;
    return true;
}

LatticePoint addPoint(const LatticePoint& p, const LatticePoint& d) {
    LatticePoint q = p;
    for (size_t i = 0; i < q.size(); ++i) q[i] += d[i];
    return q;
}

/// Fit window values to a lattice rule c0 + Σ cᵢkᵢ + Σ d_{i,c}[kᵢ > c] with
/// thresholds inside [-radius, radius). The fit reproduces every window value
/// exactly or fails; beyond the window the rule is an extrapolation, which is
/// why solver results carry a window descriptor.
std::optional<LatticeRule> fitRule(const WindowIndex& win, size_t rank, int radius,
                                   const std::vector<Rational>& vals) {
    size_t stepsPer = static_cast<size_t>(2 * radius);
    size_t nUnknowns = 1 + rank + rank * stepsPer;
    auto stepCol = [&](size_t coord, long long thr) {
        return 1 + rank + coord * stepsPer + static_cast<size_t>(thr + radius);
    };
    // The grammar has no cross terms, so a rule that matches the origin and
    // the coordinate axes matches everywhere a rule can: two rules agreeing
    // there differ by one vanishing on the axes, which forces every per-axis
    // part constant and then zero. Fit on those points, verify on the box.
    auto rowFor = [&](const LatticePoint& p, size_t idx) {
        LinearConstraint c;
        c.coeffs[0] = 1;
        for (size_t i = 0; i < rank; ++i) {
            if (p[i] != 0) c.coeffs[static_cast<int>(1 + i)] = Rational(p[i]);
            for (long long thr = -radius; thr < static_cast<long long>(p[i]); ++thr)
                c.coeffs[static_cast<int>(stepCol(i, thr))] = 1;
        }
        c.rhs = vals[idx];
        c.equationIndex = idx;
        return c;
    };
    std::vector<LinearConstraint> cs;
    cs.reserve(1 + rank * static_cast<size_t>(2 * radius));
    for (size_t j = 0; j < win.points.size(); ++j) {
        const auto& p = win.points[j];
        size_t nonzero = 0;
        for (size_t i = 0; i < rank; ++i)
            if (p[i] != 0) ++nonzero;
        if (nonzero <= 1) cs.push_back(rowFor(p, j));
    }
    auto res = eliminate(cs, nUnknowns);
    if (!res.feasible) return std::nullopt;
    LatticeRule rule;
    rule.c0 = res.values[0];
    for (size_t i = 0; i < rank; ++i)
        if (res.values[1 + i] != 0) rule.linear[static_cast<int>(i)] = res.values[1 + i];
    for (size_t i = 0; i < rank; ++i)
        for (long long thr = -radius; thr < radius; ++thr) {
            const Rational& d = res.values[stepCol(i, thr)];
            if (d != 0) rule.steps[{static_cast<int>(i), Int(thr)}] = d;
        }
    for (size_t j = 0; j < win.points.size(); ++j)
        if (rule.evaluate(win.points[j]) != vals[j]) return std::nullopt;
    return rule;
}

/// True when g is provably 0 at every point off the shift lattice, so the
/// 0-extension of a lattice solution stays a solution there. Conservative:
/// pieces it cannot localize to the lattice report false.
bool vanishesOffLattice(const SymbolicFunction& g, const Lattice& L) {
    switch (g.kind()) {
        case FuncKind::Constant:
            return g.constantValue() == 0;
        case FuncKind::Polynomial:
        case FuncKind::TrigPoly:
            return false;
        case FuncKind::CosetIndicator:
            return L.contains(g.lattice()) && L.member(g.cosetOffset());
        case FuncKind::LatticeFunction:
        case FuncKind::WindowTable:
            return g.offLatticeValue() == 0 && L.contains(g.lattice());
        case FuncKind::LinComb:
            for (const auto& [q, part] : g.parts())
                if (!vanishesOffLattice(part, L)) return false;
            return true;
    }
    return false;
}

bool systemVanishesOffLattice(const EquationSystem& S) {
    for (const auto& eq : S.equations())
        if (!vanishesOffLattice(eq.rhs, S.shiftLattice())) return false;
    return true;
}

/// Package integrated/eliminated window values as a symbolic solution:
/// a lattice-rule function when the values fit the rule grammar, an explicit
/// window table otherwise. 0 off the lattice either way.
SymbolicFunction packageSolution(const EquationSystem& S, const WindowIndex& win, int radius,
                                 const std::vector<Rational>& vals) {
    const Lattice& L = S.shiftLattice();
    if (auto rule = fitRule(win, L.rank(), radius, vals))
        return SymbolicFunction::latticeFunction(L, *rule, Rational(0));
    std::map<LatticePoint, Rational> table;
    for (size_t j = 0; j < win.points.size(); ++j) table.emplace(win.points[j], vals[j]);
    return SymbolicFunction::windowTable(L, radius, std::move(table), Rational(0));
}

struct WindowLinearization {
    WindowIndex win;
    std::vector<LinearConstraint> constraints; // (point lex, equation) order
};

/// One linear constraint per (window point, equation) pair whose operator
/// stencil stays inside the window; unknowns are f at window points.
WindowLinearization linearize(const EquationSystem& S, const Window& w) {
    const Lattice& L = S.shiftLattice();
    WindowLinearization lin;
    lin.win = buildWindow(L.rank(), w.radius);

    struct StencilTerm {
        Rational a;
        std::vector<int> d;
        long long dOffset;
    };
    std::vector<std::vector<StencilTerm>> stencils(S.size());
    std::vector<RhsAt> rhs;
    for (size_t i = 0; i < S.size(); ++i) {
        for (const auto& [a, b] : S.equations()[i].op.terms()) {
            auto c = L.coords(b);
            if (!c) throw LatticeError("operator shift escapes the shift lattice");
            std::vector<int> d = smallCoords(*c);
            long long off = lin.win.offsetOf(d);
            stencils[i].push_back({a, std::move(d), off});
        }
        rhs.emplace_back(L, lin.win, S.equations()[i].rhs);
    }

    for (size_t j = 0; j < lin.win.points.size(); ++j) {
        for (size_t i = 0; i < S.size(); ++i) {
            LinearConstraint c;
            bool inside = true;
            for (const auto& t : stencils[i]) {
                auto q = lin.win.neighbor(j, t.d, t.dOffset);
                if (!q) {
                    inside = false;
                    break;
                }
                auto& slot = c.coeffs[static_cast<int>(*q)];
                slot += t.a;
                if (slot == 0) c.coeffs.erase(static_cast<int>(*q));
            }
            if (!inside) continue;
            c.rhs = rhs[i].at(j);
            c.equationIndex = i;
            c.basePoint = lin.win.points[j];
            lin.constraints.push_back(std::move(c));
        }
    }
    return lin;
}

/// Repackage an infeasible elimination combination Σ λ_c (equation at point)
/// as a certificate with multipliers Σ λ T_p per equation. The kind follows
/// from the recomputed combined operator: zero combination or an operator
/// supported on pinned points only.
Certificate comboCertificate(const EquationSystem& S,
                             const std::vector<LinearConstraint>& constraints,
                             std::map<size_t, Rational> combo) {
    const Lattice& L = S.shiftLattice();
    // Normalize so the combined right-hand side is positive at 0.
    Rational at0(0);
    for (const auto& [ci, lambda] : combo) at0 += lambda * constraints[ci].rhs;
    if (at0 < 0)
        for (auto& [ci, lambda] : combo) lambda = -lambda;
    std::map<size_t, DifferenceOperator> mult;
    for (const auto& [ci, lambda] : combo) {
        const LinearConstraint& c = constraints[ci];
        auto t = DifferenceOperator::translation(L.toAmbient(c.basePoint)).scaled(lambda);
        auto [it, fresh] = mult.emplace(c.equationIndex, t);
        if (!fresh) it->second = it->second + t;
    }
    std::vector<std::pair<DifferenceOperator, int>> entries;
    DifferenceOperator combined = DifferenceOperator::zero(S.context());
    for (const auto& [i, A] : mult) {
        if (A.isZero()) continue;
        combined = combined + A.compose(S.equations()[i].op);
        entries.emplace_back(A, static_cast<int>(i));
    }
    CertificateKind kind =
        combined.isZero() ? CertificateKind::ZeroOperator : CertificateKind::VanishingObstruction;
    return makeCertificate(S, kind, std::move(entries));
}

} // namespace

SolveOutcome solveDeltaSystem(const EquationSystem& S, const Window& w) {
    const Lattice& L = S.shiftLattice();
    size_t rank = L.rank();

    std::vector<LatticePoint> dirs;
    for (const auto& eq : S.equations()) {
        FormalReal b;
        if (!eq.op.isDelta(&b))
            throw Error("delta solver requires every operator to be a two-term difference");
        auto c = L.coords(b);
        if (!c) throw LatticeError("operator shift escapes the shift lattice");
        dirs.push_back(*c);
    }

    WindowIndex win = buildWindow(rank, w.radius);
    size_t n = win.points.size();

    std::vector<std::vector<int>> dirInts;
    std::vector<long long> dirOffsets;
    std::vector<RhsAt> rhs;
    for (size_t i = 0; i < S.size(); ++i) {
        dirInts.push_back(smallCoords(dirs[i]));
        dirOffsets.push_back(win.offsetOf(dirInts.back()));
        rhs.emplace_back(L, win, S.equations()[i].rhs);
    }

    struct Edge {
        size_t u, v, eq;
        Rational weight;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<std::pair<size_t, int>>> adj(n); // (edge, +1 fwd / -1 bwd)
    for (size_t u = 0; u < n; ++u)
        for (size_t i = 0; i < S.size(); ++i) {
            auto v = win.neighbor(u, dirInts[i], dirOffsets[i]);
            if (!v) continue;
            adj[u].emplace_back(edges.size(), +1);
            adj[*v].emplace_back(edges.size(), -1);
            edges.push_back({u, *v, i, rhs[i].at(u)});
        }

    std::vector<Rational> val(n, Rational(0));
    std::vector<char> seen(n, 0);
    std::vector<int> parentEdge(n, -1), parentDir(n, 0);
    std::vector<char> isTree(edges.size(), 0);
    for (size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        std::deque<size_t> queue{root};
        while (!queue.empty()) {
            size_t u = queue.front();
            queue.pop_front();
            for (const auto& [ei, dir] : adj[u]) {
                size_t v = dir > 0 ? edges[ei].v : edges[ei].u;
                if (seen[v]) continue;
                seen[v] = 1;
                val[v] = val[u] + (dir > 0 ? edges[ei].weight : -edges[ei].weight);
                parentEdge[v] = static_cast<int>(ei);
                parentDir[v] = dir;
                isTree[ei] = 1;
                queue.push_back(v);
            }
        }
    }

    // Fundamental-cycle check; a defect telescopes into a zero-operator
    // deduction with a nonzero combined right-hand side.
    for (size_t ei = 0; ei < edges.size(); ++ei) {
        if (isTree[ei]) continue;
        const Edge& e = edges[ei];
        Rational defect = val[e.u] + e.weight - val[e.v];
        if (defect == 0) continue;
        Rational flip = defect < 0 ? Rational(-1) : Rational(1);

        std::map<size_t, DifferenceOperator> mult;
        auto addStep = [&](size_t edgeIdx, const Rational& sign) {
            const Edge& s = edges[edgeIdx];
            auto t = DifferenceOperator::translation(L.toAmbient(win.points[s.u])).scaled(sign);
            auto [it, fresh] = mult.emplace(s.eq, t);
            if (!fresh) it->second = it->second + t;
        };
        addStep(ei, flip);
        // Tree paths contribute +: root -> u, -: root -> v; shared tail edges
        // cancel inside the per-equation operator sums.
        for (size_t x = e.u; parentEdge[x] >= 0;) {
            size_t pe = static_cast<size_t>(parentEdge[x]);
            addStep(pe, flip * parentDir[x]);
            x = parentDir[x] > 0 ? edges[pe].u : edges[pe].v;
        }
        for (size_t x = e.v; parentEdge[x] >= 0;) {
            size_t pe = static_cast<size_t>(parentEdge[x]);
            addStep(pe, -flip * parentDir[x]);
            x = parentDir[x] > 0 ? edges[pe].u : edges[pe].v;
        }
        std::vector<std::pair<DifferenceOperator, int>> entries;
        for (const auto& [i, A] : mult)
            if (!A.isZero()) entries.emplace_back(A, static_cast<int>(i));
        return SolveOutcome::unsolvable(
            makeCertificate(S, CertificateKind::ZeroOperator, std::move(entries)));
    }

    SymbolicFunction f = packageSolution(S, win, w.radius, val);
    return SolveOutcome::solved(std::move(f), w, !systemVanishesOffLattice(S));
}

std::vector<Certificate> syzygyCertificates(const EquationSystem& S) {
    const Lattice& L = S.shiftLattice();
    std::vector<LaurentPoly> ps;
    ps.reserve(S.size());
    for (const auto& eq : S.equations()) ps.push_back(toLaurent(eq.op, L));
    auto gens = laurentSyzygies(ps, SyzygyBudget{});
    std::vector<Certificate> out;
    out.reserve(gens.size());
    for (const auto& gen : gens) {
        std::vector<std::pair<DifferenceOperator, int>> entries;
        for (size_t i = 0; i < gen.size(); ++i)
            if (!gen[i].isZero()) entries.emplace_back(laurentToOperator(gen[i], L), i);
        out.push_back(makeCertificate(S, CertificateKind::ZeroOperator, std::move(entries)));
    }
    return out;
}

SolveOutcome solveFinite(const EquationSystem& S, const Window& w) {
    bool allDelta = !S.equations().empty();
    for (const auto& eq : S.equations())
        if (!eq.op.isDelta()) {
            allDelta = false;
            break;
        }
    if (allDelta) return solveDeltaSystem(S, w);

    std::vector<Certificate> gens;
    try {
        gens = syzygyCertificates(S);
    } catch (const ResourceError& e) {
        return SolveOutcome::inconclusive(std::string("syzygy budget exceeded: ") + e.what());
    } catch (const RepresentabilityError& e) {
        return SolveOutcome::inconclusive(std::string("deduced right-hand side not representable: ") +
                                          e.what());
    }
    for (const auto& cert : gens) {
        bool zero;
        try {
            zero = zeroTest(cert.combinedRHS);
        } catch (const RepresentabilityError& e) {
            return SolveOutcome::inconclusive(
                std::string("zero test undecidable for a deduced right-hand side: ") + e.what());
        }
        if (!zero) return SolveOutcome::unsolvable(cert);
    }

    return solveByWindowElimination(S, w);
}

SolveOutcome solveByWindowElimination(const EquationSystem& S, const Window& w) {
    WindowLinearization lin = linearize(S, w);
    EliminationResult res = eliminate(lin.constraints, lin.win.points.size());
    if (!res.feasible)
        return SolveOutcome::unsolvable(comboCertificate(S, lin.constraints, res.infeasibleCombo));
    SymbolicFunction f = packageSolution(S, lin.win, w.radius, res.values);
    return SolveOutcome::solved(std::move(f), w, !systemVanishesOffLattice(S));
}

bool verifySolutionOnWindow(const EquationSystem& S, const SymbolicFunction& f, const Window& w) {
    const Lattice& L = S.shiftLattice();
    WindowIndex win = buildWindow(L.rank(), w.radius);
    for (const auto& p : win.points) {
        FormalReal x = L.toAmbient(p);
        for (const auto& eq : S.equations()) {
            bool inside = true;
            for (const auto& [a, b] : eq.op.terms()) {
                auto c = L.coords(b);
                if (!c || !inBox(addPoint(p, *c), w.radius)) {
                    inside = false;
                    break;
                }
            }
            if (!inside) continue;
            Rational lhs(0);
            for (const auto& [a, b] : eq.op.terms()) {
                EvalValue v = evaluate(f, x + b);
                if (!v.exact) return false;
                lhs += a * v.r;
            }
            if (lhs != rhsValueAt(eq.rhs, x)) return false;
        }
    }
    return true;
}

SupNormResult minSupNormOnWindow(const EquationSystem& S, const Window& w) {
    WindowLinearization lin = linearize(S, w);
    size_t n = lin.win.points.size();
    EliminationResult el = eliminate(lin.constraints, n);
    SupNormResult out;
    if (!el.feasible) {
        out.feasible = false;
        out.certificate = comboCertificate(S, lin.constraints, el.infeasibleCombo);
        return out;
    }

    // Feasible assignments are values + nullspace; minimize t with
    // -t <= f(p) <= t as an exact linear program over (t, z).
    size_t k = el.nullBasis.size();
    LpProblem lp;
    lp.nvars = 1 + k;
    lp.c.assign(lp.nvars, Rational(0));
    lp.c[0] = 1;
    for (size_t j = 0; j < n; ++j) {
        std::vector<Rational> up(lp.nvars, Rational(0)), down(lp.nvars, Rational(0));
        up[0] = -1;
        down[0] = -1;
        for (size_t z = 0; z < k; ++z) {
            up[1 + z] = el.nullBasis[z][j];
            down[1 + z] = -el.nullBasis[z][j];
        }
        lp.A.push_back(std::move(up));
        lp.b.push_back(-el.values[j]);
        lp.A.push_back(std::move(down));
        lp.b.push_back(el.values[j]);
    }
    LpResult r = solveLp(lp);
    if (r.status != LpResult::Status::Optimal)
        throw Error("sup-norm program must be feasible and bounded");
    out.value = r.value;
    for (size_t j = 0; j < n; ++j) {
        Rational fj = el.values[j];
        for (size_t z = 0; z < k; ++z) fj += el.nullBasis[z][j] * r.x[1 + z];
        out.witness.emplace(lin.win.points[j], std::move(fj));
    }
    return out;
}

std::optional<SymbolicFunction> solvePolynomial(const EquationSystem& S, int degreeBound) {
    std::vector<std::vector<Rational>> rhs;
    int maxRhsDeg = 0;
    for (const auto& eq : S.equations()) {
        switch (eq.rhs.kind()) {
            case FuncKind::Constant:
                rhs.push_back({eq.rhs.constantValue()});
                break;
            case FuncKind::Polynomial:
                rhs.push_back(eq.rhs.polyCoeffs());
                break;
            default:
                throw Error("polynomial solver requires polynomial right-hand sides");
        }
        maxRhsDeg = std::max(maxRhsDeg, static_cast<int>(rhs.back().size()) - 1);
        for (const auto& [a, b] : eq.op.terms())
            if (!b.isRational())
                throw Error("polynomial solver requires rational shifts");
    }
    if (degreeBound < 0) degreeBound = maxRhsDeg + static_cast<int>(S.size()) + 2;
    size_t nc = static_cast<size_t>(degreeBound) + 1;

    std::vector<std::vector<Rational>> binom(nc, std::vector<Rational>(nc, Rational(0)));
    for (size_t j = 0; j < nc; ++j) {
        binom[j][0] = 1;
        for (size_t m = 1; m <= j; ++m) binom[j][m] = binom[j - 1][m - 1] + binom[j - 1][m];
    }

    std::vector<LinearConstraint> cs;
    for (size_t i = 0; i < S.size(); ++i) {
        // Coefficient of x^m in Σ_d c_d Σ_t a_t (x + b_t)^d.
        std::vector<std::vector<Rational>> M(nc, std::vector<Rational>(nc, Rational(0)));
        for (const auto& [a, b] : S.equations()[i].op.terms()) {
            Rational bq = b.rationalPart();
            std::vector<Rational> pw(nc, Rational(1));
            for (size_t e = 1; e < nc; ++e) pw[e] = pw[e - 1] * bq;
            for (size_t d = 0; d < nc; ++d)
                for (size_t m = 0; m <= d; ++m) M[m][d] += a * binom[d][m] * pw[d - m];
        }
        for (size_t m = 0; m < nc; ++m) {
            LinearConstraint c;
            for (size_t d = 0; d < nc; ++d)
                if (M[m][d] != 0) c.coeffs[static_cast<int>(d)] = M[m][d];
            c.rhs = m < rhs[i].size() ? rhs[i][m] : Rational(0);
            if (c.coeffs.empty() && c.rhs == 0) continue;
            c.equationIndex = i;
            cs.push_back(std::move(c));
        }
    }
    EliminationResult res = eliminate(cs, nc);
    if (!res.feasible) return std::nullopt;
    return SymbolicFunction::polynomial(S.context(), res.values);
}

SolveOutcome solveVanishingOn(const EquationSystem& S, const ConstraintSet& H, const Window& w) {
    const Lattice& L = S.shiftLattice();
    WindowLinearization lin = linearize(S, w);
    std::vector<bool> pinned(lin.win.points.size(), false);
    for (size_t j = 0; j < lin.win.points.size(); ++j)
        pinned[j] = H.containsPoint(L.toAmbient(lin.win.points[j]), L);
    EliminationResult res = eliminate(lin.constraints, lin.win.points.size(), pinned);
    if (!res.feasible)
        return SolveOutcome::unsolvable(comboCertificate(S, lin.constraints, res.infeasibleCombo));
    SymbolicFunction f = packageSolution(S, lin.win, w.radius, res.values);
    return SolveOutcome::solved(std::move(f), w, !systemVanishesOffLattice(S));
}

namespace {

Rational ratPow(const Rational& base, const Int& e) {
    if (e < 0) return 1 / ratPow(base, -e);
    Rational acc(1), sq = base;
    for (Int k = e; k > 0; k >>= 1) {
        if ((k & 1) != 0) acc *= sq;
        sq *= sq;
    }
    return acc;
}

} // namespace

BaseVerdict twoTermBaseCompare(const Rational& a1, const Rational& b1, const Rational& a2,
                               const Rational& b2) {
    if (a1 == 0 || a2 == 0 || b1 == 0 || b2 == 0)
        throw Error("base comparison requires nonzero coefficients and shifts");
    Rational A1 = abs(a1), A2 = abs(a2);
    Int q = lcm(denominator(b1), denominator(b2));
    Int e1 = numerator(b2) * (q / denominator(b2));
    Int e2 = numerator(b1) * (q / denominator(b1));
    return ratPow(A1, e1) == ratPow(A2, e2) ? BaseVerdict::Equal : BaseVerdict::Distinct;
}

TwoTermNormalForm normalizeTwoTerm(const Rational& a, const Rational& b,
                                   const SymbolicFunction& g) {
    if (a == 0 || b == 0) throw Error("two-term normalization requires a != 0 and b != 0");
    TwoTermNormalForm form;
    form.kind = a > 0 ? TwoTermNormalForm::Kind::Delta : TwoTermNormalForm::Kind::AntiPeriodic;
    form.baseAbs = abs(a);
    form.shift = b;
    form.exactRhs = form.baseAbs == 1;
    form.rhs = g;
    return form;
}

double scaledRhsAt(const TwoTermNormalForm& form, double x) {
    double c = std::pow(toDouble(form.baseAbs), 1.0 / toDouble(form.shift));
    return evalNumeric(form.rhs, x) / std::pow(c, x + toDouble(form.shift));
}

} // namespace diffsys
