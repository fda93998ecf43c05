#include "diffsys/groebner.hpp"

#include <deque>

#include "diffsys/error.hpp"

namespace diffsys {

void MPoly::add(const std::vector<int>& mono, const Rational& q) {
    if (q == 0) return;
    auto [it, fresh] = terms.emplace(mono, q);
    if (!fresh) {
        it->second += q;
        if (it->second == 0) terms.erase(it);
    }
}

MPoly MPoly::scaled(const Rational& q) const {
    MPoly r{nvars, {}};
    if (q == 0) return r;
    for (const auto& [m, c] : terms) r.terms.emplace(m, c * q);
    return r;
}

namespace {

using Mono = std::vector<int>;

long totalDeg(const Mono& m) {
    long d = 0;
    for (int e : m) d += e;
    return d;
}

/// true iff a < b in graded reverse lexicographic order.
bool monoLess(const Mono& a, const Mono& b) {
    long da = totalDeg(a), db = totalDeg(b);
    if (da != db) return da < db;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i]; // larger trailing exponent loses
    }
    return false;
}

Mono monoMul(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

bool monoDivides(const Mono& a, const Mono& b) { // a | b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Mono monoDiv(const Mono& b, const Mono& a) { // b / a
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

Mono monoLcm(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

/// Element of the free module ℚ[x]^{1+n}; component 0 carries the combined
/// polynomial, components 1..n the cofactors on the inputs.
struct MVec {
    std::vector<MPoly> comp;

    bool isZero() const {
        for (const auto& c : comp)
            if (!c.isZero()) return false;
        return true;
    }
};

struct Lead {
    int component = -1;
    Mono mono;
    Rational coeff;
};

/// Position-over-term: any component-0 term beats any other component; lower
/// component index beats higher; grevlex within a component.
Lead leadOf(const MVec& v) {
    for (size_t c = 0; c < v.comp.size(); ++c) {
        const MPoly& p = v.comp[c];
        if (p.isZero()) continue;
        auto best = p.terms.begin();
        for (auto it = std::next(p.terms.begin()); it != p.terms.end(); ++it)
            if (monoLess(best->first, it->first)) best = it;
        return {static_cast<int>(c), best->first, best->second};
    }
    return {};
}

void addScaledShifted(MVec& target, const MVec& src, const Rational& q, const Mono& shift) {
    for (size_t c = 0; c < src.comp.size(); ++c)
        for (const auto& [m, coeff] : src.comp[c].terms)
            target.comp[c].add(monoMul(m, shift), coeff * q);
}

/// Top-reduction of h by the basis; h is modified in place.
void reduce(MVec& h, const std::vector<MVec>& G, const std::vector<Lead>& leads) {
    while (true) {
        Lead lh = leadOf(h);
        if (lh.component < 0) return;
        bool reduced = false;
        for (size_t k = 0; k < G.size(); ++k) {
            if (leads[k].component != lh.component) continue;
            if (!monoDivides(leads[k].mono, lh.mono)) continue;
            addScaledShifted(h, G[k], -lh.coeff / leads[k].coeff,
                             monoDiv(lh.mono, leads[k].mono));
            reduced = true;
            break;
        }
        if (!reduced) return;
    }
}

void makeMonic(MVec& v) {
    Lead l = leadOf(v);
    if (l.component < 0) return;
    Rational inv = 1 / l.coeff;
    for (auto& p : v.comp)
        for (auto& [m, c] : p.terms) c *= inv;
}

} // namespace

std::vector<std::vector<MPoly>> polySyzygies(const std::vector<MPoly>& p, SyzygyBudget budget) {
    size_t n = p.size();
    size_t nvars = n ? p[0].nvars : 0;
    for (const auto& q : p)
        if (q.nvars != nvars) throw Error("syzygy inputs disagree on variable count");

    std::vector<MVec> G;
    std::vector<Lead> leads;
    auto push = [&](MVec v) {
        makeMonic(v);
        Lead l = leadOf(v);
        if (l.component < 0) return false;
        if (totalDeg(l.mono) > budget.maxDegree)
            throw ResourceError("syzygy computation exceeded its degree budget");
        G.push_back(std::move(v));
        leads.push_back(std::move(l));
        return true;
    };

    for (size_t i = 0; i < n; ++i) {
        MVec v;
        v.comp.assign(n + 1, MPoly::zero(nvars));
        v.comp[0] = p[i];
        v.comp[i + 1].add(Mono(nvars, 0), Rational(1));
        push(std::move(v));
    }

    std::deque<std::pair<size_t, size_t>> pairs;
    auto queuePairsWith = [&](size_t k) {
        for (size_t j = 0; j < k; ++j)
            if (leads[j].component == leads[k].component) pairs.emplace_back(j, k);
    };
    for (size_t k = 0; k < G.size(); ++k) queuePairsWith(k);

    size_t processed = 0;
    while (!pairs.empty()) {
        if (++processed > budget.maxSPairs)
            throw ResourceError("syzygy computation exceeded its S-pair budget");
        auto [a, b] = pairs.front();
        pairs.pop_front();
        Mono gamma = monoLcm(leads[a].mono, leads[b].mono);
        MVec s;
        s.comp.assign(n + 1, MPoly::zero(nvars));
        addScaledShifted(s, G[a], 1 / leads[a].coeff, monoDiv(gamma, leads[a].mono));
        addScaledShifted(s, G[b], -1 / leads[b].coeff, monoDiv(gamma, leads[b].mono));
        reduce(s, G, leads);
        if (push(std::move(s))) queuePairsWith(G.size() - 1);
    }

    std::vector<std::vector<MPoly>> out;
    for (const auto& g : G) {
        if (!g.comp[0].isZero()) continue;
        out.emplace_back(g.comp.begin() + 1, g.comp.end());
    }
    return out;
}

std::vector<std::vector<LaurentPoly>> laurentSyzygies(const std::vector<LaurentPoly>& p,
                                                      SyzygyBudget budget) {
    size_t n = p.size();
    size_t nvars = n ? p[0].nvars : 0;
    constexpr long kExponentCap = 1000000;

    std::vector<MPoly> cleared(n, MPoly::zero(nvars));
    std::vector<Mono> clearingShift(n, Mono(nvars, 0));
    for (size_t i = 0; i < n; ++i) {
        Mono shift(nvars, 0);
        for (const auto& [e, q] : p[i].terms)
            for (size_t v = 0; v < nvars; ++v) {
                if (intAbs(e[v]) > kExponentCap)
                    throw ResourceError("Laurent exponent exceeds the syzygy engine's range");
                int ev = static_cast<int>(e[v]);
                if (-ev > shift[v]) shift[v] = -ev;
            }
        clearingShift[i] = shift;
        for (const auto& [e, q] : p[i].terms) {
            Mono m(nvars);
            for (size_t v = 0; v < nvars; ++v) m[v] = static_cast<int>(e[v]) + shift[v];
            cleared[i].add(m, q);
        }
    }

    auto rows = polySyzygies(cleared, budget);
    std::vector<std::vector<LaurentPoly>> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<LaurentPoly> lrow;
        lrow.reserve(n);
        for (size_t i = 0; i < n; ++i) {
            LaurentPoly a = LaurentPoly::zero(nvars);
            // A'_i x^{m_i} works on the original p_i since p'_i = x^{m_i} p_i.
            for (const auto& [m, q] : row[i].terms) {
                std::vector<Int> e(nvars);
                for (size_t v = 0; v < nvars; ++v) e[v] = Int(m[v] + clearingShift[i][v]);
                a.terms.emplace(std::move(e), q);
            }
            lrow.push_back(std::move(a));
        }
        out.push_back(std::move(lrow));
    }
    return out;
}

} // namespace diffsys
