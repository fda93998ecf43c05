#include "diffsys/simplex.hpp"

#include "diffsys/error.hpp"

#include <map>

namespace diffsys {

namespace {

using SparseRow = std::map<size_t, Rational>;

/// dst += f * src, erasing entries that cancel to keep rows sparse.
void addScaled(SparseRow& dst, const SparseRow& src, const Rational& f) {
    for (const auto& [j, v] : src) {
        auto it = dst.find(j);
        if (it == dst.end()) {
            Rational nv = f * v;
            if (nv != 0) dst.emplace(j, std::move(nv));
        } else {
            it->second += f * v;
            if (it->second == 0) dst.erase(it);
        }
    }
}

/// Tableau with explicit basis bookkeeping and a maintained reduced-cost
/// row. Columns: x+ (n), x- (n), slacks (m), artificials (m); rows are
/// equalities with rhs >= 0. Rows stay sparse; constraint systems from
/// window problems touch a handful of columns each.
struct Tableau {
    size_t m, n;
    size_t cols; // 2n + 2m
    std::vector<SparseRow> T;
    std::vector<Rational> rhs;
    std::vector<size_t> basis;
    SparseRow obj; // reduced costs of the current phase cost vector

    size_t slackCol(size_t i) const { return 2 * n + i; }
    size_t artCol(size_t i) const { return 2 * n + m + i; }

    Rational coeff(size_t i, size_t j) const {
        auto it = T[i].find(j);
        return it == T[i].end() ? Rational(0) : it->second;
    }

    void pivot(size_t row, size_t col) {
        Rational inv = 1 / T[row].at(col);
        if (inv != 1) {
            for (auto& [j, v] : T[row]) v *= inv;
            rhs[row] *= inv;
        }
        for (size_t i = 0; i < m; ++i) {
            if (i == row) continue;
            auto it = T[i].find(col);
            if (it == T[i].end()) continue;
            Rational f = -it->second;
            addScaled(T[i], T[row], f);
            rhs[i] += f * rhs[row];
        }
        auto it = obj.find(col);
        if (it != obj.end()) addScaled(obj, T[row], -it->second);
        basis[row] = col;
    }

    /// Installs the reduced costs c_j - c_B B^-1 A_j for a new phase; basic
    /// columns are unit vectors in their own row, so subtracting c_basis(i)
    /// times row i zeroes them.
    void setObjective(const std::vector<Rational>& cost) {
        obj.clear();
        for (size_t j = 0; j < cols; ++j)
            if (cost[j] != 0) obj.emplace(j, cost[j]);
        for (size_t i = 0; i < m; ++i)
            if (cost[basis[i]] != 0) addScaled(obj, T[i], -cost[basis[i]]);
    }

    /// Bland's rule iteration to optimality: the entering column is the
    /// lowest-index negative reduced cost among allowed columns, ratio ties
    /// leave the lowest basis index. Returns false when the problem is
    /// unbounded in the current phase.
    bool optimize(const std::vector<bool>& allowed) {
        while (true) {
            size_t enter = cols;
            for (const auto& [j, r] : obj) {
                if (r >= 0 || !allowed[j]) continue;
                enter = j;
                break;
            }
            if (enter == cols) return true;

            size_t leave = m;
            Rational best;
            for (size_t i = 0; i < m; ++i) {
                auto it = T[i].find(enter);
                if (it == T[i].end() || it->second <= 0) continue;
                Rational ratio = rhs[i] / it->second;
                if (leave == m || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m) return false;
            pivot(leave, enter);
        }
    }

    Rational objective(const std::vector<Rational>& cost) const {
        Rational v(0);
        for (size_t i = 0; i < m; ++i)
            if (cost[basis[i]] != 0) v += cost[basis[i]] * rhs[i];
        return v;
    }
};

} // namespace

LpResult solveLp(const LpProblem& prob) {
    size_t m = prob.A.size(), n = prob.nvars;
    LpResult result;
    if (m == 0) {
        for (const auto& cj : prob.c)
            if (cj != 0) {
                result.status = LpResult::Status::Unbounded;
                return result;
            }
        result.status = LpResult::Status::Optimal;
        result.value = 0;
        result.x.assign(n, Rational(0));
        return result;
    }

    Tableau t;
    t.m = m;
    t.n = n;
    t.cols = 2 * n + 2 * m;
    t.T.assign(m, SparseRow{});
    t.rhs.assign(m, Rational(0));
    t.basis.resize(m);
    std::vector<int> sigma(m, 1);
    for (size_t i = 0; i < m; ++i) {
        if (prob.b[i] < 0) sigma[i] = -1;
        for (size_t j = 0; j < n; ++j) {
            Rational a = sigma[i] * prob.A[i][j];
            if (a == 0) continue;
            t.T[i][j] = a;
            t.T[i][n + j] = -a;
        }
        t.T[i][t.slackCol(i)] = sigma[i];
        t.T[i][t.artCol(i)] = 1;
        t.rhs[i] = sigma[i] * prob.b[i];
        t.basis[i] = t.artCol(i);
    }

    std::vector<Rational> phase1Cost(t.cols, Rational(0));
    for (size_t i = 0; i < m; ++i) phase1Cost[t.artCol(i)] = 1;
    std::vector<bool> allowAll(t.cols, true);
    t.setObjective(phase1Cost);
    if (!t.optimize(allowAll))
        throw Error("phase-1 objective is bounded by construction");

    Rational w = t.objective(phase1Cost);
    if (w > 0) {
        // Dual multipliers live in the artificial columns (initial identity).
        result.status = LpResult::Status::Infeasible;
        result.farkas.assign(m, Rational(0));
        for (size_t i = 0; i < m; ++i) {
            Rational y(0);
            for (size_t k = 0; k < m; ++k)
                if (phase1Cost[t.basis[k]] != 0)
                    y += phase1Cost[t.basis[k]] * t.coeff(k, t.artCol(i));
            result.farkas[i] = -sigma[i] * y;
        }
        return result;
    }

    // Drive zero-level artificials out of the basis; rows with no
    // non-artificial support are redundant and can keep them at zero.
    std::vector<bool> nonArtificial(t.cols, true);
    for (size_t i = 0; i < m; ++i) nonArtificial[t.artCol(i)] = false;
    for (size_t i = 0; i < m; ++i) {
        if (nonArtificial[t.basis[i]]) continue;
        for (const auto& [j, v] : t.T[i]) {
            if (!nonArtificial[j] || v == 0) continue;
            t.pivot(i, j);
            break;
        }
    }

    std::vector<Rational> phase2Cost(t.cols, Rational(0));
    for (size_t j = 0; j < n; ++j) {
        phase2Cost[j] = prob.c[j];
        phase2Cost[n + j] = -prob.c[j];
    }
    t.setObjective(phase2Cost);
    if (!t.optimize(nonArtificial)) {
        result.status = LpResult::Status::Unbounded;
        return result;
    }

    result.status = LpResult::Status::Optimal;
    result.value = t.objective(phase2Cost);
    result.x.assign(n, Rational(0));
    for (size_t i = 0; i < m; ++i) {
        if (t.basis[i] < n)
            result.x[t.basis[i]] += t.rhs[i];
        else if (t.basis[i] < 2 * n)
            result.x[t.basis[i] - n] -= t.rhs[i];
    }
    return result;
}

} // namespace diffsys
