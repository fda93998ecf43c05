#include "diffsys/elimination.hpp"

namespace diffsys {

namespace {

struct Row {
    std::map<int, Rational> coeffs;
    Rational rhs;
    std::map<size_t, Rational> provenance; // input-constraint index -> multiplier
    int pivot = -1;
};

void addScaled(Row& target, const Row& src, const Rational& q) {
    if (q == 0) return;
    for (const auto& [j, c] : src.coeffs) {
        auto [it, fresh] = target.coeffs.emplace(j, q * c);
        if (!fresh) {
            it->second += q * c;
            if (it->second == 0) target.coeffs.erase(it);
        }
    }
    target.rhs += q * src.rhs;
    for (const auto& [i, c] : src.provenance) {
        auto [it, fresh] = target.provenance.emplace(i, q * c);
        if (!fresh) {
            it->second += q * c;
            if (it->second == 0) target.provenance.erase(it);
        }
    }
}

} // namespace

EliminationResult eliminate(const std::vector<LinearConstraint>& constraints, size_t nUnknowns,
                            const std::vector<bool>& pinned) {
    std::vector<Row> pivotRows;
    std::map<int, size_t> pivotOf; // unknown column -> index in pivotRows

    for (size_t idx = 0; idx < constraints.size(); ++idx) {
        Row row;
        for (const auto& [j, c] : constraints[idx].coeffs) {
            if (!pinned.empty() && pinned.at(static_cast<size_t>(j))) continue;
            if (c != 0) row.coeffs.emplace(j, c);
        }
        row.rhs = constraints[idx].rhs;
        row.provenance.emplace(idx, Rational(1));

        // Substitute all known pivots. Stored rows carry no pivot column but
        // their own, so each substitution strictly removes one.
        for (;;) {
            auto found = row.coeffs.end();
            for (auto it = row.coeffs.begin(); it != row.coeffs.end(); ++it)
                if (pivotOf.count(it->first)) {
                    found = it;
                    break;
                }
            if (found == row.coeffs.end()) break;
            addScaled(row, pivotRows[pivotOf.at(found->first)], -found->second);
        }
        if (row.coeffs.empty()) {
            if (row.rhs == 0) continue;
            EliminationResult r;
            r.feasible = false;
            r.infeasibleCombo = std::move(row.provenance);
            return r;
        }

        // Normalize on the lowest remaining column and clear it from earlier
        // rows (Gauss-Jordan), keeping every stored row pivot-reduced.
        int col = row.coeffs.begin()->first;
        Rational inv = 1 / row.coeffs.begin()->second;
        if (inv != 1) {
            for (auto& [j, c] : row.coeffs) c *= inv;
            row.rhs *= inv;
            for (auto& [i, c] : row.provenance) c *= inv;
        }
        row.pivot = col;
        for (auto& earlier : pivotRows) {
            auto found = earlier.coeffs.find(col);
            if (found != earlier.coeffs.end()) addScaled(earlier, row, -found->second);
        }
        pivotRows.push_back(std::move(row));
        pivotOf.emplace(col, pivotRows.size() - 1);
    }

    EliminationResult r;
    r.feasible = true;
    r.values.assign(nUnknowns, Rational(0));
    r.isFree.assign(nUnknowns, true);
    for (size_t j = 0; j < nUnknowns; ++j)
        if (!pinned.empty() && pinned[j]) r.isFree[j] = false;
    for (const auto& row : pivotRows) {
        r.isFree[static_cast<size_t>(row.pivot)] = false;
        r.values[static_cast<size_t>(row.pivot)] = row.rhs;
    }
    for (size_t j = 0; j < nUnknowns; ++j) {
        if (!r.isFree[j]) continue;
        std::vector<Rational> dir(nUnknowns, Rational(0));
        dir[j] = 1;
        for (const auto& row : pivotRows) {
            auto it = row.coeffs.find(static_cast<int>(j));
            if (it != row.coeffs.end()) dir[static_cast<size_t>(row.pivot)] = -it->second;
        }
        r.nullBasis.push_back(std::move(dir));
    }
    return r;
}

} // namespace diffsys
