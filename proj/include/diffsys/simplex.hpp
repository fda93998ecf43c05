#pragma once

#include <vector>

#include "diffsys/rational.hpp"

namespace diffsys {

/// minimize c·x subject to A x <= b, x free. Dense rows, exact rationals.
struct LpProblem {
    size_t nvars = 0;
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    std::vector<Rational> c;
};

struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded } status = Status::Optimal;
    Rational value;
    std::vector<Rational> x;
    /// On infeasibility: y >= 0 with yᵀA = 0 and yᵀb < 0 (one entry per row).
    std::vector<Rational> farkas;
};

/// Exact two-phase simplex with Bland's rule (termination guaranteed, no
/// cycling). Deterministic: identical problems give identical results.
LpResult solveLp(const LpProblem& prob);

} // namespace diffsys
