#pragma once

#include "diffsys/operator.hpp"

namespace diffsys {

/// Multivariate polynomial over ℚ with small integer exponents, used by the
/// syzygy engine. Term order everywhere is graded reverse lexicographic.
struct MPoly {
    size_t nvars = 0;
    std::map<std::vector<int>, Rational> terms; // monomial -> nonzero coeff

    static MPoly zero(size_t nvars) { return MPoly{nvars, {}}; }
    bool isZero() const { return terms.empty(); }
    void add(const std::vector<int>& mono, const Rational& q);
    MPoly scaled(const Rational& q) const;
    bool operator==(const MPoly& o) const { return nvars == o.nvars && terms == o.terms; }
};

struct SyzygyBudget {
    size_t maxSPairs = 10000;
    int maxDegree = 40;
};

/// Generating set of {A ∈ ℚ[x]^n : Σ Aᵢpᵢ = 0}, computed as the
/// first-component-zero elements of a module Groebner basis of
/// {(pᵢ, eᵢ)} ⊆ ℚ[x]^{1+n} under position-over-term order. Zero inputs yield
/// their unit syzygies. Throws ResourceError past the budget.
std::vector<std::vector<MPoly>> polySyzygies(const std::vector<MPoly>& p, SyzygyBudget budget);

/// Syzygies over the Laurent ring: rows A with Σ Aᵢpᵢ = 0. Exponents are
/// cleared by monomial units (flat localization, so the polynomial syzygies
/// generate the Laurent ones after unit scaling).
std::vector<std::vector<LaurentPoly>> laurentSyzygies(const std::vector<LaurentPoly>& p,
                                                      SyzygyBudget budget);

} // namespace diffsys
