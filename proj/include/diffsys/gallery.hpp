#pragma once

#include "diffsys/solver.hpp"

#include <cstdint>

namespace diffsys {

/// One machine-checked statement about a gallery construction, with the
/// evidence (value, witness point, certificate summary, estimate) rendered
/// deterministically.
struct GalleryClaim {
    enum class Verdict { Pass, Fail, Inconclusive };
    std::string description;
    Verdict verdict = Verdict::Inconclusive;
    std::string evidence;
};

struct GalleryReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<GalleryClaim> claims;

    bool allPass() const {
        for (const auto& c : claims)
            if (c.verdict != GalleryClaim::Verdict::Pass) return false;
        return true;
    }
};

/// n two-term equations whose shifts sum to zero (b_1, ..., b_{n-1} and the
/// negated sum), every right-hand side the constant 1. Every proper
/// subsystem is solvable; the full loop forces f(0) + n = f(0).
EquationSystem buildArbitraryFunctionsSystem(int n);

/// n independent shifts; equation i has right-hand side 2/(n-1) times the
/// indicator of the subgroup generated by the other shifts. Proper
/// subsystems have solutions with |f| <= 1; the full system forces an
/// increment of 2n/(n-1) > 2.
EquationSystem buildBoundedNormSystem(int n);

/// Truncation of the unbounded-growth chain: n independent shifts, equation
/// i has the indicator of the subgroup generated by the others, so prefix
/// deductions force f(b_1+...+b_m) - f(0) = m.
EquationSystem buildUnboundedSystem(int n);

/// Homogeneous family: shifts b_1..b_k with zero right-hand sides, and for
/// each b the indicator f_b of the subgroup generated by the other shifts,
/// which solves every equation except its own.
struct PeriodicityFamily {
    BasisPtr ctx;
    std::vector<FormalReal> shifts;
    std::vector<SymbolicFunction> functions; // functions[i] pairs with shifts[i]
    EquationSystem system;                   // (Δ_{b_i}, 0) in shift order
};
PeriodicityFamily buildPeriodicityFamily(int k);

/// Dyadic trig chain: equation n is Δ_{2^-n} f = h_n with
/// h_n = Σ_{j<n} c_j (Δ_{2^-n} cos(2π 2^j x)). Coefficients are chosen by
/// doubling (c_0 = 1) until the sampled measure of {x in [0,1]: |h_n| > 1}
/// exceeds 0.55; prefix sums Σ_{j<n} c_j cos(2π 2^j x) solve the first n
/// equations exactly.
struct TrigEscapeResult {
    BasisPtr ctx;
    std::vector<Rational> coeffs;      // c_0 .. c_{nMax-1}
    std::vector<SymbolicFunction> rhs; // h_1 .. h_nMax
    EquationSystem system;
    GalleryReport report;
};
TrigEscapeResult buildTrigEscapeSystem(int nMax, std::size_t samples,
                                       std::uint64_t seed = 0xD1FFULL);

/// Δ_b f = Δ_b χ_{0} for each listed shift: on the shift lattice every
/// solution is the point indicator plus a constant.
EquationSystem buildDarbouxSystem(BasisPtr ctx, const std::vector<FormalReal>& bs);

/// The contradictory two-term pair (Δ_1, 1), (Δ_1, 0): each singleton is
/// polynomial-solvable, the pair is certified unsolvable.
GalleryReport scPolynomialWitness();

/// Sign-set combinatorics: vectors over an ordered symbol basis classified
/// by the sign of their highest-indexed coordinate.
struct BSetContext {
    BasisPtr basis;
};
enum class BClass { InB, InMinusB, Zero };
/// Classification of v (zero rational part required) by the sign of the
/// coefficient of its highest-indexed symbol.
BClass bSetPredicate(const BSetContext& ctx, const FormalReal& v);
/// Seeded random trials of the shift-difference support bound: membership in
/// the sign set changes under translation by b only for vectors supported on
/// indices up to the top index of b.
GalleryReport bSetShiftDifference(const BSetContext& ctx, const FormalReal& b, int trials,
                                  std::uint64_t seed = 0xD1FFULL);

/// Named gallery runs for the CLI. Names: increment-loop, supnorm-loop,
/// unbounded-growth, periodicity, trig-escape, point-indicator, poly-pair,
/// sign-set.
std::vector<std::string> galleryNames();
/// Recognized params (all optional, construction-dependent): n, k, radius,
/// samples, trials, seed, rank. Throws Error on unknown name or bad value.
GalleryReport runGallery(const std::string& name,
                         const std::map<std::string, std::string>& params);

} // namespace diffsys
