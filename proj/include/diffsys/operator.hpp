#pragma once

#include <map>
#include <string>
#include <vector>

#include "diffsys/lattice.hpp"

namespace diffsys {

/// Finite rational combination of translation operators T_b acting on
/// functions by (T_b f)(x) = f(x + b). Canonical form: terms sorted by shift,
/// zero coefficients dropped; equality is structural.
class DifferenceOperator {
public:
    DifferenceOperator() = default;
    explicit DifferenceOperator(BasisPtr ctx) : ctx_(std::move(ctx)) {}

    static DifferenceOperator zero(BasisPtr ctx) { return DifferenceOperator(std::move(ctx)); }
    /// T_b.
    static DifferenceOperator translation(const FormalReal& b);
    /// Forward difference T_b - T_0.
    static DifferenceOperator delta(const FormalReal& b);
    static DifferenceOperator fromTerms(BasisPtr ctx,
                                        std::vector<std::pair<Rational, FormalReal>> terms);

    const BasisPtr& context() const { return ctx_; }
    const std::vector<std::pair<Rational, FormalReal>>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    DifferenceOperator operator+(const DifferenceOperator& o) const;
    DifferenceOperator operator-(const DifferenceOperator& o) const;
    DifferenceOperator operator-() const;
    DifferenceOperator scaled(const Rational& q) const;
    /// Composition: (A compose B) f = A (B f). Commutative for translations.
    DifferenceOperator compose(const DifferenceOperator& o) const;

    bool operator==(const DifferenceOperator& o) const;
    bool operator!=(const DifferenceOperator& o) const { return !(*this == o); }

    /// Sum of absolute coefficient values. Submultiplicative under compose and
    /// subadditive under +; an upper bound for any induced sup-norm action.
    Rational norm() const;

    /// All shifts with nonzero coefficient, in canonical order.
    std::vector<FormalReal> shifts() const;

    /// True when the operator is T_b - T_0 for a single nonzero b.
    bool isDelta(FormalReal* shiftOut = nullptr) const;

    /// Canonical text, e.g. "3*T[b1] - 2*T[0]".
    std::string render() const;

private:
    BasisPtr ctx_;
    std::vector<std::pair<Rational, FormalReal>> terms_; // sorted by shift order
    void insert(const Rational& q, const FormalReal& b);
};

/// Laurent polynomial in r variables with rational coefficients; exponent
/// vectors are lattice coordinates. Multiplication mirrors operator
/// composition under toLaurent.
struct LaurentPoly {
    size_t nvars = 0;
    std::map<std::vector<Int>, Rational> terms;

    static LaurentPoly zero(size_t nvars) { return LaurentPoly{nvars, {}}; }
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly scaled(const Rational& q) const;
    bool isZero() const { return terms.empty(); }
    bool operator==(const LaurentPoly& o) const { return nvars == o.nvars && terms == o.terms; }
    std::string render() const;
};

/// Monomial map: T_b with b in L goes to x^coords(b). A ring homomorphism
/// (compose to product, + to +) and injective on operators supported in L.
/// Throws LatticeError if some shift is not a member of L.
LaurentPoly toLaurent(const DifferenceOperator& op, const Lattice& L);

/// Inverse along the image: exponent vector e back to T with shift L.toAmbient(e).
DifferenceOperator laurentToOperator(const LaurentPoly& p, const Lattice& L);

} // namespace diffsys
