#pragma once

#include <memory>
#include <optional>

#include "diffsys/cyclotomic.hpp"
#include "diffsys/operator.hpp"

namespace diffsys {

enum class FuncKind {
    Constant,
    Polynomial,
    TrigPoly,
    CosetIndicator,
    LatticeFunction,
    WindowTable,
    LinComb,
};

/// Closed-form rule over lattice coordinates k_1..k_r: a rational-linear
/// combination of 1, the coordinates themselves, and half-line indicators
/// [k_i > c] with integer thresholds. Closed under coordinate translation,
/// which is what applying a translation operator does to it.
struct LatticeRule {
    Rational c0;
    std::map<int, Rational> linear;                // 0-based coordinate -> coeff
    std::map<std::pair<int, Int>, Rational> steps; // (coordinate, threshold) -> coeff

    bool isZero() const { return c0 == 0 && linear.empty() && steps.empty(); }
    void addScaled(const LatticeRule& o, const Rational& q);
    LatticeRule shifted(const LatticePoint& t) const; // k -> rule(k + t)
    Rational evaluate(const LatticePoint& k) const;
    bool operator==(const LatticeRule& o) const;
    /// |{i in coords : k_i > 0}|.
    static LatticeRule cardinality(const std::vector<int>& coords);
    static LatticeRule constant(const Rational& q);
    std::string render() const;
};

/// Immutable symbolic function on the reals, one of a small set of exactly
/// representable classes plus canonical rational combinations of them.
/// Constructors normalize: polynomials are trimmed (degree 0 collapses to
/// Constant), trig constants are split off, coset offsets are reduced, nested
/// combinations flatten and merge, so structural equality is meaningful.
class SymbolicFunction {
public:
    SymbolicFunction() = default;

    static SymbolicFunction constant(BasisPtr ctx, const Rational& c);
    /// Coefficients ascending: poly({a,b,c}) is a + b x + c x^2.
    static SymbolicFunction polynomial(BasisPtr ctx, std::vector<Rational> coeffs);
    /// Sum over terms of Re(c * e^(2 pi i lambda x)) plus a rational constant.
    /// Negative frequencies fold to positive ones by conjugation.
    static SymbolicFunction trig(BasisPtr ctx, std::map<Rational, CyclotomicNumber> terms,
                                 const Rational& constantTerm = Rational(0));
    /// cos(2 pi freq x).
    static SymbolicFunction cosTwoPi(BasisPtr ctx, const Rational& freq);
    /// Indicator of the coset L + offset.
    static SymbolicFunction cosetIndicator(Lattice L, const FormalReal& offset);
    /// rule(coords(x)) on the lattice, offValue elsewhere.
    static SymbolicFunction latticeFunction(Lattice L, LatticeRule rule,
                                            const Rational& offValue = Rational(0));
    /// Explicit values on the radius box of the lattice, offValue off the
    /// lattice, undefined beyond the box. Produced by window solvers.
    static SymbolicFunction windowTable(Lattice L, int radius,
                                        std::map<LatticePoint, Rational> values,
                                        const Rational& offValue = Rational(0));
    static SymbolicFunction linComb(BasisPtr ctx,
                                    std::vector<std::pair<Rational, SymbolicFunction>> parts);

    bool valid() const { return d_ != nullptr; }
    FuncKind kind() const;
    const BasisPtr& context() const;

    const Rational& constantValue() const;
    const std::vector<Rational>& polyCoeffs() const;
    const std::map<Rational, CyclotomicNumber>& trigTerms() const;
    const Lattice& lattice() const;
    const FormalReal& cosetOffset() const;
    const LatticeRule& rule() const;
    const Rational& offLatticeValue() const;
    int windowRadius() const;
    const std::map<LatticePoint, Rational>& windowValues() const;
    const std::vector<std::pair<Rational, SymbolicFunction>>& parts() const;

    SymbolicFunction operator+(const SymbolicFunction& o) const;
    SymbolicFunction operator-(const SymbolicFunction& o) const;
    SymbolicFunction scaled(const Rational& q) const;

    /// Structural equality of canonical forms. Function equality is the
    /// stronger functionsEqual below.
    bool operator==(const SymbolicFunction& o) const;
    bool operator!=(const SymbolicFunction& o) const { return !(*this == o); }

    std::string render() const;

private:
    struct Data;
    std::shared_ptr<const Data> d_;
    explicit SymbolicFunction(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
};

/// Image of f under the operator: sum of a_i f(x + b_i). Exact; throws
/// RepresentabilityError when the image leaves the representable classes
/// (irrational shift of a nonconstant polynomial, irrational phase product,
/// window tables) and LatticeError when a lattice-rule function is shifted by
/// a non-member of its lattice.
SymbolicFunction applyOperator(const DifferenceOperator& op, const SymbolicFunction& f);

/// Exact rational when the class permits, IEEE double otherwise (only real
/// cyclotomic values that are irrational take the float branch).
struct EvalValue {
    bool exact = true;
    Rational r;
    double f = 0.0;
    double asDouble() const { return exact ? toDouble(r) : f; }
};

/// Throws EvalError when the point is outside the exact domain of the class
/// (symbolic point for polynomial or trig evaluation, beyond a window table).
EvalValue evaluate(const SymbolicFunction& f, const FormalReal& x);

/// Plain numeric evaluation for sampling estimators. Supported for constants,
/// polynomials, trig polynomials and their combinations only.
double evalNumeric(const SymbolicFunction& f, double x);

/// Exact decision of "f is the zero function". Decides each representable
/// class and their combinations; see function_zero.cpp for the method and its
/// documented limits (which throw RepresentabilityError rather than guess).
bool zeroTest(const SymbolicFunction& f);

/// Point with f(x) != 0, when one is found by bounded exact search. Only
/// meaningful after zeroTest returned false; may be empty if the search
/// budget is exhausted.
std::optional<FormalReal> findNonzeroPoint(const SymbolicFunction& f);

struct EqualResult {
    bool equal;
    std::optional<FormalReal> witness; // point where values differ, if found
};

EqualResult functionsEqual(const SymbolicFunction& f, const SymbolicFunction& g);

} // namespace diffsys
