#include "diffsys/dsl.hpp"
#include "diffsys/error.hpp"
#include "diffsys/function.hpp"

#include <doctest.h>

#include <cmath>

using namespace diffsys;

namespace {
BasisPtr ctx2() { return makeBasis({"b1", "b2"}); }
} // namespace

TEST_CASE("polynomials evaluate exactly and render canonically") {
    auto ctx = ctx2();
    SymbolicFunction p = SymbolicFunction::polynomial(ctx, {Rational(0), Rational(-1), Rational(1)});
    CHECK(p.render() == "poly(0,-1,1)");
    EvalValue v = evaluate(p, FormalReal::rational(ctx, Rational(3, 2)));
    REQUIRE(v.exact);
    CHECK(v.r == Rational(3, 4)); // (3/2)^2 - 3/2
    CHECK_THROWS_AS(evaluate(p, FormalReal::symbol(ctx, 1)), EvalError);
    CHECK(SymbolicFunction::constant(ctx, Rational(5, 7)).render() == "5/7");
}

TEST_CASE("trig periods are exact") {
    auto ctx = ctx2();
    SymbolicFunction c1 = SymbolicFunction::cosTwoPi(ctx, Rational(1));
    FormalReal one = FormalReal::rational(ctx, 1);
    FormalReal half = FormalReal::rational(ctx, Rational(1, 2));
    CHECK(zeroTest(applyOperator(DifferenceOperator::delta(one), c1)));
    // half-period shift flips the sign: the difference is -2 cos
    SymbolicFunction d = applyOperator(DifferenceOperator::delta(half), c1);
    CHECK_FALSE(zeroTest(d));
    CHECK(zeroTest(d - c1.scaled(Rational(-2))));
    // quarter-period difference of sin against cos
    SymbolicFunction s = parseFunctionText(ctx, "sin(2pi*x)");
    CHECK(s.render() == "sin(2pi*x)");
    SymbolicFunction shifted =
        applyOperator(DifferenceOperator::translation(FormalReal::rational(ctx, Rational(1, 4))), s);
    CHECK(zeroTest(shifted - c1));
}

TEST_CASE("cos evaluates to exact rationals at low-order phases") {
    auto ctx = ctx2();
    SymbolicFunction c = SymbolicFunction::cosTwoPi(ctx, Rational(1, 3));
    EvalValue at1 = evaluate(c, FormalReal::rational(ctx, 1));
    REQUIRE(at1.exact);
    CHECK(at1.r == Rational(-1, 2));
    EvalValue at12 = evaluate(c, FormalReal::rational(ctx, Rational(1, 2)));
    REQUIRE(at12.exact);
    CHECK(at12.r == Rational(1, 2));
    // cos(2 pi / 5) is a real irrational cyclotomic: inexact branch
    EvalValue at5 = evaluate(SymbolicFunction::cosTwoPi(ctx, Rational(1, 5)),
                             FormalReal::rational(ctx, 1));
    CHECK_FALSE(at5.exact);
    CHECK(at5.asDouble() == doctest::Approx(std::cos(2 * 3.14159265358979323846 / 5)));
}

TEST_CASE("coset indicators are translation invariant along their lattice") {
    auto ctx = ctx2();
    FormalReal b1 = FormalReal::symbol(ctx, 1);
    FormalReal b2 = FormalReal::symbol(ctx, 2);
    Lattice L = Lattice::fromGenerators(ctx, {b1});
    SymbolicFunction chi = SymbolicFunction::cosetIndicator(L, b2);
    CHECK(chi.render() == "chi(<b1> + b2)");
    CHECK(rhsValueAt(chi, b2) == 1);
    CHECK(rhsValueAt(chi, b2 + b1.scaled(5)) == 1);
    CHECK(rhsValueAt(chi, FormalReal(ctx)) == 0);
    CHECK(zeroTest(applyOperator(DifferenceOperator::delta(b1), chi)));
    CHECK_FALSE(zeroTest(applyOperator(DifferenceOperator::delta(b2), chi)));
}

TEST_CASE("lattice rules shift by translating coordinates") {
    auto ctx = ctx2();
    FormalReal b1 = FormalReal::symbol(ctx, 1);
    Lattice L = Lattice::fromGenerators(ctx, {b1});
    LatticeRule step;
    step.steps[{0, Int(0)}] = Rational(1); // [k1 > 0]
    SymbolicFunction f = SymbolicFunction::latticeFunction(L, step);
    CHECK(f.render() == "latfun(<b1>; step(1,0))");
    SymbolicFunction d = applyOperator(DifferenceOperator::delta(b1), f);
    LatticeRule spike; // [k1 > -1] - [k1 > 0] = indicator of k1 == 0
    spike.steps[{0, Int(-1)}] = Rational(1);
    spike.steps[{0, Int(0)}] = Rational(-1);
    CHECK(zeroTest(d - SymbolicFunction::latticeFunction(L, spike)));
    CHECK(rhsValueAt(d, FormalReal(ctx)) == 1);
    CHECK(rhsValueAt(d, b1) == 0);
    // off-lattice value is the configured constant
    SymbolicFunction g = SymbolicFunction::latticeFunction(L, step, Rational(7));
    CHECK(g.render() == "latfun(<b1>; step(1,0); off=7)");
    CHECK(rhsValueAt(g, FormalReal::symbol(ctx, 2)) == 7);
}

TEST_CASE("window tables evaluate inside and refuse outside") {
    auto ctx = ctx2();
    FormalReal b1 = FormalReal::symbol(ctx, 1);
    Lattice L = Lattice::fromGenerators(ctx, {b1});
    std::map<LatticePoint, Rational> tab;
    tab[{Int(-1)}] = Rational(2);
    tab[{Int(0)}] = Rational(3, 2);
    tab[{Int(1)}] = Rational(-1);
    SymbolicFunction w = SymbolicFunction::windowTable(L, 1, tab, Rational(0));
    CHECK(rhsValueAt(w, FormalReal(ctx)) == Rational(3, 2));
    CHECK(rhsValueAt(w, -b1) == 2);
    CHECK(rhsValueAt(w, FormalReal::symbol(ctx, 2)) == 0); // off lattice
    CHECK_THROWS_AS(evaluate(w, b1.scaled(2)), EvalError);  // beyond the window
}

TEST_CASE("linear combinations canonicalize by class") {
    auto ctx = ctx2();
    SymbolicFunction merged = SymbolicFunction::linComb(
        ctx, {{Rational(2), SymbolicFunction::constant(ctx, 1)},
              {Rational(1), SymbolicFunction::polynomial(ctx, {Rational(0), Rational(1)})}});
    CHECK(merged == SymbolicFunction::polynomial(ctx, {Rational(2), Rational(1)}));
    SymbolicFunction c = SymbolicFunction::cosTwoPi(ctx, Rational(1));
    CHECK(SymbolicFunction::linComb(ctx, {{Rational(1), c}, {Rational(1), c}}) ==
          c.scaled(Rational(2)));
    CHECK(SymbolicFunction::linComb(ctx, {{Rational(1), c}, {Rational(-1), c}}).render() == "0");
}

TEST_CASE("zero test and witnesses") {
    auto ctx = ctx2();
    FormalReal b1 = FormalReal::symbol(ctx, 1);
    Lattice L = Lattice::fromGenerators(ctx, {b1});
    SymbolicFunction a = SymbolicFunction::cosetIndicator(L, FormalReal(ctx));
    SymbolicFunction b = SymbolicFunction::cosetIndicator(L, FormalReal::symbol(ctx, 2));
    CHECK(zeroTest(a - a));
    CHECK_FALSE(zeroTest(a - b));
    auto w = findNonzeroPoint(a - b);
    REQUIRE(w.has_value());
    CHECK(evaluate(a - b, *w).r != 0);
    EqualResult eq = functionsEqual(SymbolicFunction::polynomial(ctx, {Rational(0), Rational(1)}),
                                    SymbolicFunction::polynomial(ctx, {Rational(0), Rational(2)}));
    CHECK_FALSE(eq.equal);
    REQUIRE(eq.witness.has_value());
}

TEST_CASE("numeric evaluation matches exact evaluation") {
    auto ctx = ctx2();
    SymbolicFunction f = SymbolicFunction::linComb(
        ctx, {{Rational(1, 2), SymbolicFunction::polynomial(ctx, {Rational(1), Rational(3)})},
              {Rational(2), SymbolicFunction::cosTwoPi(ctx, Rational(2))}});
    for (double x : {0.0, 0.25, -1.5, 2.0}) {
        Rational q(static_cast<long>(x * 4), 4);
        EvalValue e = evaluate(f, FormalReal::rational(ctx, q));
        CHECK(evalNumeric(f, x) == doctest::Approx(e.asDouble()).epsilon(1e-12));
    }
}

TEST_CASE("images outside the representable classes are refused") {
    auto ctx = ctx2();
    FormalReal b1 = FormalReal::symbol(ctx, 1);
    SymbolicFunction linear = SymbolicFunction::polynomial(ctx, {Rational(0), Rational(1)});
    CHECK_THROWS_AS(applyOperator(DifferenceOperator::translation(b1), linear),
                    RepresentabilityError);
    // constants translate freely
    CHECK_NOTHROW(applyOperator(DifferenceOperator::translation(b1),
                                SymbolicFunction::constant(ctx, 5)));
}
