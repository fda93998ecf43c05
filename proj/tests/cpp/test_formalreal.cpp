#include "diffsys/basis.hpp"
#include "diffsys/dsl.hpp"
#include "diffsys/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace diffsys;

namespace {
BasisPtr ctx3() { return makeBasis({"b1", "b2", "b3"}); }
} // namespace

TEST_CASE("formal reals store sparse exact coordinates") {
    auto ctx = ctx3();
    FormalReal v = FormalReal::symbol(ctx, 1, Rational(1, 2)) - FormalReal::symbol(ctx, 2) +
                   FormalReal::rational(ctx, Rational(3, 4));
    CHECK(v.coeff(0) == Rational(3, 4));
    CHECK(v.coeff(1) == Rational(1, 2));
    CHECK(v.coeff(2) == Rational(-1));
    CHECK(v.coeff(3) == 0);
    CHECK(v.coords().size() == 3);
    CHECK(v.rationalPart() == Rational(3, 4));
    CHECK_FALSE(v.isZero());
    CHECK_FALSE(v.isRational());
}

TEST_CASE("arithmetic cancels exactly") {
    auto ctx = ctx3();
    FormalReal b1 = FormalReal::symbol(ctx, 1);
    FormalReal b2 = FormalReal::symbol(ctx, 2);
    CHECK((b1 + b2 - b1 - b2).isZero());
    CHECK((b1.scaled(Rational(2, 3)) + b1.scaled(Rational(1, 3))) == b1);
    CHECK((-b1) == b1.scaled(Rational(-1)));
    CHECK(FormalReal::rational(ctx, Rational(5, 7)).isRational());
    CHECK(FormalReal(ctx).isZero());
}

TEST_CASE("render is canonical and parses back") {
    auto ctx = ctx3();
    FormalReal b1 = FormalReal::symbol(ctx, 1);
    FormalReal b2 = FormalReal::symbol(ctx, 2);
    FormalReal v = b1.scaled(Rational(1, 2)) - b2 + FormalReal::rational(ctx, Rational(3, 4));
    CHECK(v.render() == "1/2*b1 - b2 + 3/4");
    CHECK(FormalReal(ctx).render() == "0");
    CHECK(FormalReal::rational(ctx, Rational(-5, 7)).render() == "-5/7");
    CHECK(parseShiftText(ctx, v.render()) == v);
    CHECK(parseShiftText(ctx, "0").isZero());
}

TEST_CASE("dense round-trip covers every coordinate") {
    auto ctx = ctx3();
    FormalReal v = FormalReal::symbol(ctx, 3, Rational(-7, 3)) +
                   FormalReal::rational(ctx, Rational(1, 9));
    std::vector<Rational> d = v.dense();
    REQUIRE(d.size() == ctx->dim());
    CHECK(d[0] == Rational(1, 9));
    CHECK(d[3] == Rational(-7, 3));
    CHECK(FormalReal::fromDense(ctx, d) == v);
}

TEST_CASE("comparison is a strict total order") {
    auto ctx = ctx3();
    std::mt19937_64 eng(42);
    auto randReal = [&] {
        FormalReal v(ctx);
        for (int i = 0; i <= 3; ++i) {
            long n = static_cast<long>(eng() % 7) - 3;
            if (n == 0) continue;
            v = v + (i == 0 ? FormalReal::rational(ctx, Rational(n, 2))
                            : FormalReal::symbol(ctx, i, Rational(n, 2)));
        }
        return v;
    };
    FormalRealLess less;
    for (int iter = 0; iter < 200; ++iter) {
        FormalReal a = randReal(), b = randReal(), c = randReal();
        CHECK((a == b) == (!less(a, b) && !less(b, a)));
        CHECK_FALSE((less(a, b) && less(b, a)));
        if (less(a, b) && less(b, c)) CHECK(less(a, c));
    }
}

TEST_CASE("contexts are checked, not assumed") {
    auto a = ctx3();
    auto b = makeBasis({"c1"});
    CHECK_THROWS_AS(requireSameContext(a, b), ContextError);
    auto a2 = makeBasis({"b1", "b2", "b3"});
    CHECK_NOTHROW(requireSameContext(a, a2)); // equal names, distinct pointers
    CHECK(a->indexOf("b2") == 2);
    CHECK(a->indexOf("nope") == 0);
    CHECK(a->name(3) == "b3");
}
