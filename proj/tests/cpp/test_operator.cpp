#include "diffsys/dsl.hpp"
#include "diffsys/error.hpp"
#include "diffsys/operator.hpp"

#include <doctest.h>

#include <random>

using namespace diffsys;

namespace {

BasisPtr ctx2() { return makeBasis({"b1", "b2"}); }

DifferenceOperator randomOp(const BasisPtr& ctx, std::mt19937_64& eng) {
    DifferenceOperator op = DifferenceOperator::zero(ctx);
    size_t nterms = 1 + eng() % 3;
    for (size_t t = 0; t < nterms; ++t) {
        FormalReal b(ctx);
        for (int i = 1; i <= 2; ++i) {
            long c = static_cast<long>(eng() % 5) - 2;
            if (c) b = b + FormalReal::symbol(ctx, i, Rational(c));
        }
        long q = static_cast<long>(eng() % 7) - 3;
        if (q) op = op + DifferenceOperator::translation(b).scaled(Rational(q, 2));
    }
    return op;
}

} // namespace

TEST_CASE("canonical rendering of operators") {
    auto ctx = ctx2();
    FormalReal b1 = FormalReal::symbol(ctx, 1);
    DifferenceOperator op = DifferenceOperator::translation(b1).scaled(Rational(3)) -
                            DifferenceOperator::translation(FormalReal(ctx)).scaled(Rational(2));
    CHECK(op.render() == "-2*T[0] + 3*T[b1]");
    CHECK(DifferenceOperator::zero(ctx).render() == "0");
    CHECK(DifferenceOperator::delta(b1).render() == "-T[0] + T[b1]");
    CHECK(parseOperatorText(ctx, op.render()) == op);
}

TEST_CASE("delta recognition") {
    auto ctx = ctx2();
    FormalReal b1 = FormalReal::symbol(ctx, 1);
    FormalReal shift(ctx);
    CHECK(DifferenceOperator::delta(b1).isDelta(&shift));
    CHECK(shift == b1);
    CHECK(DifferenceOperator::delta(FormalReal(ctx)).isZero());
    CHECK_FALSE(DifferenceOperator::translation(b1).isDelta());
    CHECK_FALSE((DifferenceOperator::delta(b1).scaled(Rational(2))).isDelta());
}

TEST_CASE("composition expands translation products") {
    auto ctx = ctx2();
    FormalReal a = FormalReal::symbol(ctx, 1);
    FormalReal b = FormalReal::symbol(ctx, 2);
    DifferenceOperator prod = DifferenceOperator::delta(a).compose(DifferenceOperator::delta(b));
    DifferenceOperator expect =
        DifferenceOperator::translation(a + b) - DifferenceOperator::translation(a) -
        DifferenceOperator::translation(b) + DifferenceOperator::translation(FormalReal(ctx));
    CHECK(prod == expect);
}

TEST_CASE("algebraic laws hold on random operators") {
    auto ctx = ctx2();
    std::mt19937_64 eng(2025);
    for (int iter = 0; iter < 300; ++iter) {
        DifferenceOperator A = randomOp(ctx, eng);
        DifferenceOperator B = randomOp(ctx, eng);
        DifferenceOperator C = randomOp(ctx, eng);
        CHECK(A.compose(B) == B.compose(A));
        CHECK(A.compose(B).compose(C) == A.compose(B.compose(C)));
        CHECK(A.compose(B + C) == A.compose(B) + A.compose(C));
        CHECK(A.compose(B).norm() <= A.norm() * B.norm());
        CHECK((A + B).norm() <= A.norm() + B.norm());
        CHECK(DifferenceOperator::fromTerms(ctx, A.terms()) == A);
    }
}

TEST_CASE("laurent image is a ring homomorphism") {
    auto ctx = ctx2();
    FormalReal b1 = FormalReal::symbol(ctx, 1);
    FormalReal b2 = FormalReal::symbol(ctx, 2);
    Lattice L = Lattice::fromGenerators(ctx, {b1, b2});
    std::mt19937_64 eng(11);
    for (int iter = 0; iter < 100; ++iter) {
        DifferenceOperator A = randomOp(ctx, eng);
        DifferenceOperator B = randomOp(ctx, eng);
        CHECK(toLaurent(A.compose(B), L) == toLaurent(A, L) * toLaurent(B, L));
        CHECK(toLaurent(A + B, L) == toLaurent(A, L) + toLaurent(B, L));
        CHECK(laurentToOperator(toLaurent(A, L), L) == A);
    }
}

TEST_CASE("laurent image requires lattice membership") {
    auto ctx = ctx2();
    FormalReal b1 = FormalReal::symbol(ctx, 1);
    FormalReal b2 = FormalReal::symbol(ctx, 2);
    Lattice L = Lattice::fromGenerators(ctx, {b1});
    CHECK_THROWS_AS(toLaurent(DifferenceOperator::translation(b2), L), LatticeError);
}

TEST_CASE("shifts come back in canonical order") {
    auto ctx = ctx2();
    FormalReal b1 = FormalReal::symbol(ctx, 1);
    DifferenceOperator op = DifferenceOperator::translation(b1) +
                            DifferenceOperator::translation(FormalReal(ctx)).scaled(Rational(-1)) +
                            DifferenceOperator::translation(b1.scaled(2));
    auto sh = op.shifts();
    REQUIRE(sh.size() == 3);
    FormalRealLess less;
    CHECK(less(sh[0], sh[1]));
    CHECK(less(sh[1], sh[2]));
}
