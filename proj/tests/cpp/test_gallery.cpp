#include "diffsys/error.hpp"
#include "diffsys/gallery.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace diffsys;

namespace {

bool hasParameter(const GalleryReport& rep, const std::string& key, const std::string& value) {
    for (const auto& [k, v] : rep.parameters)
        if (k == key && v == value) return true;
    return false;
}

} // namespace

TEST_CASE("the gallery catalogue is fixed") {
    std::vector<std::string> expected = {"increment-loop", "supnorm-loop", "unbounded-growth",
                                         "periodicity",    "trig-escape",  "point-indicator",
                                         "poly-pair",      "sign-set"};
    CHECK(galleryNames() == expected);
}

TEST_CASE("every catalogue entry passes at small parameters") {
    std::map<std::string, std::map<std::string, std::string>> runs = {
        {"increment-loop", {{"n", "3"}, {"radius", "3"}}},
        {"supnorm-loop", {{"n", "3"}, {"radius", "2"}}},
        {"unbounded-growth", {{"n", "3"}, {"radius", "3"}}},
        {"periodicity", {{"k", "3"}}},
        {"trig-escape", {{"n", "2"}, {"samples", "20000"}}},
        {"point-indicator", {{"rank", "2"}, {"radius", "2"}}},
        {"poly-pair", {}},
        {"sign-set", {{"k", "4"}, {"trials", "200"}, {"seed", "7"}}},
    };
    for (const auto& [name, params] : runs) {
        CAPTURE(name);
        GalleryReport rep = runGallery(name, params);
        CHECK(rep.name == name);
        REQUIRE_FALSE(rep.claims.empty());
        for (const auto& c : rep.claims) {
            CAPTURE(c.description);
            CAPTURE(c.evidence);
            CHECK(c.verdict == GalleryClaim::Verdict::Pass);
        }
        for (const auto& [k, v] : params) CHECK(hasParameter(rep, k, v));
    }
}

TEST_CASE("unknown names and malformed parameters are rejected") {
    CHECK_THROWS_AS(runGallery("no-such-construction", {}), Error);
    CHECK_THROWS_AS(runGallery("increment-loop", {{"n", "abc"}}), Error);
    CHECK_THROWS_AS(runGallery("increment-loop", {{"n", "1"}}), Error);
    CHECK_THROWS_AS(runGallery("increment-loop", {{"trials", "5"}}), Error);
    CHECK_THROWS_AS(runGallery("poly-pair", {{"n", "3"}}), Error);
}

TEST_CASE("homogeneous family: each function solves every equation except its own") {
    PeriodicityFamily fam = buildPeriodicityFamily(3);
    REQUIRE(fam.shifts.size() == 3);
    REQUIRE(fam.functions.size() == 3);
    REQUIRE(fam.system.size() == 3);
    for (size_t i = 0; i < 3; ++i) {
        for (size_t j = 0; j < 3; ++j) {
            SymbolicFunction residual =
                applyOperator(fam.system.equations()[j].op, fam.functions[i]);
            if (i == j) {
                REQUIRE_FALSE(zeroTest(residual));
                auto witness = findNonzeroPoint(residual);
                REQUIRE(witness.has_value());
                EvalValue v = evaluate(residual, *witness);
                REQUIRE(v.exact);
                CHECK(v.r != 0);
            } else {
                CHECK(zeroTest(residual));
            }
        }
    }
}

TEST_CASE("growth chain: prefix telescoping reaches any target increment") {
    const int n = 3;
    EquationSystem S = buildUnboundedSystem(n);
    BasisPtr ctx = S.context();
    FormalReal zero(ctx);

    FormalReal prefix(ctx);
    std::vector<std::pair<DifferenceOperator, int>> entries;
    for (int i = 0; i < n; ++i) {
        entries.push_back({DifferenceOperator::translation(prefix), i});
        prefix = prefix + FormalReal::symbol(ctx, i + 1);
    }
    auto [op, rhs] = deduce(S, entries);
    CHECK(op == DifferenceOperator::translation(prefix) -
                    DifferenceOperator::translation(zero));
    CHECK(rhsValueAt(rhs, zero) == n);
}

TEST_CASE("dyadic cosine chain structure") {
    TrigEscapeResult r = buildTrigEscapeSystem(2, 20000);
    REQUIRE(r.coeffs.size() == 2);
    REQUIRE(r.rhs.size() == 2);
    REQUIRE(r.system.size() == 2);
    CHECK(r.coeffs[0] == Rational(1));
    CHECK(r.coeffs[1] >= Rational(1));
    CHECK(r.report.allPass());
    CHECK(hasParameter(r.report, "samples", "20000"));

    // The partial sum of the scaled cosines solves both levels exactly.
    std::vector<std::pair<Rational, SymbolicFunction>> parts;
    for (int j = 0; j < 2; ++j)
        parts.push_back({r.coeffs[static_cast<size_t>(j)],
                         SymbolicFunction::cosTwoPi(r.ctx, Rational(Int(1) << j))});
    SymbolicFunction prefixSum = SymbolicFunction::linComb(r.ctx, parts);
    for (int m = 1; m <= 2; ++m) {
        FormalReal shift = FormalReal::rational(r.ctx, Rational(1, Int(1) << m));
        SymbolicFunction img = applyOperator(DifferenceOperator::delta(shift), prefixSum);
        CHECK(zeroTest(img - r.rhs[static_cast<size_t>(m - 1)]));
    }

    // Differencing by 2^-m kills cos(2 pi 2^j x) exactly when j >= m.
    for (int m = 1; m <= 2; ++m)
        for (int j = 0; j <= 3; ++j) {
            FormalReal shift = FormalReal::rational(r.ctx, Rational(1, Int(1) << m));
            SymbolicFunction img = applyOperator(DifferenceOperator::delta(shift),
                                                 SymbolicFunction::cosTwoPi(r.ctx,
                                                                            Rational(Int(1) << j)));
            CHECK(zeroTest(img) == (j >= m));
        }
}

TEST_CASE("sign classification by the highest symbol") {
    BSetContext ctx{makeBasis({"s1", "s2", "s3"})};
    FormalReal s1 = FormalReal::symbol(ctx.basis, 1);
    FormalReal s2 = FormalReal::symbol(ctx.basis, 2);
    FormalReal s3 = FormalReal::symbol(ctx.basis, 3);

    CHECK(bSetPredicate(ctx, FormalReal(ctx.basis)) == BClass::Zero);
    CHECK(bSetPredicate(ctx, s2.scaled(Rational(2)) - s1) == BClass::InB);
    CHECK(bSetPredicate(ctx, s1.scaled(Rational(5)) - s3) == BClass::InMinusB);
    CHECK(bSetPredicate(ctx, s1.scaled(Rational(-1, 2))) == BClass::InMinusB);
    CHECK(bSetPredicate(ctx, -(s2.scaled(Rational(2)) - s1)) == BClass::InMinusB);
    CHECK_THROWS_AS(bSetPredicate(ctx, FormalReal::rational(ctx.basis, Rational(1))), Error);
}

TEST_CASE("sign-set trials uphold the support bound") {
    BSetContext ctx{makeBasis({"s1", "s2", "s3", "s4"})};
    FormalReal b = FormalReal::symbol(ctx.basis, 2) - FormalReal::symbol(ctx.basis, 1);
    GalleryReport rep = bSetShiftDifference(ctx, b, 500, 99);
    CHECK(rep.allPass());
    CHECK(rep.claims.size() == 3);
    CHECK(hasParameter(rep, "shift", b.render()));
    CHECK_THROWS_AS(bSetShiftDifference(ctx, FormalReal(ctx.basis), 10, 1), Error);
}

TEST_CASE("contradictory pair report") {
    GalleryReport rep = scPolynomialWitness();
    CHECK(rep.name == "poly-pair");
    REQUIRE(rep.claims.size() == 3);
    CHECK(rep.allPass());
    CHECK(rep.claims[0].evidence == "f = poly(0,1)");
    CHECK(rep.claims[1].evidence == "f = 0");
}
