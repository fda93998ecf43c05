#include "diffsys/groebner.hpp"

#include <doctest.h>

using namespace diffsys;

namespace {

MPoly mono(std::vector<int> e, const Rational& q) {
    MPoly p{e.size(), {}};
    p.add(e, q);
    return p;
}

LaurentPoly lmono(std::vector<Int> e, const Rational& q) {
    LaurentPoly p{e.size(), {}};
    p.terms[e] = q;
    return p;
}

bool isSyzygyOf(const std::vector<LaurentPoly>& row, const std::vector<LaurentPoly>& p) {
    LaurentPoly acc = LaurentPoly::zero(p[0].nvars);
    for (size_t i = 0; i < p.size(); ++i) acc = acc + row[i] * p[i];
    return acc.isZero();
}

} // namespace

TEST_CASE("polynomial container basics") {
    MPoly p = mono({1, 0}, Rational(2));
    p.add({1, 0}, Rational(-2));
    CHECK(p.isZero());
    p.add({0, 1}, Rational(1, 2));
    CHECK(p.scaled(Rational(4)) == mono({0, 1}, Rational(2)));
    CHECK(p.scaled(Rational(0)).isZero());
}

TEST_CASE("coprime pair has exactly the Koszul syzygy") {
    MPoly x = mono({1, 0}, Rational(1));
    MPoly y = mono({0, 1}, Rational(1));
    auto syz = polySyzygies({x, y}, {});
    REQUIRE(syz.size() == 1);
    CHECK(syz[0][0] == y);
    CHECK(syz[0][1] == x.scaled(Rational(-1)));
}

TEST_CASE("equal generators cancel with unit multipliers") {
    MPoly x = mono({1}, Rational(1));
    auto syz = polySyzygies({x, x}, {});
    REQUIRE(syz.size() == 1);
    CHECK(syz[0][0] == syz[0][1].scaled(Rational(-1)));
    CHECK_FALSE(syz[0][0].isZero());
}

TEST_CASE("a single nonzero generator has no syzygies") {
    MPoly x = mono({1, 1}, Rational(3));
    CHECK(polySyzygies({x}, {}).empty());
}

TEST_CASE("zero generators yield unit syzygies") {
    MPoly z = MPoly::zero(1);
    MPoly x = mono({1}, Rational(1));
    auto syz = polySyzygies({x, z}, {});
    REQUIRE(syz.size() == 1);
    CHECK(syz[0][0].isZero());
    CHECK_FALSE(syz[0][1].isZero());
}

TEST_CASE("laurent syzygies handle negative exponents") {
    // p1 = u - 1, p2 = u^-1 - 1: rows must combine to zero over the Laurent ring
    LaurentPoly p1 = lmono({Int(1)}, 1) + lmono({Int(0)}, -1);
    LaurentPoly p2 = lmono({Int(-1)}, 1) + lmono({Int(0)}, -1);
    auto syz = laurentSyzygies({p1, p2}, {});
    REQUIRE(!syz.empty());
    for (const auto& row : syz) {
        CHECK(isSyzygyOf(row, {p1, p2}));
        bool allZero = true;
        for (const auto& c : row) allZero = allZero && c.isZero();
        CHECK_FALSE(allZero);
    }
}

TEST_CASE("three-term loop relation is found") {
    // generators u-1, v-1, (uv)^-1 - 1 over two variables
    LaurentPoly g1 = lmono({Int(1), Int(0)}, 1) + lmono({Int(0), Int(0)}, -1);
    LaurentPoly g2 = lmono({Int(0), Int(1)}, 1) + lmono({Int(0), Int(0)}, -1);
    LaurentPoly g3 = lmono({Int(-1), Int(-1)}, 1) + lmono({Int(0), Int(0)}, -1);
    auto syz = laurentSyzygies({g1, g2, g3}, {});
    REQUIRE(!syz.empty());
    for (const auto& row : syz) CHECK(isSyzygyOf(row, {g1, g2, g3}));
    // the full system combines to zero with multipliers that reach every slot
    bool slotCovered[3] = {false, false, false};
    for (const auto& row : syz)
        for (size_t i = 0; i < 3; ++i)
            if (!row[i].isZero()) slotCovered[i] = true;
    CHECK(slotCovered[0]);
    CHECK(slotCovered[1]);
    CHECK(slotCovered[2]);
}
