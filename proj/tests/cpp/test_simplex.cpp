#include "diffsys/simplex.hpp"

#include <doctest.h>

using namespace diffsys;

namespace {

LpResult solve(size_t nvars, std::vector<std::vector<Rational>> A, std::vector<Rational> b,
               std::vector<Rational> c) {
    LpProblem p;
    p.nvars = nvars;
    p.A = std::move(A);
    p.b = std::move(b);
    p.c = std::move(c);
    return solveLp(p);
}

} // namespace

TEST_CASE("one-variable bound") {
    // minimize x subject to -x <= -1
    auto r = solve(1, {{Rational(-1)}}, {Rational(-1)}, {Rational(1)});
    REQUIRE(r.status == LpResult::Status::Optimal);
    CHECK(r.value == 1);
    CHECK(r.x == std::vector<Rational>{Rational(1)});
}

TEST_CASE("two independent bounds add") {
    auto r = solve(2, {{Rational(-1), Rational(0)}, {Rational(0), Rational(-1)}},
                   {Rational(-1), Rational(-2)}, {Rational(1), Rational(1)});
    REQUIRE(r.status == LpResult::Status::Optimal);
    CHECK(r.value == 3);
    CHECK(r.x == std::vector<Rational>{Rational(1), Rational(2)});
}

TEST_CASE("chebyshev center of two points is their midpoint gap") {
    // minimize t with |x - 1/3| <= t and |x - 1/2| <= t over free (x, t)
    auto r = solve(2,
                   {{Rational(1), Rational(-1)},
                    {Rational(-1), Rational(-1)},
                    {Rational(1), Rational(-1)},
                    {Rational(-1), Rational(-1)}},
                   {Rational(1, 3), Rational(-1, 3), Rational(1, 2), Rational(-1, 2)},
                   {Rational(0), Rational(1)});
    REQUIRE(r.status == LpResult::Status::Optimal);
    CHECK(r.value == Rational(1, 12));
    CHECK(r.x[0] == Rational(5, 12));
}

TEST_CASE("unbounded direction is reported") {
    // minimize -x subject to -x <= 0 (x >= 0, no upper bound)
    auto r = solve(1, {{Rational(-1)}}, {Rational(0)}, {Rational(-1)});
    CHECK(r.status == LpResult::Status::Unbounded);
}

TEST_CASE("infeasible rows produce a Farkas combination") {
    // x <= 0 and -x <= -1 cannot both hold
    auto r = solve(1, {{Rational(1)}, {Rational(-1)}}, {Rational(0), Rational(-1)},
                   {Rational(0)});
    REQUIRE(r.status == LpResult::Status::Infeasible);
    REQUIRE(r.farkas.size() == 2);
    Rational combo = r.farkas[0] * Rational(1) + r.farkas[1] * Rational(-1);
    Rational rhs = r.farkas[0] * Rational(0) + r.farkas[1] * Rational(-1);
    CHECK(combo == 0);
    CHECK(rhs < 0);
    CHECK(r.farkas[0] >= 0);
    CHECK(r.farkas[1] >= 0);
}

TEST_CASE("degenerate pivoting terminates with the exact optimum") {
    // classical cycling example for the naive most-negative rule; Bland's
    // rule must terminate. minimize -3/4 a + 150 b - 1/50 c + 6 d with
    // nonnegativity and the three resource rows.
    std::vector<std::vector<Rational>> A = {
        {Rational(1, 4), Rational(-60), Rational(-1, 25), Rational(9)},
        {Rational(1, 2), Rational(-90), Rational(-1, 50), Rational(3)},
        {Rational(0), Rational(0), Rational(1), Rational(0)},
        {Rational(-1), Rational(0), Rational(0), Rational(0)},
        {Rational(0), Rational(-1), Rational(0), Rational(0)},
        {Rational(0), Rational(0), Rational(-1), Rational(0)},
        {Rational(0), Rational(0), Rational(0), Rational(-1)},
    };
    std::vector<Rational> b = {Rational(0), Rational(0), Rational(1), Rational(0),
                               Rational(0), Rational(0), Rational(0)};
    std::vector<Rational> c = {Rational(-3, 4), Rational(150), Rational(-1, 50), Rational(6)};
    auto r = solve(4, A, b, c);
    REQUIRE(r.status == LpResult::Status::Optimal);
    CHECK(r.value == Rational(-1, 20));
    CHECK(r.x == std::vector<Rational>{Rational(1, 25), Rational(0), Rational(1), Rational(0)});
}

TEST_CASE("no constraints") {
    auto rz = solve(2, {}, {}, {Rational(0), Rational(0)});
    REQUIRE(rz.status == LpResult::Status::Optimal);
    CHECK(rz.value == 0);
    auto ru = solve(1, {}, {}, {Rational(1)});
    CHECK(ru.status == LpResult::Status::Unbounded);
}

TEST_CASE("identical problems give identical answers") {
    std::vector<std::vector<Rational>> A = {{Rational(1), Rational(2)},
                                            {Rational(-3), Rational(1)},
                                            {Rational(0), Rational(-1)}};
    std::vector<Rational> b = {Rational(4), Rational(5, 2), Rational(0)};
    std::vector<Rational> c = {Rational(-1), Rational(-1)};
    auto r1 = solve(2, A, b, c);
    auto r2 = solve(2, A, b, c);
    REQUIRE(r1.status == LpResult::Status::Optimal);
    CHECK(r1.value == r2.value);
    CHECK(r1.x == r2.x);
}
