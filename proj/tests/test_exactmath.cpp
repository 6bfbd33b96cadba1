#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fewdist/bounds.hpp"
#include "fewdist/interval.hpp"
#include "fewdist/linsolve.hpp"
#include "fewdist/mpreal.hpp"
#include "fewdist/quadext.hpp"
#include "fewdist/rational.hpp"
#include "fewdist/simplex.hpp"
#include "fewdist/spaces.hpp"

#include "properties.hpp"

#include <random>

using namespace fewdist;

TEST_CASE("rational basics") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-3, -6) == Rat(1, 2));
    CHECK(Rat(3, -6).den() == 2);  // canonical: positive denominator
    CHECK(Rat(3, -6).num() == -1);
    CHECK(Rat(7, 3).floor() == 2);
    CHECK(Rat(-7, 3).floor() == -3);
    CHECK(Rat(-7, 3).ceil() == -2);
    CHECK(Rat(2, 3).pow(3) == Rat(8, 27));
    CHECK(Rat::parse("-22/7")->str() == "-22/7");
    CHECK(Rat::parse(" 5 ")->str() == "5");
    CHECK(!Rat::parse("1/0"));
    CHECK(!Rat::parse("a/b"));
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("quadratic extension arithmetic") {
    QuadExt r3 = QuadExt::sqrt_of(3);
    CHECK((r3 * r3) == QuadExt(Rat(3)));
    CHECK((r3 * r3).is_rational());

    // 1 + sqrt(2) > 2, certified via sign analysis
    QuadExt x(Rat(1), Rat(1), 2);
    CHECK(x > QuadExt(Rat(2)));
    CHECK((x - QuadExt(Rat(2))).sign() == 1);
    // and 1 + sqrt(2) < 5/2
    CHECK(x < QuadExt(Rat(5, 2)));

    // perfect-square radicand collapses to a rational
    QuadExt sq(Rat(0), Rat(1), 144);
    CHECK(sq.is_rational());
    CHECK(sq.rational() == Rat(12));
    // square part absorbed into b: sqrt(8) = 2 sqrt(2)
    QuadExt r8 = QuadExt::sqrt_of(8);
    CHECK(r8.m() == 2);
    CHECK(r8.b() == Rat(2));

    // conjugate division
    QuadExt q = QuadExt(Rat(1)) / x;  // 1/(1+sqrt 2) = sqrt(2) - 1
    CHECK(q == QuadExt(Rat(-1), Rat(1), 2));

    CHECK_THROWS_AS(QuadExt(Rat(0), Rat(1), 2) + QuadExt(Rat(0), Rat(1), 3), std::domain_error);
    CHECK_THROWS_AS(QuadExt(Rat(1), Rat(1), Int(-2)), std::domain_error);
    CHECK_THROWS_AS(QuadExt(Rat(1)) / QuadExt(Rat(0)), std::domain_error);

    // integrality: integer iff b = 0 and a integral
    CHECK(QuadExt(Rat(4)).is_integer());
    CHECK(!QuadExt(Rat(1, 2)).is_integer());
    CHECK(!QuadExt(Rat(1), Rat(1), 2).is_integer());
}

TEST_CASE("quadext parse/str round-trip") {
    for (const char* txt : {"1/2", "-3", "√5", "-√5", "1+√2", "1/2-3/4√6",
                            "-2/7+√3"}) {
        auto v = QuadExt::parse(txt);
        REQUIRE(v);
        auto w = QuadExt::parse(v->str());
        REQUIRE(w);
        CHECK(*v == *w);
    }
    CHECK(*QuadExt::parse("2sqrt3") == QuadExt(Rat(0), Rat(2), 3));
    CHECK(!QuadExt::parse("sqrt-4"));
    CHECK(!QuadExt::parse(""));
}

TEST_CASE("field axioms on random values") {
    std::mt19937_64 rng(42);
    auto rrat = [&] {
        return Rat(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 12));
    };
    for (int i = 0; i < 1000; ++i) {
        Rat a = rrat(), b = rrat(), c = rrat();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
    }
    for (int i = 0; i < 1000; ++i) {
        QuadExt a(rrat(), rrat(), 5), b(rrat(), rrat(), 5), c(rrat(), rrat(), 5);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("comparison is a total order") {
    std::mt19937_64 rng(43);
    auto rq = [&] {
        return QuadExt(Rat(static_cast<long>(rng() % 21) - 10, 1 + rng() % 6),
                       Rat(static_cast<long>(rng() % 21) - 10, 1 + rng() % 6), 7);
    };
    for (int i = 0; i < 500; ++i) {
        QuadExt a = rq(), b = rq(), c = rq();
        if (a <= b && b <= a) CHECK(a == b);  // antisymmetry
        if (a <= b && b <= c) CHECK(a <= c);  // transitivity
        CHECK((a <= b || b <= a));            // totality
    }
}

TEST_CASE("floor of quadratic-field values") {
    CHECK(floor_of(QuadExt(Rat(1), Rat(1), 2)) == 2);    // 2.414...
    CHECK(floor_of(QuadExt(Rat(0), Rat(-1), 2)) == -2);  // -1.414...
    CHECK(floor_of(QuadExt(Rat(7, 2))) == 3);
    CHECK(floor_of(QuadExt(Rat(-1), Rat(2), 9)) == 5);  // rational: -1+2*3
}

TEST_CASE("solve_linear") {
    Matrix<Rat> I = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    auto x = solve_linear(I, std::vector<Rat>{Rat(3), Rat(4)});
    CHECK(x[0] == Rat(3));
    CHECK(x[1] == Rat(4));
    Matrix<Rat> A = {{Rat(1), Rat(0)}, {Rat(1), Rat(1)}};
    x = solve_linear(A, std::vector<Rat>{Rat(1), Rat(2)});
    CHECK(x[0] == Rat(1));
    CHECK(x[1] == Rat(1));
    Matrix<Rat> S = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK_THROWS_AS(solve_linear(S, std::vector<Rat>{Rat(1), Rat(1)}), std::domain_error);
}

TEST_CASE("change-of-basis system for the S^7 annihilator") {
    // f(t) = (4/3) t^3 - t/3 expanded against the monomial coefficients of
    // Phi_0..Phi_3 on sphere:8 gives (0, 1/15, 0, 112/120)
    Space sp = Space::sphere(8);
    Matrix<Rat> A(4, std::vector<Rat>(4, Rat(0)));
    for (int k = 0; k <= 3; ++k) {
        auto col = zonal_monomial_coeffs(sp, k);
        for (int r = 0; r <= k; ++r) A[r][k] = col[r];
    }
    std::vector<Rat> rhs = {Rat(0), Rat(-1, 3), Rat(0), Rat(4, 3)};
    auto f = solve_linear(A, rhs);
    CHECK(f[0] == Rat(0));
    CHECK(f[1] == Rat(1, 15));
    CHECK(f[2] == Rat(0));
    CHECK(f[3] == Rat(112, 120));
}

TEST_CASE("simplex on tiny problems") {
    {  // max x st x <= 3
        LpProblem<Rat> p;
        p.maximize = true;
        p.objective = {Rat(1)};
        p.rows.push_back({{Rat(1)}, Rel::le, Rat(3)});
        auto s = lp_solve(p);
        REQUIRE(s.status == LpStatus::optimal);
        CHECK(s.objective == Rat(3));
        CHECK(s.x[0] == Rat(3));
    }
    {  // max x+y st x+y <= 1
        LpProblem<Rat> p;
        p.maximize = true;
        p.objective = {Rat(1), Rat(1)};
        p.rows.push_back({{Rat(1), Rat(1)}, Rel::le, Rat(1)});
        auto s = lp_solve(p);
        REQUIRE(s.status == LpStatus::optimal);
        CHECK(s.objective == Rat(1));
    }
    {  // infeasible: x <= -1, x >= 0
        LpProblem<Rat> p;
        p.maximize = true;
        p.objective = {Rat(1)};
        p.rows.push_back({{Rat(1)}, Rel::le, Rat(-1)});
        CHECK(lp_solve(p).status == LpStatus::infeasible);
    }
    {  // unbounded: max x st x >= 1
        LpProblem<Rat> p;
        p.maximize = true;
        p.objective = {Rat(1)};
        p.rows.push_back({{Rat(1)}, Rel::ge, Rat(1)});
        CHECK(lp_solve(p).status == LpStatus::unbounded);
    }
    {  // equality row with free variables: min y st y - x = 2, x >= -3
        LpProblem<Rat> p;
        p.maximize = false;
        p.objective = {Rat(0), Rat(1)};
        p.rows.push_back({{Rat(-1), Rat(1)}, Rel::eq, Rat(2)});
        p.rows.push_back({{Rat(1), Rat(0)}, Rel::ge, Rat(-3)});
        p.free_vars = {true, true};
        auto s = lp_solve(p);
        REQUIRE(s.status == LpStatus::optimal);
        CHECK(s.objective == Rat(-1));  // x = -3, y = -1
    }
}

TEST_CASE("simplex handles the classic cycling instance") {
    // Beale's example: cycles under the most-negative rule, terminates with
    // Bland's rule
    LpProblem<Rat> p;
    p.maximize = true;
    p.objective = {Rat(3, 4), Rat(-150), Rat(1, 50), Rat(-6)};
    p.rows.push_back({{Rat(1, 4), Rat(-60), Rat(-1, 25), Rat(9)}, Rel::le, Rat(0)});
    p.rows.push_back({{Rat(1, 2), Rat(-90), Rat(-1, 50), Rat(3)}, Rel::le, Rat(0)});
    p.rows.push_back({{Rat(0), Rat(0), Rat(1), Rat(0)}, Rel::le, Rat(1)});
    auto s = lp_solve(p);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective == Rat(1, 20));
}

TEST_CASE("simplex over a quadratic field") {
    // max x st sqrt(2) x <= 2  ->  x = sqrt(2)
    LpProblem<QuadExt> p;
    p.maximize = true;
    p.objective = {QuadExt(Rat(1))};
    p.rows.push_back({{QuadExt::sqrt_of(2)}, Rel::le, QuadExt(Rat(2))});
    auto s = lp_solve(p);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective == QuadExt::sqrt_of(2));
}

TEST_CASE("LP duality on random instances") {
    std::string why;
    CHECK_MESSAGE(props::lp_primal_dual_agreement(why, 100), why);
}

TEST_CASE("mpfr wrapper basics") {
    Real::PrecisionGuard guard(128);
    Real x{Rat(1, 3)};
    // dyadic round-trip is exact for representable values
    Real half{Rat(1, 2)};
    CHECK(half.to_rat_exact() == Rat(1, 2));
    CHECK(Real::pow2(-3).to_rat_exact() == Rat(1, 8));
    CHECK(x < half);
    CHECK((x * Real(3L) - Real(1L)).abs() < Real::pow2(-120));
    CHECK(Real(Rat(-7, 2)).sign() == -1);
    CHECK(Real(0L).is_zero());
    CHECK(Real(Rat(4)).sqrt() == Real(2L));
}

TEST_CASE("outward-rounded intervals enclose exact results") {
    Real::PrecisionGuard guard(64);  // coarse precision makes rounding visible
    Interval third{Rat(1, 3)};
    CHECK(third.lower() < third.upper());  // 1/3 is not dyadic
    // [1/3] * [1/3] must contain 1/9
    Interval ninth = third * third;
    Real lo = ninth.lower(), hi = ninth.upper();
    Real exact_ninth{Rat(1, 9)};
    CHECK(lo <= exact_ninth);
    CHECK(exact_ninth <= hi);
    // mixed-sign product: [-2,3] * [5,7] = [-14, 21]
    Interval a(Real(-2L), Real(3L)), b(Real(5L), Real(7L));
    Interval p = a * b;
    CHECK(p.lower() <= Real(-14L));
    CHECK(p.upper() >= Real(21L));
    CHECK(p.contains_zero());
    // upper_at_most uses a downward-rounded comparison point
    Interval c{Rat(-1, 3)};
    CHECK(c.upper_at_most(Rat(-1, 3)) == false);  // upper end rounds up
    CHECK(c.upper_at_most(Rat(-1, 4)));
    // padding
    Interval padded = Interval::pad(Real(1L), Real(Rat(1, 100)));
    CHECK(padded.lower() <= Real(Rat(99, 100)));
    CHECK(padded.upper() >= Real(Rat(101, 100)));
}
