#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fewdist/lrs.hpp"

#include "properties.hpp"

using namespace fewdist;

TEST_CASE("n_of") {
    CHECK(n_of(Space::sphere(8), 3) == 44);
    CHECK(n_of(Space::sphere(8), 4) == 156);
    CHECK(n_of(Space::hamming(17), 1) == 1);
    CHECK(n_of(Space::sphere(23), 3) == 299);  // 1 + 23 + 275
}

TEST_CASE("lrs ceiling") {
    CHECK(lrs_ceiling(Int(44)) == 5);
    CHECK(lrs_ceiling(Int(2)) == 2);
    CHECK(lrs_ceiling(Int(156)) == 9);
    CHECK_THROWS_AS(lrs_ceiling(Int(1)), std::invalid_argument);
}

TEST_CASE("lrs ceiling is the exact floor for N up to 1e6") {
    // floor(1/2 + sqrt(N^2/(2N-2) + 1/4)) means the largest t with
    // (2t-1)^2 (2N-2) <= 4 N^2 + (2N-2); verified in integer arithmetic
    for (long N = 2; N <= 1000000; ++N) {
        long t = static_cast<long>(to_int64(lrs_ceiling(Int(N))));
        __int128 scale = 2 * static_cast<__int128>(N) - 2;
        __int128 rhs = 4 * static_cast<__int128>(N) * N + scale;
        __int128 lo = (2 * static_cast<__int128>(t) - 1);
        __int128 hi = (2 * static_cast<__int128>(t) + 1);
        bool ok = lo * lo * scale <= rhs && hi * hi * scale > rhs;
        if (!ok) {
            CAPTURE(N);
            CAPTURE(t);
            REQUIRE(ok);
        }
    }
    CHECK(true);
}

TEST_CASE("k_vector examples") {
    {
        DistanceSet<Rat> D(Space::sphere(22), {Rat(-1, 3), Rat(0), Rat(1, 3)});
        auto kv = k_vector(D);
        CHECK(kv.values[0] == Rat(3));
        CHECK(kv.values[1] == Rat(-8));
        CHECK(kv.values[2] == Rat(6));
        CHECK(kv.all_integer);
        Rat sum(0);
        for (auto& k : kv.values) sum += k;
        CHECK(sum == Rat(1));
    }
    {
        DistanceSet<Rat> D(Space::sphere(8), {Rat(-1, 2), Rat(0), Rat(1, 2)});
        auto kv = k_vector(D);
        CHECK(kv.values[0] == Rat(1));
        CHECK(kv.values[1] == Rat(-3));
        CHECK(kv.values[2] == Rat(3));
        CHECK(kv.all_integer);
        CHECK(kv.within_ceiling);  // ceiling(N=44) = 5
    }
    {
        DistanceSet<Rat> D(Space::hamming(8), {Rat(2), Rat(4)});
        auto kv = k_vector(D);
        CHECK(kv.values[0] == Rat(2));
        CHECK(kv.values[1] == Rat(-1));
        // j=1 identity: 2*2 + 4*(-1) = 0 = tau0
        CHECK(Rat(2) * kv.values[0] + Rat(4) * kv.values[1] == Rat(0));
    }
}

TEST_CASE("check_power_sums") {
    DistanceSet<Rat> D(Space::sphere(8), {Rat(-1, 2), Rat(0), Rat(1, 2)});
    auto kv = k_vector(D);
    CHECK(check_power_sums(D, kv));
    // j=2 by hand: 1/4*1 + 0 + 1/4*3 = 1 = tau0^2
    Rat j2 = Rat(1, 4) * kv.values[0] + Rat(0) + Rat(1, 4) * kv.values[2];
    CHECK(j2 == Rat(1));
    // perturbed K fails (sum = 2 != 1)
    KVector<Rat> bad = kv;
    bad.values[2] = Rat(4);
    CHECK(!check_power_sums(D, bad));
}

TEST_CASE("solve_s2") {
    CHECK(solve_s2(Int(2), Int(-1), Rat(4), Rat(0)) == Rat(2));
    CHECK(solve_s2(Int(-1), Int(2), Rat(1, 2), Rat(1)) == Rat(0));
    // K1 = 1, K2 = 0 gives d1 = tau0 (degenerate, filtered by the caller)
    CHECK(solve_s2(Int(1), Int(0), Rat(1, 3), Rat(1)) == Rat(1));
    CHECK_THROWS_AS(solve_s2(Int(0), Int(1), Rat(1, 2), Rat(1)), std::domain_error);
}

TEST_CASE("solve_s3 on the S^21 and S^7 triples") {
    {
        auto [d1, d2] = solve_s3({Int(3), Int(-8), Int(6)}, Rat(1, 3), Rat(1));
        CHECK(d1 == QuadExt(Rat(-1, 3)));
        CHECK(d2 == QuadExt(Rat(0)));
        // radicand -3*(-8)*6 = 144 is a perfect square: rational roots
        CHECK(d1.is_rational());
    }
    {
        auto [d1, d2] = solve_s3({Int(1), Int(-3), Int(3)}, Rat(1, 2), Rat(1));
        CHECK(d1 == QuadExt(Rat(-1, 2)));
        CHECK(d2 == QuadExt(Rat(0)));
    }
    // errors
    CHECK_THROWS_AS(solve_s3({Int(1), Int(1), Int(1)}, Rat(1, 2), Rat(1)), std::domain_error);
    CHECK_THROWS_AS(solve_s3({Int(2), Int(-2), Int(1)}, Rat(1, 2), Rat(1)), std::domain_error);
    // K1 + K2 = 0 companion with K3 = 1: roots are rational
    auto pr = solve_s3_k1k2_opposite(Int(2), Rat(1, 2), Int(1), Rat(1));
    std::vector<Rat> triple{pr.first, pr.second, Rat(1, 2)};
    std::sort(triple.begin(), triple.end());
    DistanceSet<Rat> D(Space::sphere(9), triple);
    auto kv = k_vector(D);
    CHECK(kv.all_integer);
    CHECK(check_power_sums(D, kv));
}

TEST_CASE("solve_s3 round-trip recovers K") {
    std::string why;
    CHECK_MESSAGE(props::solve_s3_roundtrip(why, 500), why);
}

TEST_CASE("monotone |K1| < |K2|") {
    {
        DistanceSet<Rat> D(Space::sphere(8), {Rat(0), Rat(1, 2)});
        CHECK(monotone_k_property(D));  // K = (-1, 2)
    }
    {
        DistanceSet<Rat> D(Space::hamming(8), {Rat(2), Rat(4)});
        CHECK(monotone_k_property(D));  // K = (2, -1), farthest-from-0 is 4
    }
    {
        DistanceSet<Rat> D(Space::sphere(8), {Rat(1, 4)});
        CHECK_THROWS_AS(monotone_k_property(D), std::domain_error);
    }
    std::string why;
    CHECK_MESSAGE(props::monotone_k_sampling(why, 500), why);
}

TEST_CASE("solve_s4_numeric recovers the S^7 four-distance set") {
    // K aligned with sorted D = (-1, -1/2, 0, 1/2) is (-1, 4, -6, 4)
    S4Config cfg;
    Real::PrecisionGuard guard(cfg.precision_bits);
    Real d4{Rat(1, 2)};
    auto sols = solve_s4_numeric({Int(-1), Int(4), Int(-6), Int(4)}, d4, Rat(1), cfg);
    REQUIRE(!sols.empty());
    bool found = false;
    Real tol(1e-25);
    for (const auto& s : sols) {
        if ((s[0] - Real(Rat(-1))).abs() < tol && (s[1] - Real(Rat(-1, 2))).abs() < tol &&
            (s[2] - Real(Rat(0))).abs() < tol)
            found = true;
        // every returned solution satisfies the residual bound
        for (int j = 1; j <= 3; ++j) {
            Real acc(0);
            std::array<Int, 4> K{Int(-1), Int(4), Int(-6), Int(4)};
            for (int i = 0; i < 3; ++i) {
                Real p(1);
                for (int e = 0; e < j; ++e) p = p * s[i];
                acc += Real(K[i]) * p;
            }
            Real p4(1);
            for (int e = 0; e < j; ++e) p4 = p4 * d4;
            acc += Real(K[3]) * p4;
            Real target(1);
            CHECK((acc - target).abs() < Real(1e-29));
        }
    }
    CHECK(found);
}

TEST_CASE("solve_s4_numeric with K4 = 0 matches the s=3 closed form") {
    // with K4 = 0 the system decouples from d4; its solutions are triples
    // (d1,d2,d3) where the s=3 closed form on (K1,K2 | K3, d3) returns (d1,d2)
    std::array<Int, 4> K{Int(1), Int(3), Int(-3), Int(0)};
    S4Config cfg;
    Real::PrecisionGuard guard(cfg.precision_bits);
    auto sols = solve_s4_numeric(K, Real(Rat(1, 2)), Rat(1), cfg);
    Real tol(1e-25);
    REQUIRE(!sols.empty());
    auto qval = [](const QuadExt& q) {
        Real a{q.a()};
        Real b{q.b()};
        Real m{Rat(q.m())};
        return a + b * m.sqrt();
    };
    for (const auto& s : sols) {
        // fix d3 at its exact dyadic value and re-solve the j=1,2 subsystem
        // in closed form; the numeric (d1,d2) must be one of the two root
        // pairs (the principal branch for (K1,K2) or for (K2,K1))
        Rat d3 = s[2].to_rat_exact();
        bool match = false;
        for (auto [ka, kb] : {std::pair{K[0], K[1]}, {K[1], K[0]}}) {
            std::pair<QuadExt, QuadExt> roots;
            try {
                roots = solve_s3({ka, kb, K[2]}, d3, Rat(1));
            } catch (const std::domain_error&) {
                continue;
            }
            Real lo = qval(roots.first), hi = qval(roots.second);
            if (((lo - s[0]).abs() < tol && (hi - s[1]).abs() < tol) ||
                ((lo - s[1]).abs() < tol && (hi - s[0]).abs() < tol))
                match = true;
        }
        CHECK(match);
    }
}

TEST_CASE("solve_s4_numeric returns empty for an unsolvable system") {
    // K = (-4, 2, 2, 1) at d4 = 1/4 has no real solution: the j=3 residual
    // along the real locus of the j=1,2 subsystem never changes sign
    // (checked by a dense scan well beyond the distance domain)
    S4Config cfg;
    Real::PrecisionGuard guard(cfg.precision_bits);
    auto sols = solve_s4_numeric({Int(-4), Int(2), Int(2), Int(1)}, Real(Rat(1, 4)), Rat(1), cfg);
    CHECK(sols.empty());
}
