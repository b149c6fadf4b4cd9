#include "tb/farey.hpp"

#include "tb/errors.hpp"

#include <doctest.h>

#include <numeric>

#include <random>

using namespace tb;

namespace {

Slope sl(long n, long d) { return Slope(n, d); }

// Random element of the tessellation's automorphism group, as a word in
// the standard generators, for sampling Farey edges with large entries.
ProjMatrix random_pgl2(std::mt19937_64& rng, int len) {
    const ProjMatrix t{1, 1, 0, 1};   // translation x -> x + 1 (columns act)
    const ProjMatrix s{0, -1, 1, 0};  // x -> -1/x
    const ProjMatrix r0{1, 0, 0, -1}; // x -> -x
    ProjMatrix m = ProjMatrix::identity();
    std::uniform_int_distribution<int> pick(0, 2);
    for (int i = 0; i < len; ++i) {
        switch (pick(rng)) {
        case 0: m = m * t; break;
        case 1: m = m * s; break;
        default: m = m * r0; break;
        }
    }
    return m;
}

Slope random_slope(std::mt19937_64& rng, long max_abs_num, long max_den) {
    std::uniform_int_distribution<long> num(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<long> den(0, max_den);
    while (true) {
        long n = num(rng), d = den(rng);
        if (n != 0 || d != 0) {
            return Slope(n, d);
        }
    }
}

} // namespace

TEST_CASE("reflection_in_edge examples") {
    // {0, inf}: x -> -x
    ProjMatrix m = FareyEdge(sl(0, 1), Slope::infinity()).reflection();
    CHECK(m.apply(sl(3, 7)) == sl(-3, 7));
    CHECK(m.apply(Slope::infinity()) == Slope::infinity());

    // {inf, n}: x -> 2n - x
    ProjMatrix m5 = FareyEdge(Slope::infinity(), sl(5, 1)).reflection();
    CHECK(m5.apply(sl(1, 3)) == sl(29, 3));

    // {1/3, 0/1}
    ProjMatrix m13 = FareyEdge(sl(1, 3), sl(0, 1)).reflection();
    CHECK(m13.proj_equal(ProjMatrix{-1, 6, 0, 1}));
    CHECK(m13.apply(Slope::infinity()) == sl(1, 6));
    CHECK(m13.apply(sl(1, 3)) == sl(1, 3));
    CHECK(m13.apply(sl(0, 1)) == sl(0, 1));

    CHECK_THROWS_AS(FareyEdge(sl(1, 3), sl(3, 5)), error);
}

TEST_CASE("reflections are involutions fixing their edge (1000 random)") {
    std::mt19937_64 rng(20240817);
    const FareyEdge base(sl(0, 1), Slope::infinity());
    for (int i = 0; i < 1000; ++i) {
        FareyEdge e = base.transformed(random_pgl2(rng, 14));
        ProjMatrix m = e.reflection();
        CHECK(m.det() == -1);
        CHECK((m * m).is_proj_identity());
        CHECK(m.apply(e.first()) == e.first());
        CHECK(m.apply(e.second()) == e.second());
    }
}

TEST_CASE("farey_neighbors") {
    FareyFan fan13 = farey_neighbors(sl(1, 3));
    CHECK(fan13.base == sl(0, 1));
    CHECK(fan13.contains(sl(0, 1)));
    CHECK(fan13.neighbor(1) == sl(1, 4));
    CHECK(fan13.neighbor(-1) == sl(1, 2)); // (0-1)/(1-3) = 1/2

    FareyFan fan517 = farey_neighbors(sl(5, 17));
    CHECK(fan517.base == sl(2, 7));
    CHECK(fan517.contains(sl(2, 7)));

    FareyFan fan25 = farey_neighbors(sl(2, 5));
    CHECK(fan25.contains(sl(1, 2)));
    CHECK(fan25.contains(sl(1, 3)));

    // every fan element is a neighbor and exhausts the neighbors
    for (long k = -5; k <= 5; ++k) {
        CHECK(are_farey_neighbors(fan517.neighbor(k), sl(5, 17)));
    }
    CHECK_THROWS_AS(farey_neighbors(sl(4, 1)), error);
    CHECK_THROWS_AS(farey_neighbors(Slope::infinity()), error);
}

TEST_CASE("conjugator_to_infinity") {
    ProjMatrix b13 = conjugator_to_infinity(sl(1, 3));
    CHECK(b13.proj_equal(ProjMatrix{1, -3, 0, 1}));
    CHECK(b13.apply(sl(1, 3)) == Slope::infinity());
    CHECK(b13.apply(Slope::infinity()) == sl(-1, 3));

    ProjMatrix b0 = conjugator_to_infinity(sl(0, 1));
    CHECK(b0.apply(sl(0, 1)) == Slope::infinity());
    CHECK(abs(b0.det()) == 1);

    for (long p = 1; p <= 40; ++p) {
        for (long q = -p; q <= p; ++q) {
            if (std::gcd(std::abs(q), p) != 1) continue;
            Slope r(q, p);
            ProjMatrix b = conjugator_to_infinity(r);
            CHECK(b.apply(r) == Slope::infinity());
            CHECK(abs(b.det()) == 1);
            if (p >= 2) { // B(inf) is never integral when r is not
                CHECK_FALSE(b.apply(Slope::infinity()).is_integer());
            }
        }
    }
    CHECK_THROWS_AS(conjugator_to_infinity(Slope::infinity()), error);
}

TEST_CASE("fold_to_strip") {
    SUBCASE("fixed points") {
        FoldResult inf = fold_to_strip(Slope::infinity(), 3);
        CHECK(inf.result == Slope::infinity());
        CHECK(inf.word.length() == 0);
        FoldResult in = fold_to_strip(sl(1, 9), 0);
        CHECK(in.result == sl(1, 9));
        CHECK(in.word.length() == 0);
    }
    SUBCASE("worked instances") {
        FoldResult a = fold_to_strip(sl(1, 6), -1);
        CHECK(a.result == sl(-1, 6));
        CHECK(a.word.apply(sl(1, 6)) == sl(-1, 6));
        FoldResult b = fold_to_strip(sl(7, 6), -1);
        CHECK(b.result == sl(-5, 6));
        CHECK(b.word.apply(sl(7, 6)) == sl(-5, 6));
    }
    SUBCASE("boundaries stay put") {
        for (long c : {-2L, 0L, 5L}) {
            CHECK(fold_to_strip(sl(c, 1), c).word.length() == 0);
            CHECK(fold_to_strip(sl(c + 1, 1), c).word.length() == 0);
        }
    }
    SUBCASE("random: result in strip, word maps input to it") {
        std::mt19937_64 rng(7);
        for (int i = 0; i < 500; ++i) {
            Slope x = random_slope(rng, 5000, 97);
            long c = static_cast<long>(rng() % 9) - 4;
            FoldResult f = fold_to_strip(x, c);
            CHECK(f.word.apply(x) == f.result);
            if (!f.result.is_infinity()) {
                CHECK(f.result >= sl(c, 1));
                CHECK(f.result <= sl(c + 1, 1));
            }
            // reflections at infinity only
            for (const FareyEdge& e : f.word.edges) {
                CHECK(e.second() == Slope::infinity());
            }
        }
    }
}

TEST_CASE("reduce worked traces") {
    FoldResult a = reduce(sl(1, 9), sl(1, 3));
    CHECK(a.result == sl(1, 3));
    CHECK(a.word.length() == 2);
    CHECK(a.word.apply(sl(1, 9)) == sl(1, 3));

    FoldResult b = reduce(sl(2, 5), sl(1, 3));
    CHECK(b.result == sl(0, 1));

    FoldResult c = reduce(sl(3, 7), sl(3, 7));
    CHECK(c.result == sl(3, 7));
    CHECK(c.word.length() == 0);

    CHECK_THROWS_AS(reduce(sl(1, 9), sl(2, 1)), error);
}

TEST_CASE("orbit_member examples") {
    MembershipVerdict a = orbit_member(sl(1, 9), sl(1, 3));
    CHECK(a.kind == MembershipVerdict::Kind::InOrbitOfR);
    CHECK(a.word.to_matrix().apply(sl(1, 9)) == sl(1, 3));

    MembershipVerdict b = orbit_member(sl(1, 6), sl(1, 3));
    CHECK(b.kind == MembershipVerdict::Kind::InOrbitOfInfinity);
    CHECK(b.word.to_matrix().apply(sl(1, 6)) == Slope::infinity());

    MembershipVerdict c = orbit_member(sl(2, 5), sl(1, 3));
    CHECK(c.kind == MembershipVerdict::Kind::NotInOrbit);
    CHECK(c.reduced_rep == sl(0, 1));

    MembershipVerdict d = orbit_member(Slope::infinity(), sl(1, 3));
    CHECK(d.kind == MembershipVerdict::Kind::InOrbitOfInfinity);
    CHECK(d.word.length() == 0);
}

TEST_CASE("orbit_bfs") {
    std::set<Slope> depth0 = orbit_bfs(sl(1, 3), 0, 10);
    CHECK(depth0 == std::set<Slope>{sl(1, 3), Slope::infinity()});

    std::set<Slope> depth1 = orbit_bfs(sl(1, 3), 1, 10);
    for (Slope s : {sl(1, 3), sl(-1, 3), sl(1, 6)}) {
        CHECK(depth1.count(s) == 1);
    }
    CHECK(depth1.count(Slope::infinity()) == 1);

    std::set<Slope> big = orbit_bfs(sl(1, 3), 6, 500);
    for (const Slope& s : big) {
        if (!s.is_infinity()) {
            CHECK(s.den() % 3 == 0);
        }
    }
}

TEST_CASE("reduce properties (seeded random)") {
    std::mt19937_64 rng(123456);
    const Slope rs[] = {sl(1, 3), sl(2, 5), sl(3, 7), sl(2, 7), sl(5, 17)};
    for (int i = 0; i < 400; ++i) {
        const Slope& r = rs[i % 5];
        Slope x = random_slope(rng, 2000, 60);

        FoldResult red = reduce(x, r);
        CHECK(red.word.apply(x) == red.result);
        // idempotent
        FoldResult again = reduce(red.result, r);
        CHECK(again.result == red.result);
        CHECK(again.word.length() == 0);

        // invariance under a random group word
        std::vector<FareyEdge> walls = wall_edges(r);
        Slope moved = x;
        for (int j = 0, len = static_cast<int>(rng() % 7); j < len; ++j) {
            moved = walls[rng() % 4].reflection().apply(moved);
        }
        CHECK(reduce(moved, r).result == red.result);

        // translation by 2 lies in the group at infinity
        CHECK(orbit_member(x, r).positive() ==
              orbit_member(x + Int(2), r).positive());
    }
}

TEST_CASE("denominator invariant of the wall generators") {
    std::mt19937_64 rng(987);
    const Slope rs[] = {sl(1, 3), sl(2, 5), sl(5, 17)};
    for (const Slope& r : rs) {
        long p = static_cast<long>(r.den().convert_to<long>());
        for (const FareyEdge& wall : wall_edges(r)) {
            ProjMatrix g = wall.reflection();
            for (int i = 0; i < 200; ++i) {
                long mult = 1 + static_cast<long>(rng() % 12);
                long num = static_cast<long>(rng() % 400) - 200;
                if (std::gcd(std::abs(num), mult * p) == 0) continue;
                Slope x(num, mult * p);
                if (x.den() % p != 0) continue; // reduction may shrink den
                CHECK(g.apply(x).den() % p == 0);
            }
            // also infinity (denominator 0)
            CHECK(g.apply(Slope::infinity()).den() % p == 0);
        }
    }
}

TEST_CASE("orbit_bfs soundness against orbit_member (depth 4)") {
    for (Slope r : {sl(1, 3), sl(2, 5)}) {
        for (const Slope& x : orbit_bfs(r, 4, 300)) {
            MembershipVerdict v = orbit_member(x, r);
            CHECK(v.positive());
            Slope image = v.word.to_matrix().apply(x);
            CHECK((image == r || image.is_infinity()));
        }
    }
}
