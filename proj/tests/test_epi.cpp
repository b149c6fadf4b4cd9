#include "tb/epi.hpp"

#include "tb/errors.hpp"

#include <doctest.h>

#include <numeric>

using namespace tb;

namespace {

Slope sl(long n, long d) { return Slope(n, d); }

std::vector<Slope> knot_slopes(long max_p, bool hyperbolic_only = false) {
    std::vector<Slope> out;
    for (long p = 3; p <= max_p; p += 2) {
        for (long q = 1; q < p; ++q) {
            if (std::gcd(q, p) != 1) continue;
            if (hyperbolic_only && (q == 1 || q == p - 1)) continue;
            out.emplace_back(q, p);
        }
    }
    return out;
}

} // namespace

TEST_CASE("epi_exists worked examples") {
    EpiVerdict a = epi_exists(sl(1, 9), sl(1, 3));
    CHECK(a.exists);
    CHECK(a.clause == EpiVerdict::Clause::C1_r);
    REQUIRE(a.witness.has_value());
    CHECK(a.witness->length() == 2);
    Slope image = a.witness->to_matrix().apply(sl(1, 9));
    CHECK((image == sl(1, 3) || image.is_infinity()));

    EpiVerdict b = epi_exists(sl(2, 5), sl(1, 3));
    CHECK_FALSE(b.exists);
    REQUIRE(b.obstruction.has_value());
    CHECK(b.obstruction->find("5") != std::string::npos);

    EpiVerdict c = epi_exists(sl(3, 7), sl(3, 7));
    CHECK(c.exists);
    CHECK(c.clause == EpiVerdict::Clause::C1_r);
    CHECK(c.witness->length() == 0);
}

TEST_CASE("epi_exists edge cases") {
    // trivial-knot target accepts everything
    EpiVerdict t = epi_exists(sl(4, 9), sl(3, 1));
    CHECK(t.exists);
    CHECK(t.clause == EpiVerdict::Clause::TrivialTarget);

    // integral source onto a nontrivial target has no epimorphism
    CHECK_FALSE(epi_exists(sl(2, 1), sl(1, 3)).exists);

    CHECK_THROWS_AS(epi_exists(sl(3, 8), sl(1, 3)), error); // link source
    CHECK_THROWS_AS(epi_exists(sl(1, 9), sl(3, 8)), error); // link target
    CHECK_THROWS_AS(epi_exists(Slope::infinity(), sl(1, 3)), error);
}

TEST_CASE("epi_exists finds the inverse clause") {
    // 18/7 reduces to 4/7 = r' for r = 2/7, while neither 18/7 nor 25/7
    // reduces to 2/7 or infinity.
    EpiVerdict v = epi_exists(sl(18, 7), sl(2, 7));
    CHECK(v.exists);
    CHECK(v.clause == EpiVerdict::Clause::C2_r);
    CHECK(v.witness->to_matrix().apply(sl(18, 7)) == sl(4, 7));
}

TEST_CASE("ors_orbit_condition") {
    OrbitCondition a = ors_orbit_condition(sl(1, 6), sl(1, 3));
    CHECK(a.holds);
    CHECK(a.witness->to_matrix().apply(sl(1, 6)).is_infinity());

    OrbitCondition b = ors_orbit_condition(sl(11, 30), sl(2, 5));
    CHECK(b.holds);

    CHECK_FALSE(ors_orbit_condition(sl(1, 2), sl(1, 3)).holds);
    CHECK_THROWS_AS(ors_orbit_condition(sl(1, 6), sl(2, 1)), error);
}

TEST_CASE("epi invariances (p~ <= 40, p in {3,5,7})") {
    for (long p : {3L, 5L, 7L}) {
        Slope r(1, p);
        for (const Slope& rt : knot_slopes(40)) {
            bool base = epi_exists(rt, r).exists;
            CHECK(epi_exists(rt + Int(1), r).exists == base);
            CHECK(epi_exists(Slope(rt.den() - rt.num(), rt.den()), r).exists ==
                  base);
            CHECK(epi_exists(inverse_slope(rt), r).exists == base);
            if (base) {
                CHECK(rt.den() % p == 0);
            }
        }
    }
}

TEST_CASE("riley_presentation") {
    Presentation trefoil = riley_presentation(sl(1, 3));
    CHECK(trefoil.str() == "<a,b | abaBAB>");
    CHECK(trefoil.relator_length() == 6);

    Presentation hopf = riley_presentation(sl(1, 2));
    CHECK(hopf.str() == "<a,b | abAB>");

    Presentation fig8 = riley_presentation(sl(2, 5));
    CHECK(fig8.relator_length() == 10);
    // w = b a B A: relator a (baBA) B (abAB)
    CHECK(fig8.str() == "<a,b | abaBABabAB>");

    for (const Slope& r : knot_slopes(25)) {
        Presentation pres = riley_presentation(r);
        CHECK(pres.relator_length() == 2 * r.den().convert_to<std::size_t>());
        // abelianized relator is trivial: exponent sums are opposite
        long sum_a = 0, sum_b = 0;
        for (int letter : pres.relator) {
            if (letter == 1) ++sum_a;
            if (letter == -1) --sum_a;
            if (letter == 2) ++sum_b;
            if (letter == -2) --sum_b;
        }
        CHECK(sum_a == -sum_b);
        CHECK(sum_a == 1);
    }
    CHECK_THROWS_AS(riley_presentation(sl(3, 1)), error);
}

TEST_CASE("group tables satisfy the laws") {
    for (const FiniteGroupTable& g : FiniteGroupTable::builtins()) {
        CHECK(g.order() >= 2);
        CHECK(g.mul(g.identity(), 1 % g.order()) == 1 % g.order());
        for (int x = 0; x < g.order(); ++x) {
            CHECK(g.mul(x, g.inv(x)) == g.identity());
        }
    }
    CHECK(FiniteGroupTable::cyclic(6).order() == 6);
    CHECK(FiniteGroupTable::dihedral(5).order() == 10);
    CHECK(FiniteGroupTable::symmetric(4).order() == 24);
    CHECK(FiniteGroupTable::alternating4().order() == 12);
    CHECK(FiniteGroupTable::quaternion8().order() == 8);
    // Q8 is nonabelian with a unique element of order 2
    FiniteGroupTable q8 = FiniteGroupTable::quaternion8();
    int order2 = 0;
    bool abelian = true;
    for (int x = 0; x < 8; ++x) {
        if (x != q8.identity() && q8.mul(x, x) == q8.identity()) ++order2;
        for (int y = 0; y < 8; ++y) {
            abelian = abelian && q8.mul(x, y) == q8.mul(y, x);
        }
    }
    CHECK(order2 == 1);
    CHECK_FALSE(abelian);
}

TEST_CASE("hom_count examples") {
    Presentation trefoil = riley_presentation(sl(1, 3));
    CHECK(hom_count(trefoil, FiniteGroupTable::cyclic(6)) == 6);
    CHECK(hom_count(trefoil, FiniteGroupTable::symmetric(3)) == 12);

    // knot groups abelianize to Z: exactly n homs to Z/n
    for (const Slope& r : knot_slopes(15)) {
        for (int n = 2; n <= 6; ++n) {
            CHECK(hom_count(riley_presentation(r), FiniteGroupTable::cyclic(n)) ==
                  n);
        }
    }
}

TEST_CASE("dihedral witness: reflections satisfy the relator (p <= 40)") {
    for (const Slope& r : knot_slopes(40)) {
        int p = static_cast<int>(r.den().convert_to<long>());
        FiniteGroupTable dp = FiniteGroupTable::dihedral(p);
        Presentation pres = riley_presentation(r);
        // reflections are the odd-encoded elements 2i+1
        bool found = false;
        for (int i = 0; i < p && !found; ++i) {
            for (int j = 0; j < p && !found; ++j) {
                int x = 2 * i + 1, y = 2 * j + 1;
                if (x == y) continue;
                int images[5] = {dp.inv(y), dp.inv(x), 0, x, y};
                int acc = dp.identity();
                for (int letter : pres.relator) {
                    acc = dp.mul(acc, images[2 + letter]);
                }
                if (acc != dp.identity()) continue;
                // product must be a rotation generating Z/p
                int prod = dp.mul(x, y);
                int rot = prod / 2;
                found = prod % 2 == 0 && std::gcd(rot, p) == 1;
            }
        }
        CHECK(found);
    }
}

TEST_CASE("epi_consistency_check") {
    std::vector<FiniteGroupTable> s3{FiniteGroupTable::symmetric(3)};
    ConsistencyReport a = epi_consistency_check(sl(1, 9), sl(1, 3), s3);
    CHECK(a.verdict.exists);
    CHECK(a.ok);
    REQUIRE(a.entries.size() == 1);
    CHECK(a.entries[0].count_target == 12);
    CHECK(a.entries[0].count_source >= 12);

    ConsistencyReport b = epi_consistency_check(
        sl(1, 3), sl(1, 3), FiniteGroupTable::builtins());
    CHECK(b.ok);
    for (const ConsistencyEntry& e : b.entries) {
        CHECK(e.count_source == e.count_target);
    }

    std::vector<FiniteGroupTable> z5{FiniteGroupTable::cyclic(5)};
    ConsistencyReport c = epi_consistency_check(sl(1, 9), sl(1, 3), z5);
    CHECK(c.ok);
    CHECK(c.entries[0].count_source == 5);
    CHECK(c.entries[0].count_target == 5);
}

TEST_CASE("hom-count monotonicity on a few positive pairs") {
    const std::pair<Slope, Slope> pairs[] = {
        {sl(1, 9), sl(1, 3)}, {sl(1, 15), sl(1, 3)}, {sl(1, 15), sl(1, 5)},
        {sl(4, 15), sl(4, 15)}};
    for (const auto& [rt, r] : pairs) {
        ConsistencyReport rep =
            epi_consistency_check(rt, r, FiniteGroupTable::builtins());
        CHECK(rep.verdict.exists);
        CHECK(rep.ok);
    }
}
