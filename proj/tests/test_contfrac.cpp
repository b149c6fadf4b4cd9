#include "tb/contfrac.hpp"

#include "tb/errors.hpp"

#include <doctest.h>

#include <numeric>

using namespace tb;

namespace {

Slope sl(long n, long d) { return Slope(n, d); }

std::vector<Int> ints(std::initializer_list<long> xs) {
    return std::vector<Int>(xs.begin(), xs.end());
}

} // namespace

TEST_CASE("cf_eval") {
    CHECK(cf_eval(ints({3, 2, 2})) == sl(5, 17));
    CHECK(cf_eval(ints({2, 2})) == sl(2, 5));
    CHECK(cf_eval(ints({4, -2, 2, -4})) == sl(10, 33));
    CHECK(cf_eval(ints({7})) == sl(1, 7));
    CHECK_THROWS_AS(cf_eval(ints({2, 0, 2})), error);
    CHECK_THROWS_AS(cf_eval(ints({})), error);
    // interior tail 1/(-1) + 1 = 0 collapses
    CHECK_THROWS_AS(cf_eval(ints({3, 1, -1})), error);
}

TEST_CASE("cf_even examples") {
    CHECK(cf_even(sl(2, 5)).entries() == ints({2, 2}));
    CHECK(cf_even(sl(3, 8)).entries() == ints({2, 2, -2}));
    CHECK(cf_even(sl(10, 33)).entries() == ints({4, -2, 2, -4}));
    CHECK(cf_even(sl(10, 33)).str() == "[4,-2,2,-4]");
    CHECK_THROWS_AS(cf_even(sl(3, 7)), error);  // both odd
    CHECK_THROWS_AS(cf_even(sl(7, 5)), error);  // out of range
    CHECK_THROWS_AS(cf_even(sl(-1, 5)), error);
}

TEST_CASE("cf_positive examples") {
    CHECK(cf_positive(sl(5, 17)).entries == ints({3, 2, 2}));
    CHECK(cf_positive(sl(5, 17)).str() == "[3,2,2]");
    CHECK(cf_positive(sl(3, 8)).entries == ints({2, 1, 2}));
    CHECK(cf_positive(sl(10, 33)).entries == ints({3, 3, 3}));
    CHECK(cf_positive(sl(1, 2)).entries == ints({2}));
    CHECK_THROWS_AS(cf_positive(sl(3, 5)), error); // q > p/2
}

TEST_CASE("even_symmetry_class examples") {
    CHECK(even_symmetry_class(sl(10, 33)) == EvenSymmetry::Antipalindromic);
    CHECK(even_symmetry_class(sl(5, 12)) == EvenSymmetry::Palindromic);
    // palindromic form with p odd: reported structurally
    CHECK(even_symmetry_class(sl(2, 5)) == EvenSymmetry::Palindromic);
    CHECK(even_symmetry_class(sl(4, 11)) == EvenSymmetry::Asymmetric);
    CHECK_THROWS_AS(even_symmetry_class(sl(8, 13)), error); // q > p/2
}

TEST_CASE("pos_symmetry_class examples") {
    CHECK(pos_symmetry_class(sl(5, 12)) == PosSymmetry::SymEvenMiddle);
    CHECK(pos_symmetry_class(sl(10, 33)) == PosSymmetry::SymOddMiddle);
    CHECK(pos_symmetry_class(sl(5, 17)) == PosSymmetry::Asymmetric);
    CHECK(pos_symmetry_class(sl(5, 13)) == PosSymmetry::Asymmetric);
}

TEST_CASE("cf_normal_rep") {
    NormalRep a = cf_normal_rep(sl(7, 11));
    CHECK(a.rep == sl(4, 11));
    CHECK(a.mirror_used);
    NormalRep b = cf_normal_rep(sl(2, 5));
    CHECK(b.rep == sl(2, 5));
    CHECK_FALSE(b.mirror_used);
    CHECK_THROWS_AS(cf_normal_rep(sl(5, 13)), error); // amphichiral class
    CHECK_THROWS_AS(cf_normal_rep(sl(4, 1)), error);
}

TEST_CASE("round trips and Lemma sweeps (p <= 300)") {
    for (long p = 3; p <= 300; ++p) {
        for (long q = 1; 2 * q <= p; ++q) {
            if (std::gcd(q, p) != 1) continue;
            Slope r(q, p);
            long q2p = (q * q) % p;
            long q22p = static_cast<long>((static_cast<long long>(q) * q) %
                                          (2 * p));

            // positive expansions: exist for the whole range
            PosCF pos = cf_positive(r);
            CHECK(cf_eval(pos.entries) == r);
            CHECK(pos.entries.front() >= 2);
            CHECK(pos.entries.back() >= 2);
            PosSymmetry ps = pos_symmetry_class(r);
            bool even_middle = p % 2 == 0 && q22p == 1;
            bool odd_middle = (p % 2 == 1 && q2p == 1) ||
                              (p % 2 == 0 && q22p == p + 1);
            CHECK((ps == PosSymmetry::SymEvenMiddle) == even_middle);
            CHECK((ps == PosSymmetry::SymOddMiddle) == odd_middle);

            // even expansions: exactly one of p, q even
            if (p % 2 == 1 && q % 2 == 1) continue;
            EvenCF even = cf_even(r);
            CHECK(cf_eval(even.entries()) == r);
            CHECK((even.length() % 2 == 0) == (p % 2 == 1));
            EvenSymmetry es = even_symmetry_class(r);
            if (p % 2 == 1) {
                CHECK((es == EvenSymmetry::Antipalindromic) == (q2p == 1));
            } else {
                CHECK((es == EvenSymmetry::Palindromic) == (q22p == 1));
            }
        }
    }
}

TEST_CASE("even expansion round-trips outside the canonical range") {
    for (long p = 2; p <= 120; ++p) {
        for (long q = 1; q < p; ++q) {
            if (std::gcd(q, p) != 1 || (p % 2 == 1 && q % 2 == 1)) continue;
            Slope r(q, p);
            EvenCF even = cf_even(r);
            CHECK(cf_eval(even.entries()) == r);
            for (const Int& b : even.half_entries) CHECK(b != 0);
        }
    }
}
