#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tb::selfcheck {

struct CheckResult {
    std::string name;
    bool pass;
    long long cases;
    double millis;
    std::string detail; // first failure, empty when passing
};

// Exhaustive and seeded property sweeps over the whole library. max_p
// bounds the slope denominators of the exhaustive families; seeded
// checks derive their generators from the given seed.
CheckResult check_slope_equivalence(long max_p);
CheckResult check_even_expansions(long max_p);     // round trip + symmetry law
CheckResult check_positive_expansions(long max_p); // round trip + symmetry law
CheckResult check_reflections(std::uint64_t seed, int cases);
CheckResult check_reduction(std::uint64_t seed, int cases);
CheckResult check_orbit_oracle(int depth, long max_den);
CheckResult check_isometry_trichotomy(long max_p);
CheckResult check_pair_ledger(long max_p);
CheckResult check_mirror_inverse(long max_p);
CheckResult check_heckoid(long max_p, std::uint64_t seed);
CheckResult check_epi_invariance(long max_source_den);
CheckResult check_hom_monotonicity(long max_source_den);

std::vector<CheckResult> run_all(long max_p, std::uint64_t seed);

} // namespace tb::selfcheck
