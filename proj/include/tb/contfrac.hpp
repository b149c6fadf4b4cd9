#pragma once

#include "tb/slope.hpp"

#include <string>
#include <vector>

namespace tb {

// Continued fractions use the nested convention
//   [c1,c2,...,cn] = 1/(c1 + 1/(c2 + ... + 1/cn)),
// so [3,2,2] = 5/17.

// Even expansion [2b1,...,2bn]; only the halves b_i are stored.
struct EvenCF {
    std::vector<Int> half_entries;

    std::size_t length() const { return half_entries.size(); }
    std::vector<Int> entries() const; // doubled entries 2b_i
    std::string str() const;          // "[4,-2,2,-4]" (doubled form)
};

// Expansion into positive integers with a1 >= 2 and an >= 2.
struct PosCF {
    std::vector<Int> entries;

    std::size_t length() const { return entries.size(); }
    std::string str() const;
};

enum class EvenSymmetry { Antipalindromic, Palindromic, Asymmetric };
enum class PosSymmetry { SymEvenMiddle, SymOddMiddle, Asymmetric };

const char* even_symmetry_name(EvenSymmetry s) noexcept;
const char* pos_symmetry_name(PosSymmetry s) noexcept;

// Exact value of the nested fraction. Entries must be nonzero; an
// interior tail hitting 0 is rejected as an invalid sequence.
Slope cf_eval(const std::vector<Int>& entries);

// Even expansion of r = q/p with 0 < q < p and exactly one of p, q even,
// by repeated nearest-even division. Unique for q <= p/2 (and still
// deterministic and round-trip-exact outside that range).
EvenCF cf_even(const Slope& r);

// Euclidean expansion of r = q/p with 0 < q <= p/2 into positive
// integers, trailing 1 absorbed so the last entry is >= 2.
PosCF cf_positive(const Slope& r);

// Structural symmetry of the even expansion: b_i = -b_{n+1-i} for all i
// (antipalindromic) or b_i = b_{n+1-i} (palindromic). Requires q <= p/2;
// the congruence correspondence only holds per parity case there.
EvenSymmetry even_symmetry_class(const Slope& r);

// Symmetric positive expansions of odd length, split by the parity of
// the middle entry. Requires 0 < q <= p/2.
PosSymmetry pos_symmetry_class(const Slope& r);

struct NormalRep {
    Slope rep;
    bool mirror_used;
};

// Representative c/p of the Schubert class of r with 0 < c <= p/2 and
// not both of c, p odd, searching {q, q', p-q, p-q'}. Classes like 5/13
// (q^2 == -1 mod p) admit none; that raises NoRepresentative.
NormalRep cf_normal_rep(const Slope& r);

} // namespace tb
