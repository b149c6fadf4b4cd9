#pragma once

#include "tb/farey.hpp"
#include "tb/slope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tb {

// Decision record for epimorphism existence between 2-bridge knot
// groups: which of the four orbit clauses fired, with a witness word.
struct EpiVerdict {
    enum class Clause { C1_r, C1_rPlus1, C2_r, C2_rPlus1, TrivialTarget };

    bool exists;
    std::optional<Clause> clause;
    std::optional<ReflectionWord> witness;
    Slope tested; // the slope the witness maps into {target, infinity}
    Slope target;
    std::optional<std::string> obstruction;
};

const char* epi_clause_name(EpiVerdict::Clause c) noexcept;

// Orbit criterion: an epimorphism G(r~) ->> G(r) between knot groups
// exists iff r~ or r~+1 lies in the orbit of {r, infinity} under the
// reflection group at r, or likewise for r' with qq' == 1 (mod p).
// Trivial-knot targets accept everything. Even denominators >= 2 are
// refused: the link case is open.
EpiVerdict epi_exists(const Slope& r_tilde, const Slope& r);

struct OrbitCondition {
    bool holds;
    std::optional<ReflectionWord> witness;
    Slope tested;
};

// The orbit clause alone (no inverse-slope clause); a sufficient
// epimorphism criterion valid for link slopes too.
OrbitCondition ors_orbit_condition(const Slope& r_tilde, const Slope& r);

// One-relator presentation over two generators. Letters: +1 = a,
// -1 = a^-1, +2 = b, -2 = b^-1; the relator is freely reduced.
struct Presentation {
    std::vector<int> relator;

    std::size_t relator_length() const { return relator.size(); }
    std::string str() const; // "<a,b | abAB>" with capitals = inverses
};

// Riley-form presentation of the 2-bridge group of slope q/p: the
// relator is a w b^-1 w^-1 (p odd) or a w a^-1 w^-1 (p even) with
// w = b^e1 a^e2 b^e3 ... (p-1 alternating letters), e_i = (-1)^floor(iq/p).
Presentation riley_presentation(const Slope& r);

// Multiplication table of a small finite group; laws are verified on
// construction.
class FiniteGroupTable {
  public:
    FiniteGroupTable(std::string name, int order, std::vector<int> table);

    const std::string& name() const { return name_; }
    int order() const { return order_; }
    int identity() const { return identity_; }
    int mul(int x, int y) const { return mul_[x * order_ + y]; }
    int inv(int x) const { return inv_[x]; }

    static FiniteGroupTable cyclic(int n);
    static FiniteGroupTable dihedral(int n);  // order 2n
    static FiniteGroupTable symmetric(int n); // order n!
    static FiniteGroupTable alternating4();
    static FiniteGroupTable quaternion8();

    // Cyclic 2..6, dihedral D3..D6, S3, S4, A4, Q8.
    static const std::vector<FiniteGroupTable>& builtins();

  private:
    std::string name_;
    int order_;
    std::vector<int> mul_;
    int identity_;
    std::vector<int> inv_;
};

// Number of pairs (A, B) of group elements satisfying the relator.
long long hom_count(const Presentation& pres, const FiniteGroupTable& table);

struct ConsistencyEntry {
    std::string table_name;
    long long count_source; // Hom(G(r~), F)
    long long count_target; // Hom(G(r), F)
    bool ok;                // count_target <= count_source when an epi exists
};

struct ConsistencyReport {
    EpiVerdict verdict;
    std::vector<ConsistencyEntry> entries;
    bool ok;
};

// Precomposition with an epimorphism injects Hom(G(r), F) into
// Hom(G(r~), F), so a positive verdict forces count monotonicity.
ConsistencyReport epi_consistency_check(const Slope& r_tilde, const Slope& r,
                                        const std::vector<FiniteGroupTable>& tables);

} // namespace tb
