#pragma once

#include "tb/slope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tb {

// Orientation-preserving isometry group of the hyperbolic link
// complement, determined by the parity of p and q^2 mod p (or mod 2p).
enum class IsomGroup { Z2xZ2, D4, Z2cubed };

const char* isom_group_name(IsomGroup g) noexcept;

IsomGroup isometry_group(const Slope& r);

// Image of the product of a meridian pair in H1 of the double branched
// cover, Z/p, known exactly, as a constraint set, or only up to
// generating.
struct OmegaValue {
    enum class Kind { Exact, InSet, GeneratorClass };

    Kind kind;
    std::vector<Int> residues; // one entry for Exact, several for InSet

    static OmegaValue exact(Int k) { return {Kind::Exact, {std::move(k)}}; }
    static OmegaValue in_set(std::vector<Int> ks) {
        return {Kind::InSet, std::move(ks)};
    }
    static OmegaValue generator_class() { return {Kind::GeneratorClass, {}}; }

    // True when omega could generate Z/p.
    bool may_generate(const Int& p) const;

    std::string str(const Int& p) const;
};

enum class PairKindTag {
    Upper,
    Lower,
    LongUpper,
    LongLower,
    IntermediateL,
    IntermediateR,
    Extra,
};

const char* pair_kind_name(PairKindTag t) noexcept;

struct PairKind {
    PairKindTag tag;
    // Extra pairs only: which of the two pairs sharing the inversion,
    // and the slope of the fixed arc carrying the pair.
    int extra_index = 0;
    std::optional<Slope> arc_slope;

    static PairKind simple(PairKindTag t) { return {t, 0, std::nullopt}; }
    static PairKind extra(int index, Slope arc) {
        return {PairKindTag::Extra, index, std::move(arc)};
    }

    std::string str() const;
};

struct PairCandidate {
    PairKind kind;
    OmegaValue omega;
    bool generates;
    std::string equivalence_note;
};

// The two Farey vertices s1 = q1/p1, s2 = q2/p2 spanning the edge
// (p = 2 p1 p2) or geodesic (p = p1 p2) fixed by the extra symmetry.
struct ExtraSplit {
    enum class Case { EdgeCase, GeodesicCase };

    Slope s1, s2; // ordered by denominator, p1 <= p2
    Case split_case;
};

ExtraSplit extra_split(const Slope& r);

std::vector<PairCandidate> candidates(const Slope& r);

struct ClassificationReport {
    Slope slope;
    LinkKind kind;
    IsomGroup isom;
    std::vector<PairCandidate> ledger;
    std::vector<PairKindTag> verdict; // always {Upper, Lower}
    bool upper_lower_equivalent;      // always false
    std::vector<std::string> notes;
};

ClassificationReport classify(const Slope& r);

OmegaValue omega_of_candidate(const PairKind& kind, const Slope& r);

} // namespace tb
