#include "tb/pairs.hpp"

#include "tb/errors.hpp"

#include <algorithm>
#include <utility>

namespace tb {

namespace {

void require_hyperbolic(const Slope& r, const char* what) {
    if (!is_hyperbolic(r)) {
        raise(errc::not_hyperbolic,
              std::string(what) + " needs a hyperbolic slope, got " + r.str());
    }
}

// q^2 residues of the class of r; the mod-2p one is only meaningful for
// even p, where it is independent of the choice of residue.
struct Squares {
    Int p;
    Int mod_p;
    Int mod_2p;
};

Squares squares_of(const Slope& r) {
    Int p = r.den();
    Int q = residue_class(r);
    return {p, mod_euclid(q * q, p), mod_euclid(q * q, 2 * p)};
}

} // namespace

const char* isom_group_name(IsomGroup g) noexcept {
    switch (g) {
    case IsomGroup::Z2xZ2: return "Z2xZ2";
    case IsomGroup::D4: return "D4";
    case IsomGroup::Z2cubed: return "Z2cubed";
    }
    return "UnknownIsomGroup";
}

IsomGroup isometry_group(const Slope& r) {
    require_hyperbolic(r, "isometry_group");
    Squares s = squares_of(r);
    if (s.mod_p != 1) {
        return IsomGroup::Z2xZ2;
    }
    if (is_odd(s.p)) {
        return IsomGroup::D4;
    }
    return s.mod_2p == 1 ? IsomGroup::Z2cubed : IsomGroup::D4;
}

bool OmegaValue::may_generate(const Int& p) const {
    switch (kind) {
    case Kind::GeneratorClass:
        return true;
    case Kind::Exact:
    case Kind::InSet:
        return std::any_of(residues.begin(), residues.end(), [&](const Int& k) {
            return gcd(mod_euclid(k, p), p) == 1;
        });
    }
    return false;
}

std::string OmegaValue::str(const Int& p) const {
    switch (kind) {
    case Kind::GeneratorClass:
        return "generator of Z/" + to_string(p);
    case Kind::Exact:
        return to_string(residues.front()) + " mod " + to_string(p);
    case Kind::InSet: {
        std::string out = "{";
        for (std::size_t i = 0; i < residues.size(); ++i) {
            if (i > 0) out += ",";
            out += to_string(residues[i]);
        }
        return out + "} mod " + to_string(p);
    }
    }
    return "?";
}

const char* pair_kind_name(PairKindTag t) noexcept {
    switch (t) {
    case PairKindTag::Upper: return "Upper";
    case PairKindTag::Lower: return "Lower";
    case PairKindTag::LongUpper: return "LongUpper";
    case PairKindTag::LongLower: return "LongLower";
    case PairKindTag::IntermediateL: return "IntermediateL";
    case PairKindTag::IntermediateR: return "IntermediateR";
    case PairKindTag::Extra: return "Extra";
    }
    return "UnknownPairKind";
}

std::string PairKind::str() const {
    if (tag != PairKindTag::Extra) {
        return pair_kind_name(tag);
    }
    return "Extra(" + std::to_string(extra_index) + ", arc " +
           arc_slope->str() + ")";
}

namespace {

// Solve p2*q1 + p1*q2 = sum, p2*q1 - p1*q2 = eps over all factorizations
// p1*p2 = prod (1 < p1 <= p2) and both eps signs; collect the splits
// with 0 < qi < pi and gcd(qi, pi) = 1.
std::vector<ExtraSplit> solve_split(const Int& prod, const Int& sum,
                                    const Int& eps_abs,
                                    ExtraSplit::Case which) {
    std::vector<ExtraSplit> found;
    for (Int p1 = 2; p1 * p1 <= prod; ++p1) {
        if (prod % p1 != 0) {
            continue;
        }
        Int p2 = prod / p1;
        for (int sign : {+1, -1}) {
            Int eps = sign * eps_abs;
            Int two_p2q1 = sum + eps; // 2*p2*q1
            Int two_p1q2 = sum - eps;
            if (two_p2q1 % (2 * p2) != 0 || two_p1q2 % (2 * p1) != 0) {
                continue;
            }
            Int q1 = two_p2q1 / (2 * p2);
            Int q2 = two_p1q2 / (2 * p1);
            if (q1 <= 0 || q1 >= p1 || q2 <= 0 || q2 >= p2) {
                continue;
            }
            if (gcd(q1, p1) != 1 || gcd(q2, p2) != 1) {
                continue;
            }
            ExtraSplit split{Slope(q1, p1), Slope(q2, p2), which};
            bool dup = std::any_of(
                found.begin(), found.end(), [&](const ExtraSplit& e) {
                    return e.s1 == split.s1 && e.s2 == split.s2;
                });
            if (!dup) {
                found.push_back(std::move(split));
            }
        }
    }
    return found;
}

} // namespace

ExtraSplit extra_split(const Slope& r) {
    if (r.is_infinity() || r.den() < 2) {
        raise(errc::condition_not_met,
              "extra split needs a finite slope with p >= 2");
    }
    Squares s = squares_of(r);
    Int q = residue_class(r);

    bool edge_case = is_even(s.p) && s.mod_2p == 1;
    bool geodesic_case = (is_odd(s.p) && s.mod_p == 1) ||
                         (is_even(s.p) && s.mod_2p == mod_euclid(s.p + 1, 2 * s.p));
    if (!edge_case && !geodesic_case) {
        raise(errc::condition_not_met,
              "no extra symmetry for " + r.str() + ": q^2 fails the congruence");
    }

    // The fixed edge (sum = q with |p1 q2 - p2 q1| = 1, p = 2 p1 p2) or
    // fixed geodesic (2 sum = 2q with pairing 2, p = p1 p2) of the
    // involution swapping infinity and r. The sum equals q itself; the
    // mirror residue p - q is attempted only as a fallback.
    auto attempt = [&](const Int& sum) {
        return edge_case
                   ? solve_split(s.p / 2, sum, 1, ExtraSplit::Case::EdgeCase)
                   : solve_split(s.p, 2 * sum, 2,
                                 ExtraSplit::Case::GeodesicCase);
    };
    std::vector<ExtraSplit> found = attempt(q);
    if (found.empty()) {
        found = attempt(s.p - q);
    }
    if (found.empty()) {
        raise(errc::no_solution,
              "no extra split of " + r.str() + " (internal error)");
    }
    if (found.size() > 1) {
        raise(errc::ambiguous_split,
              "extra split of " + r.str() + " is not unique");
    }
    return found.front();
}

OmegaValue omega_of_candidate(const PairKind& kind, const Slope& r) {
    require_hyperbolic(r, "omega_of_candidate");
    const Int& p = r.den();
    bool knot = is_odd(p);
    switch (kind.tag) {
    case PairKindTag::Upper:
    case PairKindTag::Lower:
        return OmegaValue::generator_class();
    case PairKindTag::LongUpper:
    case PairKindTag::LongLower:
        if (!knot) {
            raise(errc::kind_not_applicable,
                  "long meridian pairs exist only for knots");
        }
        return OmegaValue::exact(0);
    case PairKindTag::IntermediateL:
    case PairKindTag::IntermediateR:
        if (knot) {
            raise(errc::kind_not_applicable,
                  "intermediate meridian pairs exist only for 2-component links");
        }
        return OmegaValue::in_set({Int(0), p / 2});
    case PairKindTag::Extra: {
        if (!kind.arc_slope) {
            raise(errc::kind_not_applicable, "extra pair without an arc slope");
        }
        return OmegaValue::exact(mod_euclid(kind.arc_slope->den(), p));
    }
    }
    raise(errc::kind_not_applicable, "unknown pair kind");
}

namespace {

PairCandidate make_candidate(PairKind kind, const Slope& r,
                             std::string note) {
    OmegaValue omega = omega_of_candidate(kind, r);
    bool gen = omega.may_generate(r.den());
    return {std::move(kind), std::move(omega), gen, std::move(note)};
}

} // namespace

std::vector<PairCandidate> candidates(const Slope& r) {
    require_hyperbolic(r, "candidates");
    Squares s = squares_of(r);
    bool knot = is_odd(s.p);
    bool has_extra = knot ? s.mod_p == 1 : s.mod_2p == 1;

    std::vector<PairCandidate> out;
    out.push_back(make_candidate(PairKind::simple(PairKindTag::Upper), r,
                                 "genuine parabolic generating pair"));
    out.push_back(make_candidate(PairKind::simple(PairKindTag::Lower), r,
                                 "genuine parabolic generating pair; not "
                                 "equivalent to the upper pair"));
    if (knot) {
        out.push_back(make_candidate(
            PairKind::simple(PairKindTag::LongUpper), r,
            "carried by the complementary fixed arc of the upper inversion"));
        out.push_back(make_candidate(
            PairKind::simple(PairKindTag::LongLower), r,
            "carried by the complementary fixed arc of the lower inversion"));
    } else {
        out.push_back(make_candidate(
            PairKind::simple(PairKindTag::IntermediateL), r,
            "intermediate pair; equivalent to the right one modulo the "
            "vertical involution's automorphism"));
        out.push_back(make_candidate(
            PairKind::simple(PairKindTag::IntermediateR), r,
            "intermediate pair; equivalence to the left one as a pair is "
            "not decided"));
    }
    if (has_extra) {
        ExtraSplit split = extra_split(r);
        const char* grouping =
            knot ? "two pairs per extra strong inversion; classes by arc "
                   "slope under the order-4 symmetry"
                 : "four arcs of the single extra strong inversion; classes "
                   "by arc slope under the vertical involution";
        for (int index : {0, 1}) {
            for (const Slope* arc : {&split.s1, &split.s2}) {
                out.push_back(make_candidate(PairKind::extra(index, *arc), r,
                                             grouping));
            }
        }
    }
    return out;
}

ClassificationReport classify(const Slope& r) {
    require_hyperbolic(r, "classify");
    ClassificationReport report;
    report.slope = r;
    report.kind = link_kind(r);
    report.isom = isometry_group(r);
    report.ledger = candidates(r);
    report.verdict = {PairKindTag::Upper, PairKindTag::Lower};
    report.upper_lower_equivalent = false;
    report.notes = {
        "exactly the upper and lower meridian pairs generate; all other "
        "candidates have non-generating omega in H1 of the double branched "
        "cover (Z/" + to_string(r.den()) + ")",
        "the upper and lower meridian pairs are not equivalent",
    };
    return report;
}

} // namespace tb
