#pragma once

#include "tb/slope.hpp"

#include <set>
#include <string>
#include <vector>

namespace tb {

// Integer projective matrix [[a,b],[c,d]] with |det| = 1, considered up
// to global sign. A slope s = q/p is the column vector (p, q); the
// matrix sends (p, q) to (ap + bq, cp + dq), i.e. s to (c + ds)/(a + bs).
struct ProjMatrix {
    Int a, b, c, d;

    static ProjMatrix identity() { return {1, 0, 0, 1}; }

    Int det() const { return a * d - b * c; }
    ProjMatrix operator*(const ProjMatrix& o) const;
    ProjMatrix inverse() const; // |det| = 1 inverse (up to sign)
    Slope apply(const Slope& s) const;

    // Sign-canonical form: first nonzero of (a, b, c, d) positive.
    ProjMatrix normalized() const;
    bool proj_equal(const ProjMatrix& o) const;
    bool is_proj_identity() const;

    std::string str() const; // "[[a,b],[c,d]]"
};

// Unordered pair of Farey neighbors: |p1*q2 - p2*q1| = 1. Endpoints are
// stored in increasing slope order so equality is structural.
class FareyEdge {
  public:
    FareyEdge(const Slope& x, const Slope& y);

    const Slope& first() const { return u_; }
    const Slope& second() const { return v_; }

    // Reflection of the Farey tessellation fixing both endpoints:
    // with columns (p1,q1), (p2,q2) it is
    //   [[p1q2 + p2q1, -2p1p2], [2q1q2, -(p1q2 + p2q1)]],
    // determinant -1, an involution.
    ProjMatrix reflection() const;

    FareyEdge transformed(const ProjMatrix& m) const;

    bool operator==(const FareyEdge& o) const = default;

    std::string str() const; // "{1/3, 0/1}"

  private:
    Slope u_, v_;
};

// Determinant pairing |p1 q2 - p2 q1| of two slopes as primitive vectors.
Int farey_pairing(const Slope& x, const Slope& y);
bool are_farey_neighbors(const Slope& x, const Slope& y);

// Word of edge reflections, applied right to left: the last edge in the
// list acts first.
struct ReflectionWord {
    std::vector<FareyEdge> edges;

    std::size_t length() const { return edges.size(); }
    ProjMatrix to_matrix() const;
    Slope apply(const Slope& s) const;

    void prepend(const ReflectionWord& newer); // newer acts after *this
};

// The fan of Farey edges at a non-integral vertex r = q/p: the neighbors
// are exactly s_k = (q0 + k q)/(p0 + k p) for the base neighbor q0/p0
// with 0 < p0 < p.
struct FareyFan {
    Slope vertex;
    Slope base; // neighbor with the smallest positive denominator

    Slope neighbor(const Int& k) const;
    bool contains(const Slope& x) const;
};

FareyFan farey_neighbors(const Slope& r);

// B with B(r) = infinity: first row (q, -p), second row a Bezout pair.
ProjMatrix conjugator_to_infinity(const Slope& r);

struct FoldResult {
    Slope result;
    ReflectionWord word; // result = word.apply(input)
};

// Fold x into the strip [c, c+1] (plus infinity, which is fixed) under
// the reflections x -> 2n - x; at most two reflections are emitted.
FoldResult fold_to_strip(const Slope& x, const Int& c);

// Canonical representative of x under the group generated by the
// reflections at infinity and those at r, by alternate folding into the
// strip at floor(r) and the wedge at r containing infinity. The returned
// word maps x to the representative.
FoldResult reduce(const Slope& x, const Slope& r);

struct MembershipVerdict {
    enum class Kind { InOrbitOfR, InOrbitOfInfinity, NotInOrbit };

    Kind kind;
    ReflectionWord word; // witness for the positive kinds
    Slope reduced_rep;

    bool positive() const { return kind != Kind::NotInOrbit; }
};

MembershipVerdict orbit_member(const Slope& x, const Slope& r);

// Brute-force oracle: all images of {r, infinity} under words of length
// <= depth over the four fundamental-domain wall reflections, filtered
// to denominator <= max_den.
std::set<Slope> orbit_bfs(const Slope& r, int depth, const Int& max_den);

// The four wall reflections of the fundamental domain: the strip edges
// {inf, floor(r)}, {inf, floor(r)+1} and the two wedge edges at r
// bounding infinity.
std::vector<FareyEdge> wall_edges(const Slope& r);

} // namespace tb
