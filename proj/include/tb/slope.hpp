#pragma once

#include "tb/integer.hpp"

#include <compare>
#include <iosfwd>
#include <string>

namespace tb {

// An extended rational q/p in lowest terms. Slopes are the universal
// coordinate here: they name 2-bridge links, Farey vertices and tangles.
//
// Invariants: gcd(|num|, den) = 1; den >= 0; den = 0 only for the single
// point at infinity, normalized to 1/0, so equality is structural.
class Slope {
  public:
    Slope() : num_(0), den_(1) {}
    Slope(Int num, Int den);
    Slope(long num, long den) : Slope(Int(num), Int(den)) {}

    static Slope infinity() { return Slope(1, 0); }
    static Slope integer(Int n) { return Slope(std::move(n), Int(1)); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_infinity() const { return den_ == 0; }
    bool is_integer() const { return den_ == 1; }

    bool operator==(const Slope& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    // Numeric order on Q, with infinity greater than everything.
    std::strong_ordering operator<=>(const Slope& o) const;

    Slope operator+(const Int& k) const; // translation by an integer
    Slope operator-() const;
    Int floor() const; // finite slopes only

    std::string str() const;

  private:
    Int num_, den_;
};

std::ostream& operator<<(std::ostream& os, const Slope& s);

// "q/p" with optional leading minus, or "inf". A bare integer is accepted
// and read as q/1. Printing always uses the reduced "q/p" / "inf" form.
Slope parse_slope(const std::string& text);

enum class LinkVariant {
    TrivialKnot,
    TorusLink,
    HyperbolicKnot,
    HyperbolicTwoComponent,
    NonHyperbolicTwoComponent,
};

struct LinkKind {
    LinkVariant variant;
    int components; // 1 or 2
};

const char* link_variant_name(LinkVariant v) noexcept;

Slope make_slope(const Int& num, const Int& den);

// q mod p in [0, p); 0 when p = 1.
Int residue_class(const Slope& r);

// q'/p with qq' == 1 (mod p) and 0 < q' < p.
Slope inverse_slope(const Slope& r);

// Schubert's classification: same denominator and residue classes match
// directly or through the inverse residue. Mirrors are not identified.
bool slope_equivalent(const Slope& r1, const Slope& r2);

LinkKind link_kind(const Slope& r);

bool is_hyperbolic(const Slope& r);

} // namespace tb
