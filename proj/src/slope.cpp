#include "tb/slope.hpp"

#include "tb/errors.hpp"

#include <ostream>

namespace tb {

Slope::Slope(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_ == 0 && den_ == 0) {
        raise(errc::zero_over_zero, "slope 0/0 is undefined");
    }
    if (den_ == 0) {
        num_ = 1; // every x/0 is the same point at infinity
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = gcd(abs(num_), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::strong_ordering Slope::operator<=>(const Slope& o) const {
    if (is_infinity() || o.is_infinity()) {
        if (is_infinity() && o.is_infinity()) {
            return std::strong_ordering::equal;
        }
        return is_infinity() ? std::strong_ordering::greater
                             : std::strong_ordering::less;
    }
    Int lhs = num_ * o.den_;
    Int rhs = o.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Slope Slope::operator+(const Int& k) const {
    if (is_infinity()) {
        return *this;
    }
    return Slope(num_ + k * den_, den_);
}

Slope Slope::operator-() const {
    if (is_infinity()) {
        return *this;
    }
    return Slope(-num_, den_);
}

Int Slope::floor() const {
    if (is_infinity()) {
        raise(errc::infinity_input, "floor of infinity");
    }
    return floor_div(num_, den_);
}

std::string Slope::str() const {
    if (is_infinity()) {
        return "inf";
    }
    return to_string(num_) + "/" + to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Slope& s) {
    return os << s.str();
}

Slope parse_slope(const std::string& text) {
    if (text == "inf") {
        return Slope::infinity();
    }
    auto bad = [&]() -> Slope {
        raise(errc::parse_error, "bad slope '" + text + "'");
    };
    std::size_t slash = text.find('/');
    std::string num_part = text.substr(0, slash);
    std::string den_part =
        slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto digits = [](const std::string& s, std::size_t from) {
        if (from >= s.size()) return false;
        for (std::size_t i = from; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') return false;
        }
        return true;
    };
    if (!digits(num_part, num_part.size() > 0 && num_part[0] == '-' ? 1 : 0) ||
        !digits(den_part, 0)) {
        return bad();
    }
    try {
        return Slope(Int(num_part), Int(den_part));
    } catch (const error&) {
        return bad();
    }
}

const char* link_variant_name(LinkVariant v) noexcept {
    switch (v) {
    case LinkVariant::TrivialKnot: return "TrivialKnot";
    case LinkVariant::TorusLink: return "TorusLink";
    case LinkVariant::HyperbolicKnot: return "HyperbolicKnot";
    case LinkVariant::HyperbolicTwoComponent: return "HyperbolicTwoComponent";
    case LinkVariant::NonHyperbolicTwoComponent:
        return "NonHyperbolicTwoComponent";
    }
    return "UnknownLinkVariant";
}

Slope make_slope(const Int& num, const Int& den) { return Slope(num, den); }

Int residue_class(const Slope& r) {
    if (r.is_infinity()) {
        raise(errc::infinity_input, "residue class of infinity");
    }
    if (r.den() == 1) {
        return 0;
    }
    return mod_euclid(r.num(), r.den());
}

namespace {

// Inverse residue of r, with the p <= 1 degenerate case mapped to 0.
Int inverse_residue(const Slope& r) {
    if (r.den() <= 1) {
        return 0;
    }
    return mod_inverse(residue_class(r), r.den());
}

} // namespace

Slope inverse_slope(const Slope& r) {
    if (r.is_infinity()) {
        raise(errc::infinity_input, "inverse slope of infinity");
    }
    if (r.den() <= 1) {
        raise(errc::integer_slope, "inverse slope needs denominator >= 2");
    }
    return Slope(inverse_residue(r), r.den());
}

bool slope_equivalent(const Slope& r1, const Slope& r2) {
    if (r1.is_infinity() || r2.is_infinity()) {
        raise(errc::infinity_input, "slope equivalence of infinity");
    }
    if (r1.den() != r2.den()) {
        return false;
    }
    Int c2 = residue_class(r2);
    return c2 == residue_class(r1) || c2 == inverse_residue(r1);
}

LinkKind link_kind(const Slope& r) {
    if (r.is_infinity()) {
        raise(errc::infinity_input, "link kind of infinity");
    }
    const Int& p = r.den();
    if (p == 1) {
        return {LinkVariant::TrivialKnot, 1};
    }
    Int q = residue_class(r);
    bool torus = q == 1 || q == p - 1;
    if (is_odd(p)) {
        return {torus ? LinkVariant::TorusLink : LinkVariant::HyperbolicKnot,
                1};
    }
    return {torus ? LinkVariant::NonHyperbolicTwoComponent
                  : LinkVariant::HyperbolicTwoComponent,
            2};
}

bool is_hyperbolic(const Slope& r) {
    if (r.is_infinity() || r.den() <= 1) {
        return false;
    }
    Int q = residue_class(r);
    return q != 1 && q != r.den() - 1;
}

} // namespace tb
