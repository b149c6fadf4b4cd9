#include "tb/contfrac.hpp"

#include "tb/errors.hpp"

#include <utility>

namespace tb {

namespace {

std::string bracket_list(const std::vector<Int>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += to_string(v[i]);
    }
    out += "]";
    return out;
}

} // namespace

std::vector<Int> EvenCF::entries() const {
    std::vector<Int> out;
    out.reserve(half_entries.size());
    for (const Int& b : half_entries) {
        out.push_back(2 * b);
    }
    return out;
}

std::string EvenCF::str() const { return bracket_list(entries()); }

std::string PosCF::str() const { return bracket_list(entries); }

const char* even_symmetry_name(EvenSymmetry s) noexcept {
    switch (s) {
    case EvenSymmetry::Antipalindromic: return "Antipalindromic";
    case EvenSymmetry::Palindromic: return "Palindromic";
    case EvenSymmetry::Asymmetric: return "Asymmetric";
    }
    return "UnknownSymmetry";
}

const char* pos_symmetry_name(PosSymmetry s) noexcept {
    switch (s) {
    case PosSymmetry::SymEvenMiddle: return "SymEvenMiddle";
    case PosSymmetry::SymOddMiddle: return "SymOddMiddle";
    case PosSymmetry::Asymmetric: return "Asymmetric";
    }
    return "UnknownSymmetry";
}

Slope cf_eval(const std::vector<Int>& entries) {
    if (entries.empty()) {
        raise(errc::zero_entry, "empty continued fraction");
    }
    for (const Int& c : entries) {
        if (c == 0) {
            raise(errc::zero_entry, "continued fraction entry 0");
        }
    }
    // Fold the tail value v = num/den from the right: v <- c + 1/v.
    Int num = entries.back();
    Int den = 1;
    for (std::size_t i = entries.size() - 1; i-- > 0;) {
        if (num == 0) {
            raise(errc::division_collapse,
                  "interior tail of " + bracket_list(entries) + " vanishes");
        }
        Int next_num = entries[i] * num + den;
        den = std::exchange(num, next_num);
    }
    return Slope(den, num); // value is 1/v
}

EvenCF cf_even(const Slope& r) {
    if (r.is_infinity() || r.num() <= 0 || r.num() >= r.den()) {
        raise(errc::out_of_range,
              "even expansion needs 0 < q < p, got " + r.str());
    }
    if (is_odd(r.num()) && is_odd(r.den())) {
        raise(errc::both_odd,
              "no even expansion of " + r.str() + ": p and q both odd");
    }
    // Expand 1/r = P/Q by nearest-even division: pick the even 2b with
    // P/Q - 2b strictly inside (-1, 1); the next pair is (Q, P - 2bQ)
    // inverted, which keeps exactly one of the pair even.
    EvenCF out;
    Int P = r.den(), Q = r.num();
    while (true) {
        Int twice_b = 2 * floor_div(P + Q, 2 * Q);
        Int rem = P - twice_b * Q; // in (-Q, Q): -Q needs P/Q an odd integer
        if (rem == -Q) {
            raise(errc::both_odd, "parity invariant broken in cf_even");
        }
        out.half_entries.push_back(twice_b / 2);
        if (rem == 0) {
            break;
        }
        P = std::exchange(Q, rem);
        if (Q < 0) {
            Q = -Q;
            P = -P;
        }
    }
    return out;
}

PosCF cf_positive(const Slope& r) {
    if (r.is_infinity() || r.num() <= 0 || 2 * r.num() > r.den()) {
        raise(errc::out_of_range,
              "positive expansion needs 0 < q <= p/2, got " + r.str());
    }
    // Euclidean quotients of 1/r; remainders lie in [0, 1) so the final
    // quotient is >= 2 and no trailing 1 can occur.
    PosCF out;
    Int P = r.den(), Q = r.num();
    while (Q != 0) {
        out.entries.push_back(P / Q);
        P = std::exchange(Q, P % Q);
    }
    if (out.entries.size() > 1 && out.entries.back() == 1) {
        out.entries.pop_back();
        out.entries.back() += 1;
    }
    return out;
}

EvenSymmetry even_symmetry_class(const Slope& r) {
    if (!r.is_infinity() && 2 * r.num() > r.den()) {
        raise(errc::out_of_range,
              "symmetry classes are only defined for q <= p/2");
    }
    const auto b = cf_even(r).half_entries;
    const std::size_t n = b.size();
    bool anti = true, pal = true;
    for (std::size_t i = 0; i < n; ++i) {
        anti = anti && b[i] == -b[n - 1 - i];
        pal = pal && b[i] == b[n - 1 - i];
    }
    if (anti) {
        return EvenSymmetry::Antipalindromic;
    }
    if (pal) {
        return EvenSymmetry::Palindromic;
    }
    return EvenSymmetry::Asymmetric;
}

PosSymmetry pos_symmetry_class(const Slope& r) {
    const auto a = cf_positive(r).entries;
    const std::size_t n = a.size();
    if (n % 2 == 0) {
        return PosSymmetry::Asymmetric;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != a[n - 1 - i]) {
            return PosSymmetry::Asymmetric;
        }
    }
    return is_even(a[n / 2]) ? PosSymmetry::SymEvenMiddle
                             : PosSymmetry::SymOddMiddle;
}

NormalRep cf_normal_rep(const Slope& r) {
    if (r.is_infinity() || r.den() < 2) {
        raise(errc::out_of_range,
              "normal representative needs denominator >= 2");
    }
    const Int& p = r.den();
    Int q = residue_class(r);
    Int qi = inverse_slope(r).num();
    const std::pair<Int, bool> candidates[] = {
        {q, false}, {qi, false}, {p - q, true}, {p - qi, true}};
    for (const auto& [c, mirrored] : candidates) {
        if (2 * c <= p && !(is_odd(c) && is_odd(p))) {
            return {Slope(c, p), mirrored};
        }
    }
    raise(errc::no_representative,
          "no representative of " + r.str() +
              " with 0 < c <= p/2 and c*p even");
}

} // namespace tb
