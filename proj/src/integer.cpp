#include "tb/integer.hpp"

#include "tb/errors.hpp"

namespace tb {

Int floor_div(const Int& n, const Int& d) {
    Int q = n / d;
    if ((n % d) != 0 && ((n < 0) != (d < 0))) {
        --q;
    }
    return q;
}

Int mod_euclid(const Int& n, const Int& m) {
    Int mm = abs(m);
    Int r = n % mm;
    if (r < 0) {
        r += mm;
    }
    return r;
}

Int mod_inverse(const Int& a, const Int& m) {
    // Extended Euclid on (a mod m, m).
    Int r0 = mod_euclid(a, m), r1 = m;
    Int s0 = 1, s1 = 0;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        Int s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1) {
        raise(errc::condition_not_met,
              "no inverse of " + to_string(a) + " modulo " + to_string(m));
    }
    return mod_euclid(s0, m);
}

bool is_even(const Int& n) { return (n & 1) == 0; }

bool is_odd(const Int& n) { return (n & 1) != 0; }

std::size_t bit_length(const Int& n) {
    if (n == 0) {
        return 0;
    }
    return boost::multiprecision::msb(abs(n)) + 1;
}

std::string to_string(const Int& n) { return n.str(); }

} // namespace tb
