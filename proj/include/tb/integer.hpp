#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>

namespace tb {

// Entries of Farey reflection products grow without bound, so every
// integer in the library is arbitrary precision.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

// Floor division (rounds toward -inf); d must be nonzero.
Int floor_div(const Int& n, const Int& d);

// Euclidean residue in [0, |m|); m must be nonzero.
Int mod_euclid(const Int& n, const Int& m);

// Inverse of a modulo m (m >= 1, gcd(a, m) = 1), in [0, m).
Int mod_inverse(const Int& a, const Int& m);

bool is_even(const Int& n);
bool is_odd(const Int& n);

// Number of bits of |n|; bit_length(0) = 0.
std::size_t bit_length(const Int& n);

std::string to_string(const Int& n);

} // namespace tb
