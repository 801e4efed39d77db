#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace catmap {

/// Exact signed integer of unbounded size. All matrix entries, Fibonacci
/// numbers and polynomial coefficients live in this type; nothing in the
/// library ever rounds an integer.
using Int = boost::multiprecision::cpp_int;

/// Wide-exponent floating type used only where an approximation is the
/// contract (root estimates, dominant-eigenvalue reports). 100 decimal
/// digits; the exponent range comfortably covers the entries of high
/// dimensional cat-map matrices, which overflow double well before n = 8.
using BigFloat = boost::multiprecision::cpp_bin_float_100;

/// Residue arithmetic modulus / entry type. Grid sizes are desk scale;
/// products are formed in 128 bits so any modulus below 2^64 is safe.
using Residue = std::uint64_t;

inline Residue mul_mod(Residue a, Residue b, Residue modulus) {
    return static_cast<Residue>(static_cast<unsigned __int128>(a) * b % modulus);
}

inline Residue add_mod(Residue a, Residue b, Residue modulus) {
    Residue s = a + b;
    if (s < a || s >= modulus) s -= modulus;
    return s;
}

/// Least non-negative residue of an arbitrary-precision integer.
inline Residue reduce_mod(const Int& v, Residue modulus) {
    Int r = v % modulus;
    if (r < 0) r += modulus;
    return static_cast<Residue>(r);
}

} // namespace catmap
