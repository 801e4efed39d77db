#pragma once

#include "catmap/int_types.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace catmap {

/// Exact i-th Fibonacci number (u_0 = 0, u_1 = 1) by fast doubling.
inline Int fib(std::uint64_t i) {
    // returns (u_k, u_{k+1}) walking the bits of i from the top
    Int a = 0, b = 1;
    for (int bit = 63; bit >= 0; --bit) {
        Int c = a * (2 * b - a); // u_{2k}
        Int d = a * a + b * b;   // u_{2k+1}
        if ((i >> bit) & 1) {
            a = d;
            b = c + d;
        } else {
            a = c;
            b = d;
        }
    }
    return a;
}

/// Least non-negative residue of u_i mod N, computed by running the
/// recurrence in Z/N from the start; the full-size u_i is never formed.
inline Residue fib_mod(std::uint64_t i, Residue modulus) {
    if (modulus < 1) throw std::invalid_argument("fib_mod: modulus must be >= 1");
    Residue a = 0, b = 1 % modulus;
    for (std::uint64_t k = 0; k < i; ++k) {
        Residue next = add_mod(a, b, modulus);
        a = b;
        b = next;
    }
    return a;
}

struct RepeatedPair {
    std::uint64_t index; ///< 1-based position of the second occurrence in the pair sequence
    std::pair<Residue, Residue> pair;
};

/// Scans the pair sequence <phi_1,phi_2>, <phi_2,phi_3>, ... until some pair
/// recurs and reports where. The recurring pair is always <1,1>; anything
/// else would disprove the underlying divisibility argument, so the scan is
/// the computational check of it.
inline RepeatedPair first_repeat_pair(Residue modulus) {
    if (modulus < 2) throw std::invalid_argument("first_repeat_pair: modulus must be >= 2");

    struct PairHash {
        std::size_t operator()(const std::pair<Residue, Residue>& p) const {
            std::size_t h = std::hash<Residue>{}(p.first);
            return h ^ (std::hash<Residue>{}(p.second) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
        }
    };
    std::unordered_set<std::pair<Residue, Residue>, PairHash> seen;

    // pigeonhole: a repeat must appear within N^2+1 pairs
    const unsigned __int128 limit =
        static_cast<unsigned __int128>(modulus) * modulus + 1;
    Residue a = 1 % modulus, b = 1 % modulus;
    for (unsigned __int128 i = 1; i <= limit; ++i) {
        if (!seen.insert({a, b}).second) return {static_cast<std::uint64_t>(i), {a, b}};
        Residue next = add_mod(a, b, modulus);
        a = b;
        b = next;
    }
    throw std::logic_error("first_repeat_pair: no repeat within N^2+1 pairs (pigeonhole violation)");
}

/// Smallest k >= 1 with u_k divisible by N. Guaranteed to exist with k <= N^2.
inline std::uint64_t first_zero_fib_index(Residue modulus) {
    if (modulus < 1) throw std::invalid_argument("first_zero_fib_index: modulus must be >= 1");
    Residue a = 1 % modulus, b = 1 % modulus; // phi_1, phi_2
    std::uint64_t k = 1;
    while (a != 0) {
        Residue next = add_mod(a, b, modulus);
        a = b;
        b = next;
        ++k;
    }
    return k;
}

/// Everything one residue scan of the Fibonacci sequence mod N yields.
struct FibResidueCycle {
    Residue modulus = 1;
    /// Smallest c >= 1 with phi_c == 0 and phi_{c+1} == 1: the index at which
    /// the pattern (0, 1) -- and hence the whole residue sequence -- recurs.
    std::uint64_t cycle_length = 1;
    std::uint64_t first_zero_index = 1;
    std::uint64_t first_repeat_pair_index = 1;
};

inline FibResidueCycle residue_cycle(Residue modulus) {
    if (modulus < 1) throw std::invalid_argument("residue_cycle: modulus must be >= 1");
    FibResidueCycle out;
    out.modulus = modulus;
    if (modulus == 1) {
        // degenerate: every residue is 0 == 1 mod 1, so the cycle closes at 1
        out.first_repeat_pair_index = 2;
        return out;
    }

    Residue a = 1, b = 1; // phi_1, phi_2
    std::uint64_t i = 1;
    std::uint64_t first_zero = 0;
    while (true) {
        if (a == 0 && first_zero == 0) first_zero = i;
        if (a == 0 && b == 1) break;
        Residue next = add_mod(a, b, modulus);
        a = b;
        b = next;
        ++i;
    }
    out.cycle_length = i;
    out.first_zero_index = first_zero;
    // the pair sequence is purely periodic, so its first repeat closes the
    // same cycle: <phi_1,phi_2> recurs one position past the cycle length
    out.first_repeat_pair_index = i + 1;
    return out;
}

} // namespace catmap
