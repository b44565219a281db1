#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ln3113/arith.hpp"

// small independent helpers for oracle-style checks; deliberately separate
// from the library implementations they test

namespace testutil {

using ln3113::Int;

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    unsigned __int128 acc = 1, b = base % mod;
    while (exp) {
        if (exp & 1) acc = acc * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

// Legendre symbol by Euler's criterion, for odd prime p
inline int legendre_euler(long long a, std::uint64_t p) {
    long long r = a % static_cast<long long>(p);
    if (r < 0) r += p;
    if (r == 0) return 0;
    const std::uint64_t e = powmod(static_cast<std::uint64_t>(r), (p - 1) / 2, p);
    return e == p - 1 ? -1 : static_cast<int>(e);
}

// quadratic residues mod an odd prime, by enumeration
inline std::vector<bool> squares_mod(std::uint64_t p) {
    std::vector<bool> is_sq(p, false);
    for (std::uint64_t r = 0; r < p; ++r) is_sq[r * r % p] = true;
    return is_sq;
}

inline std::vector<unsigned> primes_upto(unsigned n) {
    std::vector<unsigned> ps;
    for (unsigned k = 2; k <= n; ++k) {
        bool prime = true;
        for (unsigned d = 2; d * d <= k; ++d)
            if (k % d == 0) {
                prime = false;
                break;
            }
        if (prime) ps.push_back(k);
    }
    return ps;
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Int random_int(std::mt19937_64& gen, unsigned bits) {
    Int v = 0;
    for (unsigned i = 0; i < bits; i += 32) {
        v <<= 32;
        v += static_cast<std::uint32_t>(gen());
    }
    return v;
}

}  // namespace testutil
