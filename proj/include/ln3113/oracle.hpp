#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ln3113/solution.hpp"

// Direct enumeration of x^2 + p^alpha q^beta = y^n over a finite budget.
// No reductions and no cleverness: this is the ground truth the algebraic
// branches are checked against, so it stays as close to the definition as
// possible. The prime pair is a parameter so neighboring equations can be
// used to sanity-check the harness; it defaults to (3, 113).

namespace ln3113 {

struct SearchBudget {
    Int y_max = 500;
    unsigned n_min = 3;
    unsigned n_max = 11;
    Int power_cap = 0;  // skip y^n above this when nonzero

    friend bool operator==(const SearchBudget&, const SearchBudget&) = default;
};

namespace detail {

inline void brute_force_u64(std::uint64_t power, std::uint64_t y, unsigned n, unsigned p,
                            unsigned q, std::vector<Solution>& out) {
    unsigned alpha = 0;
    for (std::uint64_t cp = 1; cp < power; ++alpha) {
        unsigned beta = 0;
        for (std::uint64_t c = cp; c < power; ++beta) {
            const std::uint64_t x2 = power - c;
            std::uint64_t x;
            if (is_square64(x2, &x) && std::gcd(x, y) == 1)
                out.push_back({Int(x), Int(y), n, alpha, beta});
            if (c > (power - 1) / q) break;
            c *= q;
        }
        if (cp > (power - 1) / p) break;
        cp *= p;
    }
}

inline void brute_force_big(const Int& power, const Int& y, unsigned n, unsigned p, unsigned q,
                            std::vector<Solution>& out) {
    const auto pmod = (power % 221760).convert_to<std::uint64_t>();
    Int cp = 1;
    std::uint64_t cp_mod = 1;
    for (unsigned alpha = 0; cp < power; ++alpha, cp *= p, cp_mod = cp_mod * p % 221760) {
        Int c = cp;
        std::uint64_t c_mod = cp_mod;
        for (unsigned beta = 0; c < power; ++beta, c *= q, c_mod = c_mod * q % 221760) {
            // residue filter mod 64 * 63 * 55 before the exact square test
            if (!maybe_square((pmod + 221760 - c_mod) % 221760)) continue;
            const Int x2 = power - c;
            if (auto x = int_sqrt(x2); x && *x >= 1 && gcd(*x, y) == 1)
                out.push_back({*x, y, n, alpha, beta});
        }
    }
}

}  // namespace detail

inline std::vector<Solution> brute_force(const SearchBudget& budget, unsigned prime_p = 3,
                                         unsigned prime_q = 113) {
    if (budget.y_max < 1 || budget.n_min < 3 || budget.n_max < budget.n_min)
        throw std::invalid_argument("brute_force: bad budget");
    if (prime_p == prime_q || prime_p % 2 == 0 || prime_q % 2 == 0 ||
        !detail::is_prime_u32(prime_p) || !detail::is_prime_u32(prime_q))
        throw std::invalid_argument("brute_force: wants two distinct odd primes");
    constexpr std::uint64_t u64_cap = std::uint64_t(1) << 62;
    std::vector<Solution> out;
    for (Int y = 1; y <= budget.y_max; ++y) {
        Int power = pow_int(y, budget.n_min);
        for (unsigned n = budget.n_min; n <= budget.n_max; ++n, power *= y) {
            if (budget.power_cap != 0 && power > budget.power_cap) break;
            if (power <= 1) continue;  // y = 1 admits no x >= 1
            if (power <= u64_cap)
                detail::brute_force_u64(power.convert_to<std::uint64_t>(),
                                        y.convert_to<std::uint64_t>(), n, prime_p, prime_q, out);
            else
                detail::brute_force_big(power, y, n, prime_p, prime_q, out);
        }
    }
    return out;  // (y, n, alpha, beta) ascending by construction
}

}  // namespace ln3113
