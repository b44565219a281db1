#pragma once

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ln3113/arith.hpp"

// Lucas pairs over imaginary quadratic fields. A pair (eta, conj(eta)) is
// described by its trace P and norm Q; the sequence L_n = (eta^n - conj^n) /
// (eta - conj) obeys L_n = P L_{n-1} - Q L_{n-2}. Pairs are built from
// quadratic integers xi = (s + t sqrt(-d)) / 2^half.

namespace ln3113 {

struct QuadraticInteger {
    Int s, t;
    unsigned d = 1;     // positive and squarefree
    bool half = false;  // denominator 2; requires s == t (mod 2)
};

struct LucasPair {
    Int P;  // eta + conj
    Int Q;  // eta * conj
    Int D;  // (eta - conj)^2 = P^2 - 4Q
};

namespace detail {

inline bool squarefree(unsigned d) {
    for (unsigned p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

}  // namespace detail

// (s + t sqrt(-d))^n as a coefficient pair (u, v) = u + v sqrt(-d)
inline std::pair<Int, Int> quadratic_power(const Int& s, const Int& t, unsigned d, unsigned n) {
    Int u = 1, v = 0;
    for (unsigned i = 0; i < n; ++i) {
        Int nu = u * s - v * t * d;
        Int nv = u * t + v * s;
        u = std::move(nu);
        v = std::move(nv);
    }
    return {u, v};
}

inline LucasPair from_quadratic(const QuadraticInteger& xi) {
    if (xi.d == 0 || !detail::squarefree(xi.d))
        throw std::invalid_argument("quadratic integer: d must be positive and squarefree");
    Int norm4 = xi.s * xi.s + Int(xi.d) * xi.t * xi.t;  // 4^half * norm
    Int P, Q;
    if (xi.half) {
        if ((xi.s - xi.t) % 2 != 0)
            throw std::invalid_argument("quadratic integer: s and t must share parity");
        if (norm4 % 4 != 0)
            throw std::invalid_argument("quadratic integer: norm is not a rational integer");
        P = xi.s;
        Q = norm4 / 4;
    } else {
        P = 2 * xi.s;
        Q = norm4;
    }
    if (Q == 0) throw std::invalid_argument("lucas pair: zero norm");
    if (gcd(P, Q) != 1) throw std::invalid_argument("lucas pair: trace and norm not coprime");
    const Int P2 = P * P;
    if (P == 0 || P2 == Q || P2 == 2 * Q || P2 == 3 * Q || P2 == 4 * Q)
        throw std::invalid_argument("lucas pair: degenerate (unit ratio)");
    return {P, Q, P2 - 4 * Q};
}

inline Int lucas_term(const LucasPair& pair, unsigned n) {
    Int prev = 0, cur = 1;  // L_0, L_1
    if (n == 0) return prev;
    for (unsigned i = 1; i < n; ++i) {
        Int next = pair.P * cur - pair.Q * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// same value through exact power expansion: (xi^n - conj^n) / (xi - conj)
inline Int lucas_term_direct(const QuadraticInteger& xi, unsigned n) {
    from_quadratic(xi);  // reject invalid input the same way
    if (n == 0) return 0;
    auto [u, v] = quadratic_power(xi.s, xi.t, xi.d, n);
    (void)u;
    Int den = xi.half ? Int(xi.t * pow_int(2, n - 1)) : xi.t;
    if (v % den != 0) throw std::logic_error("lucas_term_direct: non-integral term");
    return v / den;
}

// primes found up to the bound; complete is false when |L_n| kept a cofactor
// above the bound, i.e. there may be further primitive divisors unseen
struct PrimitiveDivisors {
    std::vector<Int> primes;
    bool complete = false;
};

namespace detail {

inline std::vector<Int> lucas_terms(const LucasPair& pair, unsigned n) {
    std::vector<Int> terms(n + 1);
    terms[0] = 0;
    if (n >= 1) terms[1] = 1;
    for (unsigned i = 2; i <= n; ++i) terms[i] = pair.P * terms[i - 1] - pair.Q * terms[i - 2];
    return terms;
}

// p | L_n and p divides neither D nor any earlier term
inline bool is_primitive(const Int& p, const std::vector<Int>& terms, const Int& D, unsigned n) {
    if (terms[n] % p != 0) return false;
    if (D % p == 0) return false;
    for (unsigned i = 1; i < n; ++i)
        if (terms[i] % p == 0) return false;
    return true;
}

}  // namespace detail

// exact membership test for explicit candidate primes; no factorization
inline std::vector<Int> primitive_divisors_among(const LucasPair& pair, unsigned n,
                                                 const std::vector<Int>& candidates) {
    if (n < 2) throw std::domain_error("primitive_divisors: wants n >= 2");
    const auto terms = detail::lucas_terms(pair, n);
    std::vector<Int> out;
    for (const Int& p : candidates)
        if (detail::is_primitive(p, terms, pair.D, n)) out.push_back(p);
    return out;
}

inline PrimitiveDivisors primitive_divisors(const LucasPair& pair, unsigned n,
                                            const Int& prime_bound) {
    if (n < 2) throw std::domain_error("primitive_divisors: wants n >= 2");
    const auto terms = detail::lucas_terms(pair, n);
    PrimitiveDivisors result;
    Int rest = abs(terms[n]);
    std::vector<Int> factors;
    Int p = 2;
    while (p <= prime_bound && p * p <= rest) {
        if (rest % p == 0) {
            factors.push_back(p);
            while (rest % p == 0) rest /= p;
        }
        p += (p == 2) ? 1 : 2;
    }
    if (rest > 1 && rest <= prime_bound) {  // prime remainder below the bound
        factors.push_back(rest);
        rest = 1;
    }
    result.complete = rest == 1;
    for (const Int& p : factors)
        if (detail::is_primitive(p, terms, pair.D, n)) result.primes.push_back(p);
    return result;
}

// primitive divisors q satisfy q == (D/q) (mod n)
inline bool congruence_class(const LucasPair& pair, const Int& q, unsigned n) {
    if (pair.D % q == 0)
        throw std::invalid_argument("congruence_class: not applicable, q divides (eta - conj)^2");
    const int chi = jacobi(pair.D, q);
    return (q - chi) % n == 0;
}

}  // namespace ln3113
