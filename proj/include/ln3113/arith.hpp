#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace ln3113 {

using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

inline Int pow_int(const Int& base, unsigned exp) {
    Int r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

// 3^e3 * 113^e113
inline Int s_unit(unsigned e3, unsigned e113) {
    return pow_int(3, e3) * pow_int(113, e113);
}

// floor(sqrt(n)) by integer Newton iteration, exact at any magnitude
inline Int floor_sqrt(const Int& n) {
    if (n < 0) throw std::domain_error("floor_sqrt: negative argument");
    if (n < 2) return n;
    const unsigned bits = boost::multiprecision::msb(n) + 1;
    Int x = Int(1) << (bits / 2 + 1);  // >= sqrt(n)
    for (;;) {
        Int y = (x + n / x) >> 1;
        if (y >= x) return x;
        x = y;
    }
}

// the exact square root, or nothing if n is not a perfect square
inline std::optional<Int> int_sqrt(const Int& n) {
    if (n < 0) throw std::domain_error("int_sqrt: negative argument");
    Int r = floor_sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

// floor(n^(1/k)) by binary search on the exact power; no floating point
inline Int floor_kth_root(const Int& n, unsigned k) {
    if (n < 0 || k == 0) throw std::domain_error("floor_kth_root: bad argument");
    if (n < 2 || k == 1) return n;
    const unsigned bits = boost::multiprecision::msb(n) + 1;
    Int lo = 1, hi = Int(1) << (bits / k + 1);  // hi^k > n
    while (lo < hi) {
        Int mid = (lo + hi + 1) >> 1;
        if (pow_int(mid, k) <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

// b with b^k = n, if such an integer exists
inline std::optional<Int> is_perfect_power(const Int& n, unsigned k) {
    if (n < 2 || k < 2) throw std::domain_error("is_perfect_power: wants n >= 2, k >= 2");
    Int b = floor_kth_root(n, k);
    if (pow_int(b, k) == n) return b;
    return std::nullopt;
}

// Jacobi symbol (a/m); equals the Legendre symbol for prime m
inline int jacobi(Int a, Int m) {
    if (m <= 0 || !boost::multiprecision::bit_test(m, 0))
        throw std::invalid_argument("jacobi: modulus must be odd and positive");
    a %= m;
    if (a < 0) a += m;
    int sign = 1;
    while (a != 0) {
        while (!boost::multiprecision::bit_test(a, 0)) {
            a >>= 1;
            const unsigned m8 = static_cast<unsigned>(m & 7);
            if (m8 == 3 || m8 == 5) sign = -sign;
        }
        a.swap(m);
        if ((a & 3) == 3 && (m & 3) == 3) sign = -sign;
        a %= m;
    }
    return m == 1 ? sign : 0;
}

// n = 3^exp3 * 113^exp113 * cofactor with gcd(cofactor, 339) = 1
struct SUnitDecomposition {
    unsigned exp3 = 0;
    unsigned exp113 = 0;
    Int cofactor = 1;

    friend bool operator==(const SUnitDecomposition&, const SUnitDecomposition&) = default;
};

inline SUnitDecomposition s_decompose(Int n) {
    if (n < 1) throw std::domain_error("s_decompose: wants n >= 1");
    SUnitDecomposition d;
    Int q, r;
    for (;;) {
        boost::multiprecision::divide_qr(n, Int(3), q, r);
        if (r != 0) break;
        n = q;
        ++d.exp3;
    }
    for (;;) {
        boost::multiprecision::divide_qr(n, Int(113), q, r);
        if (r != 0) break;
        n = q;
        ++d.exp113;
    }
    d.cofactor = n;
    return d;
}

namespace detail {

inline bool is_prime_u32(unsigned n) {
    if (n < 2) return false;
    for (unsigned p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

// bitmask of quadratic residues modulo m, for m <= 64
constexpr std::uint64_t square_mask(unsigned m) {
    std::uint64_t mask = 0;
    for (unsigned r = 0; r < m; ++r) mask |= std::uint64_t(1) << ((r * r) % m);
    return mask;
}

inline constexpr std::uint64_t kSquares64 = square_mask(64);
inline constexpr std::uint64_t kSquares63 = square_mask(63);
inline constexpr std::uint64_t kSquares55 = square_mask(55);

// cheap reject for the search loops; true means "might be a square"
inline bool maybe_square(std::uint64_t t) {
    return ((kSquares64 >> (t & 63)) & 1) && ((kSquares63 >> (t % 63)) & 1) &&
           ((kSquares55 >> (t % 55)) & 1);
}

inline std::uint64_t isqrt64(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t x = std::uint64_t(1) << ((std::bit_width(n) + 1) / 2);  // >= sqrt(n)
    for (;;) {
        std::uint64_t y = (x + n / x) >> 1;
        if (y >= x) return x;
        x = y;
    }
}

inline bool is_square64(std::uint64_t n, std::uint64_t* root) {
    if (!maybe_square(n)) return false;
    const std::uint64_t r = isqrt64(n);
    if (r * r != n) return false;
    *root = r;
    return true;
}

}  // namespace detail
}  // namespace ln3113
