#pragma once

#include <array>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "ln3113/curves.hpp"
#include "ln3113/lucas.hpp"
#include "ln3113/solution.hpp"

// The n >= 5 branch. A solution factors over K = Q(sqrt(-d)) with
// d = 3^(alpha mod 2) * 113^(beta mod 2) in {1, 3, 113, 339}; the factor
// x + e sqrt(-d) = xi^n yields a Lucas sequence whose n-th term must carry a
// primitive divisor q in {3, 113}. q = 3 fails q == +-1 (mod n) outright;
// q = 113 needs 113 coprime to d and n | 113 - (-d/113), which pins the only
// survivors to (d, n) = (1, 7) and (3, 19). The first is settled by the two
// Eq-style sextic searches below; the second stays open by hypothesis and is
// reported, never dropped.

namespace ln3113 {

enum class Verdict {
    eliminated_parity,
    eliminated_class_number,
    eliminated_no_candidate,
    forces_n7,
    forces_n19_excluded,
};

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::eliminated_parity: return "eliminated-parity";
        case Verdict::eliminated_class_number: return "eliminated-class-number";
        case Verdict::eliminated_no_candidate: return "eliminated-no-candidate";
        case Verdict::forces_n7: return "forces-n7";
        case Verdict::forces_n19_excluded: return "forces-n19-excluded";
    }
    throw std::logic_error("verdict_name: bad verdict");
}

inline std::optional<Verdict> verdict_from_name(std::string_view name) {
    for (Verdict v : {Verdict::eliminated_parity, Verdict::eliminated_class_number,
                      Verdict::eliminated_no_candidate, Verdict::forces_n7,
                      Verdict::forces_n19_excluded})
        if (name == verdict_name(v)) return v;
    return std::nullopt;
}

namespace detail {

inline unsigned smallest_prime_factor(unsigned n) {
    for (unsigned p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

}  // namespace detail

// every exponent n >= 3 reduces to 4 (when 4 | n), to 3 (when 3 | n), or to
// its smallest odd prime factor via y^n = (y^(n/p))^p; a reduction landing on
// 19 is outside the method and tagged excluded
struct CanonicalExponent {
    unsigned value;
    bool excluded19;

    friend bool operator==(const CanonicalExponent&, const CanonicalExponent&) = default;
};

inline CanonicalExponent normalize_exponent(unsigned n) {
    if (n < 3) throw std::domain_error("normalize_exponent: wants n >= 3");
    if (n % 4 == 0) return {4, false};
    if (n % 3 == 0) return {3, false};
    unsigned m = n;
    while (m % 2 == 0) m /= 2;  // n == 2 (mod 4) leaves an odd m >= 5
    const unsigned p = detail::smallest_prime_factor(m);
    return {p, p == 19};
}

// even y forces odd x and 1 + 3^alpha == 0 (mod 8); the residue is 2 or 4 for
// every alpha, so the obstruction always stands and y must be odd
inline bool parity_obstruction(unsigned alpha) {
    const unsigned r = (alpha % 2 == 0) ? 1u : 3u;  // 3^alpha mod 8
    return (1 + r) % 8 != 0;
}

struct FieldCase {
    unsigned d;             // 1, 3, 113 or 339
    bool half_basis;        // ring of integers uses {1, (1 + sqrt(-d))/2}
    unsigned class_number;  // 1, 1, 8, 6 respectively
    unsigned co3, co113;    // exponents of e = 3^co3 * 113^co113 next to sqrt(-d)
};

inline unsigned class_number_of(unsigned d) {
    switch (d) {
        case 1: return 1;
        case 3: return 1;
        case 113: return 8;
        case 339: return 6;
    }
    throw std::domain_error("class_number_of: d must be 1, 3, 113 or 339");
}

inline FieldCase field_case(unsigned alpha, unsigned beta) {
    const unsigned d = (alpha % 2 ? 3u : 1u) * (beta % 2 ? 113u : 1u);
    return {d, d % 4 == 3, class_number_of(d), alpha / 2, beta / 2};
}

inline FieldCase field_case_for_d(unsigned d) {
    return {d, d % 4 == 3, class_number_of(d), 0, 0};
}

struct SieveOutcome {
    unsigned d;
    unsigned n;
    Verdict verdict;

    friend bool operator==(const SieveOutcome&, const SieveOutcome&) = default;
};

// n must be an odd prime >= 5
inline SieveOutcome primitive_divisor_sieve(const FieldCase& fc, unsigned n) {
    if (n < 5 || !detail::is_prime_u32(n))
        throw std::domain_error("primitive_divisor_sieve: wants an odd prime n >= 5");
    if (std::gcd(n, fc.class_number) != 1)
        return {fc.d, n, Verdict::eliminated_class_number};  // unreachable: h in {1,6,8}
    // q = 3: a primitive divisor is +-1 mod n and 3 -+ 1 < n
    // q = 113: must avoid (xi - conj)^2 = -4 d t^2 / 4^half, so 113 cannot divide d
    if (fc.d % 113 == 0) return {fc.d, n, Verdict::eliminated_no_candidate};
    // t stays coprime to 113, so the Legendre value reduces to (-d/113)
    const int chi = jacobi(-Int(fc.d), 113);
    if ((113 - chi) % static_cast<int>(n) == 0)
        return {fc.d, n, fc.d == 3 ? Verdict::forces_n19_excluded : Verdict::forces_n7};
    return {fc.d, n, Verdict::eliminated_no_candidate};
}

// verdicts for every odd prime 5 <= n <= n_max and every d
inline std::vector<SieveOutcome> sieve_table(unsigned n_max) {
    std::vector<SieveOutcome> rows;
    for (unsigned n = 5; n <= n_max; n += 2) {
        if (!detail::is_prime_u32(n)) continue;
        for (unsigned d : {1u, 3u, 113u, 339u})
            rows.push_back(primitive_divisor_sieve(field_case_for_d(d), n));
    }
    return rows;
}

namespace detail {

// shared tail of both n = 7 lifts: xi = s + t sqrt(-1), x = |Re(xi^7)|,
// y = s^2 + t^2, alpha = 2 co3, beta = 2 co113
inline std::optional<Solution> finish_n7_lift(const Int& s, const Int& t, unsigned co3,
                                              unsigned co113) {
    auto [re, im] = quadratic_power(s, t, 1, 7);
    if (abs(im) != s_unit(co3, co113)) return std::nullopt;  // e = |L_7 t| = |Im(xi^7)|
    Int x = abs(re);
    Int y = s * s + t * t;
    const unsigned alpha = 2 * co3, beta = 2 * co113;
    if (x < 1 || y < 1) return std::nullopt;
    if (gcd(x, y) != 1) return std::nullopt;
    if (x * x + s_unit(alpha, beta) != pow_int(y, 7)) return std::nullopt;
    return checked_solution(std::move(x), std::move(y), 7, alpha, beta);
}

// t = +-1 sub-case: V = 7 delta s^2 and W = 7 delta^2 Y with Y = 3^q 113^r
inline std::optional<Solution> lift_delta_integral(long long delta, const SIntegralPoint& pt) {
    const Int seven_d = 7 * Int(delta);
    if (pt.xnum % seven_d != 0) return std::nullopt;
    const Int s2 = pt.xnum / seven_d;
    if (s2 < 1) return std::nullopt;
    const auto s = int_sqrt(s2);
    if (!s) return std::nullopt;
    const Int seven_d2 = 7 * Int(delta) * delta;
    if (pt.ynum % seven_d2 != 0) return std::nullopt;
    const Int scale = pt.ynum / seven_d2;
    if (scale < 1) return std::nullopt;
    const auto y_dec = s_decompose(scale);
    if (y_dec.cofactor != 1) return std::nullopt;
    const auto d_dec = s_decompose(Int(delta < 0 ? -delta : delta));
    const Int t = delta > 0 ? 1 : -1;
    return finish_n7_lift(*s, t, 2 * y_dec.exp3 + d_dec.exp3, 2 * y_dec.exp113 + d_dec.exp113);
}

// t = +-3^a sub-case: V = 7 delta (s/t)^2 with denominator 3^(2a) and
// |Y| t^3 = +-113^r, so the W numerator must reduce to a pure 113 power
inline std::optional<Solution> lift_delta_rational(long long delta, const SIntegralPoint& pt) {
    const Int seven_d = 7 * Int(delta);
    if (pt.xnum % seven_d != 0) return std::nullopt;
    const Int s2 = pt.xnum / seven_d;
    if (s2 < 1) return std::nullopt;
    const auto s = int_sqrt(s2);
    if (!s) return std::nullopt;
    const Int seven_d2 = 7 * Int(delta) * delta;
    if (pt.ynum % seven_d2 != 0) return std::nullopt;
    const Int scale = pt.ynum / seven_d2;
    if (scale < 1) return std::nullopt;
    const auto y_dec = s_decompose(scale);
    if (y_dec.exp3 != 0 || y_dec.cofactor != 1) return std::nullopt;
    const auto d_dec = s_decompose(Int(delta < 0 ? -delta : delta));
    const Int t = (delta > 0 ? 1 : -1) * pow_int(3, pt.a);
    return finish_n7_lift(*s, t, pt.a, 2 * y_dec.exp113 + d_dec.exp113);
}

}  // namespace detail

struct N7Result {
    Int height_bound;
    unsigned denom3_bound = 1;
    struct CurvePoints {
        DeltaCubic curve;
        unsigned denom3;
        std::vector<SIntegralPoint> points;
    };
    std::vector<CurvePoints> integral_runs;  // t = +-1, all eight deltas
    std::vector<CurvePoints> rational_runs;  // t = +-3^a, delta = +-113^j
    std::vector<Solution> solutions;         // expected empty
};

inline N7Result solve_n7(const Int& height_bound, unsigned denom3_bound) {
    N7Result result{height_bound, denom3_bound, {}, {}, {}};
    if (result.denom3_bound < 1) result.denom3_bound = 1;
    for (long long delta : {1LL, 3LL, 113LL, 339LL, -1LL, -3LL, -113LL, -339LL}) {
        DeltaCubic curve{delta};
        auto points = delta_cubic_points(curve, height_bound, 0);
        for (const auto& p : points)
            if (auto s = detail::lift_delta_integral(delta, p)) result.solutions.push_back(*s);
        result.integral_runs.push_back({curve, 0, std::move(points)});
    }
    for (long long delta : {1LL, 113LL, -1LL, -113LL}) {
        DeltaCubic curve{delta};
        auto points = delta_cubic_points(curve, height_bound, result.denom3_bound);
        for (const auto& p : points)
            if (auto s = detail::lift_delta_rational(delta, p)) result.solutions.push_back(*s);
        result.rational_runs.push_back({curve, result.denom3_bound, std::move(points)});
    }
    std::sort(result.solutions.begin(), result.solutions.end(), solution_less);
    result.solutions.erase(std::unique(result.solutions.begin(), result.solutions.end()),
                           result.solutions.end());
    return result;
}

}  // namespace ln3113
