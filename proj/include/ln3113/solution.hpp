#pragma once

#include <stdexcept>
#include <tuple>
#include <vector>

#include "ln3113/arith.hpp"

namespace ln3113 {

// a coprime tuple satisfying x^2 + 3^alpha * 113^beta = y^n
struct Solution {
    Int x, y;
    unsigned n = 3;
    unsigned alpha = 0, beta = 0;

    friend bool operator==(const Solution&, const Solution&) = default;
};

inline bool solution_holds(const Solution& s) {
    if (s.x < 1 || s.y < 2 || s.n < 3) return false;  // y^n > x^2 forces y >= 2
    if (gcd(s.x, s.y) != 1) return false;
    const Int lhs = s.x * s.x + s_unit(s.alpha, s.beta);
    if (s.n > boost::multiprecision::msb(lhs) + 1) return false;  // y^n would overshoot
    return pow_int(s.y, s.n) == lhs;
}

inline Solution checked_solution(Int x, Int y, unsigned n, unsigned alpha, unsigned beta) {
    Solution s{std::move(x), std::move(y), n, alpha, beta};
    if (!solution_holds(s)) throw std::invalid_argument("solution invariant violated");
    return s;
}

inline bool solution_less(const Solution& a, const Solution& b) {
    return std::tie(a.n, a.y, a.alpha, a.beta, a.x) < std::tie(b.n, b.y, b.alpha, b.beta, b.x);
}

// the five known coprime solutions of x^2 + 3^a 113^b = y^n, n >= 3 (19 | n unsettled)
inline const std::vector<Solution>& known_solutions() {
    static const std::vector<Solution> five = {
        {2, 7, 3, 1, 1},
        {10, 7, 3, 5, 0},
        {46, 13, 3, 4, 0},
        {1232, 115, 3, 3, 1},
        {23642486, 82375, 3, 9, 1},
    };
    return five;
}

}  // namespace ln3113
