#pragma once

#include <optional>
#include <vector>

#include "ln3113/curves.hpp"
#include "ln3113/sieve_n3.hpp"
#include "ln3113/solution.hpp"

// The n = 4 branch: 16 quartic classes A^2 = B^4 - 3^i 113^j with
// (alpha, beta) split modulo 4. The lift mirrors the n = 3 one with the
// denominator powers adjusted to the quartic shape. Expected outcome: empty.

namespace ln3113 {

inline std::optional<Solution> lift_quartic_point(const SIntegralPoint& p,
                                                  const QuarticCurve& curve) {
    Int x = abs(p.ynum);
    const Int& y = p.xnum;
    if (x < 1 || y < 1) return std::nullopt;
    if (gcd(x, y) != 1) return std::nullopt;
    const unsigned alpha = 4 * p.a + curve.exp3;
    const unsigned beta = 4 * p.b + curve.exp113;
    if (x * x + s_unit(alpha, beta) != pow_int(y, 4)) return std::nullopt;
    return checked_solution(std::move(x), y, 4, alpha, beta);
}

struct N4Result {
    Int height_bound;
    unsigned denom_bound = 0;
    struct CurvePoints {
        QuarticCurve curve;
        std::vector<SIntegralPoint> points;
    };
    std::vector<CurvePoints> searches;
    std::vector<Solution> solutions;
};

inline N4Result solve_n4(const Int& height_bound, unsigned denom_bound) {
    N4Result result{height_bound, denom_bound, {}, {}};
    for (unsigned i = 0; i < 4; ++i) {
        for (unsigned j = 0; j < 4; ++j) {
            QuarticCurve curve{i, j};
            auto points = quartic_points(curve, height_bound, denom_bound);
            for (const auto& p : points)
                if (auto s = lift_quartic_point(p, curve)) result.solutions.push_back(*s);
            result.searches.push_back({curve, std::move(points)});
        }
    }
    std::sort(result.solutions.begin(), result.solutions.end(), solution_less);
    result.solutions.erase(std::unique(result.solutions.begin(), result.solutions.end()),
                           result.solutions.end());
    return result;
}

}  // namespace ln3113
