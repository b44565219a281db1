#pragma once

#include <optional>
#include <vector>

#include "ln3113/curves.hpp"
#include "ln3113/solution.hpp"

// The n = 3 branch: split (alpha, beta) modulo 6 into 36 curve classes
// L^2 = M^3 - 3^i 113^j, search S-integral points, and lift the survivors
// back to coprime solutions.

namespace ln3113 {

// alpha = modulus * quot3 + rem3, beta = modulus * quot113 + rem113
struct ExponentClass {
    unsigned modulus;
    unsigned rem3, rem113;
    unsigned quot3, quot113;

    unsigned alpha() const { return modulus * quot3 + rem3; }
    unsigned beta() const { return modulus * quot113 + rem113; }

    static ExponentClass split(unsigned alpha, unsigned beta, unsigned modulus) {
        return {modulus, alpha % modulus, beta % modulus, alpha / modulus, beta / modulus};
    }
};

// x = |L| v^3 and y = M v^2 are exactly the point numerators; the denominator
// exponents of the point fix (quot3, quot113) — any larger choice would put 3
// or 113 into gcd(x, y)
inline std::optional<Solution> lift_point(const SIntegralPoint& p, const MordellCurve& curve) {
    Int x = abs(p.ynum);
    const Int& y = p.xnum;
    if (x < 1 || y < 1) return std::nullopt;
    if (gcd(x, y) != 1) return std::nullopt;
    const unsigned alpha = 6 * p.a + curve.exp3;
    const unsigned beta = 6 * p.b + curve.exp113;
    if (x * x + s_unit(alpha, beta) != pow_int(y, 3)) return std::nullopt;
    return checked_solution(std::move(x), y, 3, alpha, beta);
}

struct N3Result {
    Int height_bound;
    unsigned denom_bound = 0;
    struct CurvePoints {
        MordellCurve curve;
        std::vector<SIntegralPoint> points;
    };
    std::vector<CurvePoints> searches;  // all 36 classes, (i, j) order
    std::vector<Solution> solutions;    // lifted, deduplicated, sorted
};

inline N3Result solve_n3(const Int& height_bound, unsigned denom_bound) {
    N3Result result{height_bound, denom_bound, {}, {}};
    for (unsigned i = 0; i < 6; ++i) {
        for (unsigned j = 0; j < 6; ++j) {
            MordellCurve curve{i, j};
            auto points = mordell_points(curve, height_bound, denom_bound);
            for (const auto& p : points)
                if (auto s = lift_point(p, curve)) result.solutions.push_back(*s);
            result.searches.push_back({curve, std::move(points)});
        }
    }
    std::sort(result.solutions.begin(), result.solutions.end(), solution_less);
    result.solutions.erase(std::unique(result.solutions.begin(), result.solutions.end()),
                           result.solutions.end());
    return result;
}

}  // namespace ln3113
