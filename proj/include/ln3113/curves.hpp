#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ln3113/arith.hpp"

// Bounded exhaustive point searches on the three reduction-curve families.
//
// Points are kept in lowest terms with {3,113}-supported denominators. The
// height bound caps the numerator of the x-like coordinate; the denominator
// bound caps the exponent sum of the denominator scale. Completeness is
// always relative to those bounds: enlarging them can only grow the result,
// and callers are expected to print the bounds next to every point list.

namespace ln3113 {

struct MordellCurve {
    unsigned exp3 = 0, exp113 = 0;  // L^2 = M^3 - 3^exp3 * 113^exp113

    Int coefficient() const { return -s_unit(exp3, exp113); }
    std::string id() const { return "mordell:" + std::to_string(exp3) + ":" + std::to_string(exp113); }
};

struct QuarticCurve {
    unsigned exp3 = 0, exp113 = 0;  // A^2 = B^4 - 3^exp3 * 113^exp113

    Int subtrahend() const { return s_unit(exp3, exp113); }
    std::string id() const { return "quartic:" + std::to_string(exp3) + ":" + std::to_string(exp113); }
};

struct DeltaCubic {
    long long delta = 1;  // W^2 = V^3 - 35 d V^2 + 147 d^2 V - 49 d^3

    std::string id() const { return "delta:" + std::to_string(delta); }
};

// coordinates per family, with v = 3^a * 113^b:
//   mordell: (xnum / v^2,     ynum / v^3)
//   quartic: (xnum / v,       ynum / v^2)
//   delta:   (xnum / 3^(2a),  ynum / 3^(3a)), b always 0
struct SIntegralPoint {
    Int xnum, ynum;
    unsigned a = 0, b = 0;

    friend bool operator==(const SIntegralPoint&, const SIntegralPoint&) = default;
};

enum class CurveFamily { mordell, quartic, delta_cubic };

inline std::pair<Int, Int> point_denominators(CurveFamily family, const SIntegralPoint& p) {
    switch (family) {
        case CurveFamily::mordell: {
            Int v = s_unit(p.a, p.b);
            return {v * v, v * v * v};
        }
        case CurveFamily::quartic: {
            Int v = s_unit(p.a, p.b);
            return {v, v * v};
        }
        case CurveFamily::delta_cubic:
            return {pow_int(3, 2 * p.a), pow_int(3, 3 * p.a)};
    }
    throw std::logic_error("point_denominators: bad family");
}

// independent identity checks, used to re-verify every reported point

inline bool on_mordell(const MordellCurve& c, const SIntegralPoint& p) {
    const Int v6 = pow_int(s_unit(p.a, p.b), 6);
    return p.ynum * p.ynum == p.xnum * p.xnum * p.xnum + c.coefficient() * v6;
}

inline bool on_quartic(const QuarticCurve& c, const SIntegralPoint& p) {
    const Int v4 = pow_int(s_unit(p.a, p.b), 4);
    return p.ynum * p.ynum == pow_int(p.xnum, 4) - c.subtrahend() * v4;
}

inline bool on_delta_cubic(const DeltaCubic& c, const SIntegralPoint& p) {
    const Int d = c.delta;
    const Int s2 = pow_int(3, 2 * p.a), s4 = pow_int(3, 4 * p.a), s6 = pow_int(3, 6 * p.a);
    return p.ynum * p.ynum == p.xnum * p.xnum * p.xnum - 35 * d * s2 * p.xnum * p.xnum +
                                  147 * d * d * s4 * p.xnum - 49 * d * d * d * s6;
}

namespace detail {

struct DenomCell {
    unsigned a, b;
    Int v;
};

inline std::vector<DenomCell> s_denominators(unsigned bound) {
    std::vector<DenomCell> cells;
    for (unsigned a = 0; a <= bound; ++a)
        for (unsigned b = 0; a + b <= bound; ++b) cells.push_back({a, b, s_unit(a, b)});
    std::sort(cells.begin(), cells.end(),
              [](const DenomCell& x, const DenomCell& y) { return x.v < y.v; });
    return cells;
}

inline Int ceil_cbrt(const Int& n) {
    Int r = floor_kth_root(n, 3);
    if (r * r * r < n) ++r;
    return r;
}

}  // namespace detail

// all (M, L) = (m/v^2, l/v^3) on L^2 = M^3 + k with |m| <= height_bound,
// v = 3^a 113^b, a + b <= denom_bound, in lowest terms, l normalized >= 0;
// ordered by v then m
inline std::vector<SIntegralPoint> mordell_points(const MordellCurve& curve,
                                                  const Int& height_bound, unsigned denom_bound) {
    std::vector<SIntegralPoint> points;
    if (height_bound < 1) return points;
    for (const auto& cell : detail::s_denominators(denom_bound)) {
        const Int shift = s_unit(curve.exp3, curve.exp113) * pow_int(cell.v, 6);
        Int lo = detail::ceil_cbrt(shift);  // m^3 - shift >= 0
        if (lo < 1) lo = 1;
        if (lo > height_bound) continue;
        if (height_bound <= 2'000'000) {
            // m^3 and shift both fit well below 2^63
            const auto n = shift.convert_to<std::uint64_t>();
            const auto hi = height_bound.convert_to<std::uint64_t>();
            for (auto m = lo.convert_to<std::uint64_t>(); m <= hi; ++m) {
                if (cell.a && m % 3 == 0) continue;
                if (cell.b && m % 113 == 0) continue;
                const std::uint64_t target = m * m * m - n;
                std::uint64_t root;
                if (detail::is_square64(target, &root))
                    points.push_back({Int(m), Int(root), cell.a, cell.b});
            }
        } else {
            for (Int m = lo; m <= height_bound; ++m) {
                if (cell.a && m % 3 == 0) continue;
                if (cell.b && m % 113 == 0) continue;
                const Int target = m * m * m - shift;
                // 64 * 63 * 55 divides out to the same three residue tests
                if (!detail::maybe_square((target % 221760).convert_to<std::uint64_t>())) continue;
                if (auto root = int_sqrt(target)) points.push_back({m, *root, cell.a, cell.b});
            }
        }
    }
    return points;
}

// all (B, A) = (b/v, a/v^2) on A^2 = B^4 - c with |b| <= height_bound,
// both signs of B kept, A normalized >= 0; ordered by v then b
inline std::vector<SIntegralPoint> quartic_points(const QuarticCurve& curve,
                                                  const Int& height_bound,
                                                  unsigned denom_bound = 2) {
    std::vector<SIntegralPoint> points;
    if (height_bound < 1) return points;
    for (const auto& cell : detail::s_denominators(denom_bound)) {
        const Int shift = curve.subtrahend() * pow_int(cell.v, 4);
        Int lo = floor_kth_root(shift, 4);
        while (pow_int(lo, 4) < shift) ++lo;
        if (lo < 1) lo = 1;
        if (lo > height_bound) continue;
        auto scan = [&](const Int& from, const Int& to) {
            for (Int m = from; m <= to; ++m) {
                if (cell.a && m % 3 == 0) continue;
                if (cell.b && m % 113 == 0) continue;
                const Int target = pow_int(m, 4) - shift;
                if (auto root = int_sqrt(target)) points.push_back({m, *root, cell.a, cell.b});
            }
        };
        scan(-height_bound, -lo);
        scan(lo, height_bound);
    }
    return points;
}

// all (V, W) = (m/3^(2a), w/3^(3a)) on the delta cubic with |m| <= height_bound
// and a <= denom3_bound, W normalized >= 0; ordered by a then m
inline std::vector<SIntegralPoint> delta_cubic_points(const DeltaCubic& curve,
                                                      const Int& height_bound,
                                                      unsigned denom3_bound) {
    std::vector<SIntegralPoint> points;
    if (height_bound < 1) return points;
    const Int d = curve.delta;
    for (unsigned a = 0; a <= denom3_bound; ++a) {
        const Int s2 = pow_int(3, 2 * a), s4 = pow_int(3, 4 * a), s6 = pow_int(3, 6 * a);
        const Int c2 = 35 * d * s2, c1 = 147 * d * d * s4, c0 = 49 * d * d * d * s6;
        for (Int m = -height_bound; m <= height_bound; ++m) {
            if (a && m % 3 == 0) continue;
            const Int target = m * m * m - c2 * m * m + c1 * m - c0;
            if (target < 0) continue;
            if (auto root = int_sqrt(target)) points.push_back({m, *root, a, 0});
        }
    }
    return points;
}

// line-oriented serialization: `curve-id xnum/den ynum/den`, /1 omitted
inline std::string point_line(CurveFamily family, const std::string& curve_id,
                              const SIntegralPoint& p) {
    const auto [xden, yden] = point_denominators(family, p);
    std::string line = curve_id + " " + p.xnum.str();
    if (xden != 1) line += "/" + xden.str();
    line += " " + p.ynum.str();
    if (yden != 1) line += "/" + yden.str();
    return line;
}

}  // namespace ln3113
