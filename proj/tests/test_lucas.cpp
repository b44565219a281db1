#include <catch_amalgamated.hpp>

#include <algorithm>

#include "ln3113/lucas.hpp"
#include "test_util.hpp"

using namespace ln3113;

namespace {

// validity of (s, t, d, half) as a Lucas-pair source, written out independently
bool valid_by_definition(const Int& s, const Int& t, unsigned d, bool half) {
    if (d == 0 || !detail::squarefree(d)) return false;
    if (half && (s - t) % 2 != 0) return false;
    const Int norm4 = s * s + Int(d) * t * t;
    if (half && norm4 % 4 != 0) return false;
    const Int P = half ? s : 2 * s;
    const Int Q = half ? norm4 / 4 : norm4;
    if (Q == 0 || gcd(P, Q) != 1) return false;
    const Int P2 = P * P;
    return P != 0 && P2 != Q && P2 != 2 * Q && P2 != 3 * Q && P2 != 4 * Q;
}

// primitive divisors straight from the definition, by full trial factorization;
// callers keep the terms small enough for 64-bit factoring
std::vector<Int> primitive_by_definition(const LucasPair& pair, unsigned n) {
    std::vector<Int> terms(n + 1);
    terms[0] = 0;
    terms[1] = 1;
    for (unsigned i = 2; i <= n; ++i) terms[i] = pair.P * terms[i - 1] - pair.Q * terms[i - 2];
    std::uint64_t rest = abs(terms[n]).convert_to<std::uint64_t>();
    std::vector<std::uint64_t> factors;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        factors.push_back(p);
        while (rest % p == 0) rest /= p;
    }
    if (rest > 1) factors.push_back(rest);
    std::vector<Int> out;
    for (std::uint64_t f : factors) {
        const Int p(f);
        bool primitive = pair.D % p != 0;
        for (unsigned i = 1; i < n && primitive; ++i)
            if (terms[i] % p == 0) primitive = false;
        if (primitive) out.push_back(p);
    }
    return out;
}

}  // namespace

TEST_CASE("from_quadratic maps trace and norm") {
    const auto p1 = from_quadratic({2, 1, 1, false});  // 2 + i
    CHECK(p1.P == 4);
    CHECK(p1.Q == 5);
    CHECK(p1.D == -4);

    const auto p2 = from_quadratic({1, 1, 7, true});  // (1 + sqrt(-7)) / 2
    CHECK(p2.P == 1);
    CHECK(p2.Q == 2);
    CHECK(p2.D == -7);

    CHECK_THROWS_AS(from_quadratic({1, 1, 3, false}), std::invalid_argument);  // gcd(2, 4) = 2
    CHECK_THROWS_AS(from_quadratic({1, 1, 3, true}), std::invalid_argument);   // sixth root of unity
    CHECK_THROWS_AS(from_quadratic({0, 2, 1, false}), std::invalid_argument);  // P = 0
    CHECK_THROWS_AS(from_quadratic({1, 0, 1, false}), std::invalid_argument);  // rational ratio
    CHECK_THROWS_AS(from_quadratic({1, 1, 4, false}), std::invalid_argument);  // d not squarefree
    CHECK_THROWS_AS(from_quadratic({2, 1, 7, true}), std::invalid_argument);   // parity
    CHECK_THROWS_AS(from_quadratic({1, 1, 1, true}), std::invalid_argument);   // norm 2/4
}

TEST_CASE("from_quadratic accepts exactly the definitional inputs") {
    auto gen = testutil::rng(201);
    int accepted = 0;
    for (int i = 0; i < 3000; ++i) {
        const Int s = Int(static_cast<long long>(gen() % 17)) - 8;
        const Int t = Int(static_cast<long long>(gen() % 9)) - 4;
        const unsigned d = 1 + static_cast<unsigned>(gen() % 16);
        const bool half = gen() % 2;
        bool ok;
        try {
            from_quadratic({s, t, d, half});
            ok = true;
            ++accepted;
        } catch (const std::invalid_argument&) {
            ok = false;
        }
        CHECK(ok == valid_by_definition(s, t, d, half));
    }
    CHECK(accepted > 100);  // the generator reaches the accepting region
}

TEST_CASE("lucas_term follows the recurrence") {
    const LucasPair p{4, 5, -4};
    CHECK(lucas_term(p, 0) == 0);
    CHECK(lucas_term(p, 1) == 1);
    CHECK(lucas_term(p, 7) == -29);
    const LucasPair q{1, 2, -7};
    CHECK(lucas_term(q, 5) == -1);
    const LucasPair fib{1, -1, 5};
    CHECK(lucas_term(fib, 12) == 144);
}

TEST_CASE("lucas_term_direct matches the recurrence on examples") {
    CHECK(lucas_term_direct({2, 1, 1, false}, 7) == -29);
    CHECK(lucas_term_direct({2, 1, 1, false}, 1) == 1);
    CHECK(lucas_term_direct({1, 1, 7, true}, 5) == -1);
}

TEST_CASE("recurrence and direct expansion agree everywhere") {
    auto gen = testutil::rng(202);
    int tested = 0;
    while (tested < 200) {
        const Int s = Int(static_cast<long long>(gen() % 17)) - 8;
        const Int t = Int(static_cast<long long>(gen() % 9)) - 4;
        const unsigned d = 1 + static_cast<unsigned>(gen() % 16);
        const bool half = gen() % 2;
        const QuadraticInteger xi{s, t, d, half};
        LucasPair pair;
        try {
            pair = from_quadratic(xi);
        } catch (const std::invalid_argument&) {
            continue;
        }
        ++tested;
        for (unsigned n = 0; n <= 40; ++n) CHECK(lucas_term(pair, n) == lucas_term_direct(xi, n));
    }
}

TEST_CASE("index divisibility carries to terms") {
    auto gen = testutil::rng(203);
    int tested = 0;
    while (tested < 60) {
        const Int s = Int(static_cast<long long>(gen() % 13)) - 6;
        const Int t = Int(static_cast<long long>(gen() % 7)) - 3;
        const unsigned d = 1 + static_cast<unsigned>(gen() % 12);
        LucasPair pair;
        try {
            pair = from_quadratic({s, t, d, false});
        } catch (const std::invalid_argument&) {
            continue;
        }
        ++tested;
        for (unsigned m = 1; m <= 15; ++m)
            for (unsigned n = m; n <= 30; n += m)
                CHECK(lucas_term(pair, n) % lucas_term(pair, m) == 0);
    }
}

TEST_CASE("primitive divisors on the known defective cases") {
    const LucasPair p12{1, 2, -7};
    const auto r1 = primitive_divisors(p12, 5, 13);  // L_5 = -1
    CHECK(r1.primes.empty());
    CHECK(r1.complete);
    CHECK(primitive_divisors_among(p12, 5, {2, 3, 5, 7, 11, 13}).empty());

    const LucasPair fib{1, -1, 5};
    const auto r2 = primitive_divisors(fib, 12, 13);  // L_12 = 144 = 2^4 3^2
    CHECK(r2.primes.empty());
    CHECK(r2.complete);

    const LucasPair p45{4, 5, -4};
    CHECK(primitive_divisors_among(p45, 2, {2}).empty());  // L_2 = 4 but 2 | D = -4
}

TEST_CASE("primitive divisors that do exist are found") {
    const LucasPair fib{1, -1, 5};
    const auto r = primitive_divisors(fib, 7, 100);  // L_7 = 13
    REQUIRE(r.primes.size() == 1);
    CHECK(r.primes[0] == 13);
    CHECK(r.complete);
    CHECK(primitive_divisors_among(fib, 7, {2, 3, 5, 7, 11, 13}) == std::vector<Int>{13});

    // L_7(2 + i) = -29 and the bound stops short of 29
    const auto incomplete = primitive_divisors({4, 5, -4}, 7, 20);
    CHECK(incomplete.primes.empty());
    CHECK(!incomplete.complete);
    const auto complete = primitive_divisors({4, 5, -4}, 7, 29);
    CHECK(complete.primes == std::vector<Int>{29});
    CHECK(complete.complete);
}

TEST_CASE("primitive divisors match the definitional oracle") {
    auto gen = testutil::rng(204);
    int tested = 0;
    while (tested < 40) {
        const Int s = Int(static_cast<long long>(gen() % 5)) - 2;
        const Int t = Int(static_cast<long long>(gen() % 5)) - 2;
        const unsigned d = 1 + static_cast<unsigned>(gen() % 5);
        LucasPair pair;
        try {
            pair = from_quadratic({s, t, d, false});
        } catch (const std::invalid_argument&) {
            continue;
        }
        ++tested;
        for (unsigned n = 2; n <= 14; ++n) {
            const auto expected = primitive_by_definition(pair, n);
            const auto got = primitive_divisors(pair, n, Int("10000000000"));
            CHECK(got.complete);
            CHECK(got.primes == expected);
        }
    }
}

TEST_CASE("congruence class of primitive divisors") {
    const LucasPair d1{4, 5, -4};  // D = -4, the d = 1 shape
    CHECK(congruence_class(d1, 113, 7));
    CHECK(!congruence_class(d1, 113, 5));

    const auto d3 = from_quadratic({5, 1, 3, true});  // D = -3
    CHECK(d3.D == -3);
    CHECK(congruence_class(d3, 113, 19));

    const auto big_t = from_quadratic({2, 5, 3, false});  // D = -300, 5 | D
    CHECK_THROWS_AS(congruence_class(big_t, 5, 7), std::invalid_argument);
}

TEST_CASE("found primitive divisors satisfy the congruence") {
    auto gen = testutil::rng(205);
    int tested = 0, found = 0;
    while (tested < 50) {
        const Int s = Int(static_cast<long long>(gen() % 9)) - 4;
        const Int t = Int(static_cast<long long>(gen() % 5)) - 2;
        const unsigned d = 1 + static_cast<unsigned>(gen() % 15);
        LucasPair pair;
        try {
            pair = from_quadratic({s, t, d, gen() % 2 == 0});
        } catch (const std::invalid_argument&) {
            continue;
        }
        ++tested;
        for (unsigned n = 2; n <= 30; ++n) {
            for (const Int& p : primitive_divisors(pair, n, 50000).primes) {
                if (Int(2 * n) % p == 0) continue;
                ++found;
                CHECK(congruence_class(pair, p, n));
            }
        }
    }
    CHECK(found > 200);
}
