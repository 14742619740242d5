#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "frob/core_arith.hpp"
#include "frob/oracle.hpp"

using namespace frob;

namespace {

// independent check of the congruence solver: scan all residues mod b
int64 brute_congruence_x(int64 a, int64 b, int64 c) {
    for (int64 x = 0; x < b; ++x) {
        if ((a * x - c) % b == 0) {
            return x;
        }
    }
    FAIL("no residue solves the congruence");
    return -1;
}

} // namespace

TEST_CASE("gcd_ext produces a valid Bezout identity") {
    const bezout e = gcd_ext(7, 9);
    CHECK(e.d == 1);
    CHECK(e.s * 7 + e.t * 9 == 1);

    const bezout id = gcd_ext(5, 0);
    CHECK(id.d == 5);
    CHECK(id.s == 1);
    CHECK(id.t == 0);

    const bezout shared = gcd_ext(4, 6);
    CHECK(shared.d == 2);
    CHECK(shared.s * 4 + shared.t * 6 == 2);

    CHECK_THROWS_AS(gcd_ext(0, 0), domain_error);
}

TEST_CASE("gcd_ext identity holds across signs and ranges") {
    for (int64 a = -25; a <= 25; ++a) {
        for (int64 b = -25; b <= 25; ++b) {
            if (a == 0 && b == 0) {
                continue;
            }
            const bezout e = gcd_ext(a, b);
            CHECK(e.d == std::gcd(a, b));
            CHECK(e.s * a + e.t * b == e.d);
        }
    }
}

TEST_CASE("mod_inverse on small cases") {
    CHECK(mod_inverse(9, 7) == 4); // brute scan: 9*4 = 36 = 1 mod 7
    for (int64 m = 2; m <= 12; ++m) {
        CHECK(mod_inverse(1, m) == 1);
    }
    CHECK_THROWS_AS(mod_inverse(4, 6), domain_error);
    CHECK_THROWS_AS(mod_inverse(0, 5), domain_error);
    CHECK_THROWS_AS(mod_inverse(3, 1), domain_error);
}

TEST_CASE("mod_inverse is a true inverse in [1, m)") {
    for (int64 m = 2; m <= 40; ++m) {
        for (int64 x = -m; x <= 2 * m; ++x) {
            if (std::gcd(((x % m) + m) % m, m) != 1) {
                continue;
            }
            const int64 inv = mod_inverse(x, m);
            CHECK(inv >= 1);
            CHECK(inv < m);
            CHECK((((inv * x) % m) + m) % m == 1);
        }
    }
}

TEST_CASE("coprime_pair validates its invariants") {
    CHECK_NOTHROW(coprime_pair(7, 9));
    CHECK_THROWS_AS(coprime_pair(9, 7), domain_error);   // order
    CHECK_THROWS_AS(coprime_pair(4, 6), domain_error);   // gcd
    CHECK_THROWS_AS(coprime_pair(1, 5), domain_error);   // a >= 2
    CHECK_THROWS_AS(coprime_pair(5, 5), domain_error);
    CHECK_THROWS_AS(coprime_pair(3, (int64(1) << 31) + 1), resource_error);
}

TEST_CASE("solve_congruence matches the worked values") {
    const coprime_pair p(7, 9);
    const congruence_solution s37 = solve_congruence(p, 37);
    CHECK(s37.x1 == 4);
    CHECK(s37.y1 == 1);

    const congruence_solution s11 = solve_congruence(p, 11);
    CHECK(s11.x1 == brute_congruence_x(7, 9, 11));
    CHECK(s11.x1 == 8);
    CHECK(s11.y1 == -5);

    const congruence_solution sb = solve_congruence(p, 9);
    CHECK(sb.x1 == 0);
    CHECK(sb.y1 == 1);

    CHECK_THROWS_AS(solve_congruence(p, 0), domain_error);
}

TEST_CASE("solve_congruence is exact and normalized for all small inputs") {
    for (int64 a = 2; a <= 30; ++a) {
        for (int64 b = a + 1; b <= 30; ++b) {
            if (std::gcd(a, b) != 1) {
                continue;
            }
            const coprime_pair p(a, b);
            for (int64 c = 1; c <= a * b; ++c) {
                const congruence_solution s = solve_congruence(p, c);
                REQUIRE(s.x1 >= 0);
                REQUIRE(s.x1 < b);
                REQUIRE(a * s.x1 + b * s.y1 == c);
            }
        }
    }
}

TEST_CASE("frobenius_two matches Sylvester's values") {
    CHECK(frobenius_two(coprime_pair(7, 9)) == 47);
    CHECK(frobenius_two(coprime_pair(2, 3)) == 1);

    // derived by the dense sieve over {4, 9}
    const generator_set gs({4, 9});
    const auto sieved = sieve_frobenius(gs, 200);
    REQUIRE(sieved.has_value());
    CHECK(*sieved == 23);
    CHECK(frobenius_two(coprime_pair(4, 9)) == 23);
}

TEST_CASE("frobenius_two agrees with the corner-point value") {
    for (int64 a = 2; a <= 30; ++a) {
        for (int64 b = a + 1; b <= 30; ++b) {
            if (std::gcd(a, b) != 1) {
                continue;
            }
            const coprime_pair p(a, b);
            CHECK(frobenius_two(p) == a * (b - 1) + b * (-1));
        }
    }
}

TEST_CASE("frobenius_two value is a gap and everything above is representable") {
    for (int64 a = 2; a <= 30; ++a) {
        for (int64 b = a + 1; b <= 30; ++b) {
            if (std::gcd(a, b) != 1) {
                continue;
            }
            const coprime_pair p(a, b);
            const int64 g = frobenius_two(p);
            const apery_table table = build_apery_table(generator_set({a, b}));
            REQUIRE_FALSE(is_representable(g, table));
            for (int64 n = g + 1; n <= g + a * b; ++n) {
                REQUIRE(is_representable(n, table));
            }
        }
    }
}
