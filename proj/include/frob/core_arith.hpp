#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "frob/errors.hpp"

namespace frob {

using int64 = std::int64_t;
__extension__ typedef __int128 int128;

// Generators are capped so that triple products still fit 128-bit signed
// intermediates (worst case is an a*b*h-scale product).
inline constexpr int64 max_generator = int64(1) << 31;

// Point cap for region enumeration and residue-table memory.
inline constexpr int64 default_budget = 10'000'000;

inline int64 narrow(int128 v) {
    if (v > int128(std::numeric_limits<int64>::max()) ||
        v < int128(std::numeric_limits<int64>::min())) {
        throw resource_error("intermediate value exceeds the 64-bit range");
    }
    return static_cast<int64>(v);
}

// Division that the surrounding math guarantees to be exact.
inline int128 exact_div(int128 num, int128 den) {
    if (den == 0 || num % den != 0) {
        throw invariant_error("exact_div: division is not exact");
    }
    return num / den;
}

struct bezout {
    int64 d; // gcd(a, b) >= 0
    int64 s; // s*a + t*b = d
    int64 t;
};

// Iterative extended Euclid. Accepts any signs; rejects (0, 0).
inline bezout gcd_ext(int64 a, int64 b) {
    if (a == 0 && b == 0) {
        throw domain_error("gcd_ext: gcd(0, 0) is undefined");
    }
    int64 r0 = a, r1 = b;
    int64 s0 = 1, s1 = 0;
    int64 t0 = 0, t1 = 1;
    while (r1 != 0) {
        const int64 q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    if (r0 < 0) {
        r0 = -r0;
        s0 = -s0;
        t0 = -t0;
    }
    return {r0, s0, t0};
}

// Inverse of x modulo m, normalized into [1, m).
inline int64 mod_inverse(int64 x, int64 m) {
    if (m < 2) {
        throw domain_error("mod_inverse: modulus must be >= 2");
    }
    int64 r = x % m;
    if (r < 0) {
        r += m;
    }
    const bezout e = gcd_ext(r, m);
    if (e.d != 1) {
        throw domain_error("mod_inverse: argument shares a factor with the modulus");
    }
    int64 inv = e.s % m;
    if (inv < 0) {
        inv += m;
    }
    return inv;
}

// A validated generator pair: 2 <= a < b, gcd(a, b) = 1, both small enough
// that a*b and downstream products stay in range.
class coprime_pair {
public:
    coprime_pair(int64 a, int64 b) : a_(a), b_(b) {
        if (a < 2 || b < 2) {
            throw domain_error("coprime_pair: generators must be >= 2");
        }
        if (a >= b) {
            throw domain_error("coprime_pair: generators must satisfy a < b");
        }
        if (b > max_generator) {
            throw resource_error("coprime_pair: generator exceeds 2^31");
        }
        if (std::gcd(a, b) != 1) {
            throw domain_error("coprime_pair: generators must be coprime");
        }
    }

    int64 a() const { return a_; }
    int64 b() const { return b_; }
    int64 ab() const { return a_ * b_; }

private:
    int64 a_;
    int64 b_;
};

struct congruence_solution {
    int64 x1; // in [0, b)
    int64 y1; // may be negative
};

// The unique (x1, y1) with a*x1 + b*y1 = c and 0 <= x1 < b.
inline congruence_solution solve_congruence(const coprime_pair& pair, int64 c) {
    if (c < 1) {
        throw domain_error("solve_congruence: c must be positive");
    }
    const int64 a = pair.a();
    const int64 b = pair.b();
    const int64 x1 = narrow(int128(c % b) * mod_inverse(a, b) % b);
    const int64 y1 = narrow(exact_div(int128(c) - int128(a) * x1, b));
    return {x1, y1};
}

// Sylvester's two-generator value a*b - a - b.
inline int64 frobenius_two(const coprime_pair& pair) {
    return pair.ab() - pair.a() - pair.b();
}

} // namespace frob
