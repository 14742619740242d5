#pragma once

#include <array>
#include <optional>
#include <vector>

#include "frob/core_arith.hpp"
#include "frob/errors.hpp"
#include "frob/lattice_region.hpp"
#include "frob/oracle.hpp"

namespace frob {

// c = l*b - h*a with 1 < l < a and 0 < h < b, plus the division a = q*l + r.
// Exactly the exceptional values admit such a decomposition.
struct decomposition {
    int64 h = 0;
    int64 l = 0;
    int64 q = 0;
    int64 r = 0;
};

// l is recovered as c * b^{-1} (mod a); h then comes out of an exact
// division. Returns nullopt exactly when c is not exceptional for the pair.
inline std::optional<decomposition> decompose(const coprime_pair& pair, int64 c) {
    if (c <= pair.b()) {
        throw domain_error("decompose: requires c > b");
    }
    const int64 a = pair.a();
    const int64 b = pair.b();
    const int64 l = narrow(int128(c % a) * mod_inverse(b, a) % a);
    if (l <= 1) {
        return std::nullopt;
    }
    const int128 num = int128(l) * b - c;
    if (num <= 0) {
        // h <= 0 means c = l*b + |h|*a is already representable by {a, b}
        return std::nullopt;
    }
    const int64 h = narrow(exact_div(num, a));
    if (h >= b) {
        throw invariant_error("decompose: h out of range for c > b");
    }
    return decomposition{h, l, a / l, a % l};
}

enum class candidate_kind { f_prime, q_prime_1, q_prime_2 };

inline const char* candidate_kind_name(candidate_kind k) {
    switch (k) {
    case candidate_kind::f_prime: return "F_prime";
    case candidate_kind::q_prime_1: return "Q1_prime";
    case candidate_kind::q_prime_2: return "Q2_prime";
    }
    return "?";
}

// A point (u, v) in the plane with origin at (b, 0), u running along -x and
// v along -y. Its x-y value is a*b - a*u - b*v.
struct candidate_point {
    candidate_kind kind = candidate_kind::f_prime;
    int64 u = 0;
    int64 v = 0;
    int64 value_xy = 0;
};

inline int64 candidate_value(const coprime_pair& pair, int64 u, int64 v) {
    return narrow(int128(pair.a()) * pair.b() - int128(pair.a()) * u - int128(pair.b()) * v);
}

inline lattice_point uv_to_xy(const coprime_pair& pair, int64 u, int64 v) {
    return {pair.b() - u, -v};
}

// The three competing gap candidates:
//   F'  = (floor((a*h - h) / l) + 1, 1)   just past the line l*u + h*v = a*h
//   Q1' = ((q-1)*h + 1, r + 1)
//   Q2' = (q*h + 1, 1)                    only in play when r >= 2
inline std::vector<candidate_point> candidate_points(const coprime_pair& pair,
                                                     const decomposition& dec) {
    std::vector<candidate_point> out;
    const int64 uf = narrow((int128(pair.a()) * dec.h - dec.h) / dec.l + 1);
    out.push_back({candidate_kind::f_prime, uf, 1, candidate_value(pair, uf, 1)});
    const int64 u1 = narrow(int128(dec.q - 1) * dec.h + 1);
    out.push_back({candidate_kind::q_prime_1, u1, dec.r + 1, candidate_value(pair, u1, dec.r + 1)});
    if (dec.r >= 2) {
        const int64 u2 = narrow(int128(dec.q) * dec.h + 1);
        out.push_back({candidate_kind::q_prime_2, u2, 1, candidate_value(pair, u2, 1)});
    }
    return out;
}

enum class case_label {
    a_zero_mod_l,    // r = 0: Q1' wins outright
    a_one_mod_l_q1,  // r = 1, b < a*h
    a_one_mod_l_f,   // r = 1, b > a*h
    a_other_mod_l_q2, // r >= 2, b*r > a*h
    a_other_mod_l_q1, // r >= 2, b*r < a*h
    non_exceptional,
};

inline const char* case_label_name(case_label label) {
    switch (label) {
    case case_label::a_zero_mod_l: return "r0_q1";
    case case_label::a_one_mod_l_q1: return "r1_q1";
    case case_label::a_one_mod_l_f: return "r1_f";
    case case_label::a_other_mod_l_q2: return "rge2_q2";
    case case_label::a_other_mod_l_q1: return "rge2_q1";
    case case_label::non_exceptional: return "non_exceptional";
    }
    return "?";
}

// Branch selection by exact integer cross-multiplication. The equality
// boundaries cannot occur (b = a*h would make b a multiple of a; b*r = a*h
// would make c a multiple of b), so hitting one is an internal error.
inline case_label dispatch(const coprime_pair& pair, const decomposition& dec) {
    if (dec.r == 0) {
        return case_label::a_zero_mod_l;
    }
    const int128 lhs = int128(pair.b()) * dec.r;
    const int128 rhs = int128(pair.a()) * dec.h;
    if (lhs == rhs) {
        throw invariant_error(dec.r == 1
                                  ? "dispatch: b = a*h contradicts gcd(a, b) = 1"
                                  : "dispatch: b*r = a*h contradicts c being exceptional");
    }
    if (dec.r == 1) {
        return lhs < rhs ? case_label::a_one_mod_l_q1 : case_label::a_one_mod_l_f;
    }
    return lhs > rhs ? case_label::a_other_mod_l_q2 : case_label::a_other_mod_l_q1;
}

inline candidate_kind winning_candidate(case_label label) {
    switch (label) {
    case case_label::a_zero_mod_l:
    case case_label::a_one_mod_l_q1:
    case case_label::a_other_mod_l_q1:
        return candidate_kind::q_prime_1;
    case case_label::a_one_mod_l_f:
        return candidate_kind::f_prime;
    case case_label::a_other_mod_l_q2:
        return candidate_kind::q_prime_2;
    case case_label::non_exceptional:
        break;
    }
    throw domain_error("winning_candidate: no candidate for a non-exceptional value");
}

inline int64 formula_value(const coprime_pair& pair, const decomposition& dec, case_label label) {
    const candidate_kind kind = winning_candidate(label);
    for (const candidate_point& cand : candidate_points(pair, dec)) {
        if (cand.kind == kind) {
            return cand.value_xy;
        }
    }
    throw invariant_error("formula_value: winning candidate missing from the candidate list");
}

inline int64 closed_form_g3(int64 a, int64 b, int64 c);

// g(a, b, c) = d*g(a/d, b/d, c) + c*(d-1) for d = gcd(a, b) > 1. When the
// reduced pair contains 1 the inner value is -1 by convention (a semigroup
// containing 1 has no gaps).
inline int64 johnson_reduce(int64 a, int64 b, int64 c) {
    if (a < 2 || b < 2 || c < 2) {
        throw domain_error("johnson_reduce: generators must be >= 2");
    }
    if (a > max_generator || b > max_generator || c > max_generator) {
        throw resource_error("johnson_reduce: generator exceeds 2^31");
    }
    const int64 d = std::gcd(a, b);
    if (d == 1) {
        throw domain_error("johnson_reduce: requires gcd(a, b) > 1");
    }
    if (std::gcd(d, c) != 1) {
        throw domain_error("johnson_reduce: the triple must have gcd 1");
    }
    const int64 a0 = a / d;
    const int64 b0 = b / d;
    const int64 inner = std::min(a0, b0) == 1 ? -1 : closed_form_g3(a0, b0, c);
    return narrow(int128(d) * inner + int128(c) * (d - 1));
}

// Frobenius number of three generators. Inputs are sorted internally;
// non-coprime leading pairs go through the Johnson reduction, values that
// are not exceptional fall back to the two-generator answer, and the rest
// dispatch to the winning candidate's value.
inline int64 closed_form_g3(int64 a, int64 b, int64 c) {
    std::array<int64, 3> v{a, b, c};
    std::sort(v.begin(), v.end());
    if (v[0] < 2) {
        throw domain_error("closed_form_g3: generators must be >= 2");
    }
    if (v[2] > max_generator) {
        throw resource_error("closed_form_g3: generator exceeds 2^31");
    }
    if (std::gcd(std::gcd(v[0], v[1]), v[2]) != 1) {
        throw domain_error("closed_form_g3: generators must have gcd 1 as a triple");
    }
    if (std::gcd(v[0], v[1]) > 1) {
        return johnson_reduce(v[0], v[1], v[2]);
    }
    const coprime_pair pair(v[0], v[1]);
    if (v[2] == v[1]) {
        return frobenius_two(pair); // duplicate generator adds nothing
    }
    const auto dec = decompose(pair, v[2]);
    if (!dec) {
        return frobenius_two(pair);
    }
    return formula_value(pair, *dec, dispatch(pair, *dec));
}

// The family (a, h*a + d, h*a + 2d): g = a*b - a*(K+1) - b with
// K = h*floor((a-1)/2).
inline int64 selmer_g(int64 a, int64 h, int64 d) {
    if (a < 3) {
        throw domain_error("selmer_g: requires a >= 3");
    }
    if (h < 1 || d < 1) {
        throw domain_error("selmer_g: requires h >= 1 and d >= 1");
    }
    if (std::gcd(a, d) != 1) {
        throw domain_error("selmer_g: requires gcd(a, d) = 1");
    }
    const int128 b = int128(h) * a + d;
    const int128 c = b + d;
    if (a > max_generator || b > max_generator || c > max_generator) {
        throw resource_error("selmer_g: triple member exceeds 2^31");
    }
    const int64 k = h * ((a - 1) / 2);
    return narrow(int128(a) * b - int128(a) * (k + 1) - b);
}

struct selmer_family_triple {
    int64 a = 0;
    int64 b = 0;
    int64 c = 0;
};

inline selmer_family_triple selmer_triple(int64 a, int64 h, int64 d) {
    return {a, narrow(int128(h) * a + d), narrow(int128(h) * a + 2 * int128(d))};
}

enum class expressibility {
    case1_f,    // l*u + h*v > a*h: past the budget line, never expressible
    case2_p,    // the pair budget a*h - (l*u + h*v) is not a {l, h} value
    case3_q,    // the pair budget is fine but no c-count completes a witness
    expressible,
};

inline const char* expressibility_name(expressibility e) {
    switch (e) {
    case expressibility::case1_f: return "case1_F";
    case expressibility::case2_p: return "case2_P";
    case expressibility::case3_q: return "case3_Q";
    case expressibility::expressible: return "expressible";
    }
    return "?";
}

// Is n = l*x + h*y solvable with x, y >= 0? Classical residue argument,
// O(log); handles gcd(l, h) > 1 and unit generators.
inline bool representable_by_pair(int64 n, int64 l, int64 h) {
    if (n < 0) {
        return false;
    }
    const int64 d = std::gcd(l, h);
    if (n % d != 0) {
        return false;
    }
    n /= d;
    l /= d;
    h /= d;
    if (l == 1 || h == 1) {
        return true;
    }
    const int64 x = narrow(int128(n % h) * mod_inverse(l, h) % h);
    return int128(l) * x <= n;
}

struct candidate_explanation {
    expressibility kind = expressibility::expressible;
    std::optional<representation_witness> witness; // set iff expressible
};

// Why a u-v point is (or is not) a gap of {a, b, c}. A witness, when one
// exists, uses c exactly c3 times with c1 = h*c3 - u and c2 = a - v - l*c3.
inline candidate_explanation explain_candidate(const coprime_pair& pair, const decomposition& dec,
                                               const candidate_point& cand) {
    if (cand.u < 1 || cand.v < 1) {
        throw domain_error("explain_candidate: candidate must have positive u, v");
    }
    const int64 a = pair.a();
    const int128 slack = int128(a) * dec.h - (int128(dec.l) * cand.u + int128(dec.h) * cand.v);
    if (slack < 0) {
        return {expressibility::case1_f, std::nullopt};
    }
    if (!representable_by_pair(narrow(slack), dec.l, dec.h)) {
        return {expressibility::case2_p, std::nullopt};
    }
    const int64 lo = (cand.u + dec.h - 1) / dec.h; // smallest c3 with h*c3 >= u
    const int64 hi = a - cand.v < 0 ? -1 : (a - cand.v) / dec.l;
    if (lo > hi) {
        return {expressibility::case3_q, std::nullopt};
    }
    const representation_witness w{narrow(int128(dec.h) * lo - cand.u),
                                   narrow(a - cand.v - int128(dec.l) * lo), lo};
    return {expressibility::expressible, w};
}

} // namespace frob
