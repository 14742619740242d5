#pragma once

#include <algorithm>
#include <ostream>
#include <vector>

#include "frob/core_arith.hpp"
#include "frob/errors.hpp"

namespace frob {

struct lattice_point {
    int64 x = 0;
    int64 y = 0;

    friend bool operator==(const lattice_point&, const lattice_point&) = default;
    friend std::ostream& operator<<(std::ostream& os, const lattice_point& p) {
        return os << "(" << p.x << ", " << p.y << ")";
    }
};

// Three-color partition of the strip around the segment from (0, a) to
// (b, 0): green on the axes (value divisible by a or b), blue in the open
// upper triangle D+, red in the lower triangle D-.
enum class point_color { green, blue, red, outside };

inline const char* point_color_name(point_color c) {
    switch (c) {
    case point_color::green: return "green";
    case point_color::blue: return "blue";
    case point_color::red: return "red";
    case point_color::outside: return "outside";
    }
    return "?";
}

// The value a*x + b*y attached to a lattice point.
inline int64 linear_form(const coprime_pair& pair, lattice_point p) {
    return narrow(int128(pair.a()) * p.x + int128(pair.b()) * p.y);
}

inline point_color classify_point(const coprime_pair& pair, lattice_point p) {
    const int64 a = pair.a();
    const int64 b = pair.b();
    const int128 v = int128(a) * p.x + int128(b) * p.y;
    const int128 ab = int128(a) * b;
    if ((p.x == 0 || p.y == 0) && v >= 0 && v <= ab) {
        return point_color::green;
    }
    if (p.x >= 1 && p.x <= b - 1) {
        // for x, y >= 1 the box bounds x < b, y < a follow from v < ab
        if (p.y >= 1 && v < ab) {
            return point_color::blue;
        }
        // for y <= -1 the bounds y > -a and v < ab follow from v > 0
        if (p.y <= -1 && v > 0) {
            return point_color::red;
        }
    }
    return point_color::outside;
}

// Reflection (x, y) -> (b-x, -y). Swaps blue and red; the two values sum
// to a*b.
inline lattice_point mirror_point(const coprime_pair& pair, lattice_point p) {
    const point_color c = classify_point(pair, p);
    if (c != point_color::blue && c != point_color::red) {
        throw domain_error("mirror_point: point is not in D+ or D-");
    }
    return {pair.b() - p.x, -p.y};
}

struct region_census {
    int64 blue_count = 0;
    int64 red_count = 0;
    int64 green_count = 0;
};

struct region {
    std::vector<lattice_point> blue;
    std::vector<lattice_point> red;
    std::vector<lattice_point> green;
    region_census census;
};

// Materializes the full strip, lists sorted lexicographically by (x, y).
// The counts are checked against the closed forms (a-1)(b-1)/2 and a+b+1;
// a mismatch means the classifier is broken.
inline region enumerate_region(const coprime_pair& pair, int64 budget = default_budget) {
    const int64 a = pair.a();
    const int64 b = pair.b();
    if (int128(a) * b > budget) {
        throw resource_error("enumerate_region: a*b exceeds the enumeration budget");
    }
    region out;
    for (int64 x = 0; x <= b; ++x) {
        for (int64 y = -a; y <= a; ++y) {
            const lattice_point p{x, y};
            switch (classify_point(pair, p)) {
            case point_color::blue:
                // off-axis points cannot carry multiples of a or b
                if (linear_form(pair, p) % a == 0 || linear_form(pair, p) % b == 0) {
                    throw invariant_error("enumerate_region: off-axis multiple inside D");
                }
                out.blue.push_back(p);
                break;
            case point_color::red:
                if (linear_form(pair, p) % a == 0 || linear_form(pair, p) % b == 0) {
                    throw invariant_error("enumerate_region: off-axis multiple inside D");
                }
                out.red.push_back(p);
                break;
            case point_color::green:
                out.green.push_back(p);
                break;
            case point_color::outside:
                break;
            }
        }
    }
    out.census = {static_cast<int64>(out.blue.size()), static_cast<int64>(out.red.size()),
                  static_cast<int64>(out.green.size())};
    const int64 half = narrow(exact_div(int128(a - 1) * (b - 1), 2));
    if (out.census.blue_count != half || out.census.red_count != half ||
        out.census.green_count != a + b + 1) {
        throw invariant_error("enumerate_region: census does not match the closed forms");
    }
    return out;
}

enum class brauer_kind { positive_form, negative_form, green_multiple };

// Either c = a*x + b*y (positive form) or c = a*b - a*x - b*y (negative
// form), each with x, y > 0 — never both — unless a or b divides c.
struct brauer_form {
    brauer_kind kind = brauer_kind::green_multiple;
    int64 x = 0;
    int64 y = 0;
};

inline brauer_form brauer_classify(const coprime_pair& pair, int64 c) {
    if (c <= 0 || c >= pair.ab()) {
        throw domain_error("brauer_classify: c must lie strictly between 0 and a*b");
    }
    if (c % pair.a() == 0 || c % pair.b() == 0) {
        return {brauer_kind::green_multiple, 0, 0};
    }
    const congruence_solution s = solve_congruence(pair, c);
    if (s.y1 > 0) {
        return {brauer_kind::positive_form, s.x1, s.y1};
    }
    return {brauer_kind::negative_form, pair.b() - s.x1, -s.y1};
}

// c is exceptional when adding it as a third generator lowers the Frobenius
// number, i.e. when c is a red-point value. Requires c > b.
inline bool is_exceptional(const coprime_pair& pair, int64 c) {
    if (c <= pair.b()) {
        throw domain_error("is_exceptional: requires c > b");
    }
    if (c >= pair.ab()) {
        return false;
    }
    const congruence_solution s = solve_congruence(pair, c);
    return s.x1 >= 1 && s.y1 <= -1;
}

struct exceptional_value {
    int64 c = 0;
    lattice_point point;
};

// All red-point values strictly above the line a*x + b*y = b, descending.
// Values inside the strip are pairwise distinct, so the order is total; the
// top entry is always a*b - a - b at (b-1, -1).
inline std::vector<exceptional_value> enumerate_exceptional(const coprime_pair& pair,
                                                            int64 budget = default_budget) {
    const int64 a = pair.a();
    const int64 b = pair.b();
    if (int128(a) * b > budget) {
        throw resource_error("enumerate_exceptional: a*b exceeds the enumeration budget");
    }
    std::vector<exceptional_value> out;
    for (int64 x = 1; x <= b - 1; ++x) {
        for (int64 y = -(a - 1); y <= -1; ++y) {
            const int64 v = a * x + b * y;
            if (v > b) {
                out.push_back({v, {x, y}});
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const exceptional_value& lhs, const exceptional_value& rhs) { return lhs.c > rhs.c; });
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i - 1].c == out[i].c) {
            throw invariant_error("enumerate_exceptional: duplicate value inside D");
        }
    }
    if (!out.empty() &&
        (out.front().c != frobenius_two(pair) || out.front().point != lattice_point{b - 1, -1})) {
        throw invariant_error("enumerate_exceptional: top entry is not the corner point");
    }
    return out;
}

// Closed-form count (a-3)(b-1)/2 + floor(b/a); the product is even for
// every coprime pair.
inline int64 count_exceptional(const coprime_pair& pair) {
    const int128 prod = int128(pair.a() - 3) * (pair.b() - 1);
    return narrow(exact_div(prod, 2) + pair.b() / pair.a());
}

} // namespace frob
