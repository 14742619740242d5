#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "frob/core_arith.hpp"
#include "frob/errors.hpp"

namespace frob {

// Sorted, deduplicated generators with overall gcd 1.
class generator_set {
public:
    explicit generator_set(std::vector<int64> gens) : gens_(std::move(gens)) {
        if (gens_.empty()) {
            throw domain_error("generator_set: need at least one generator");
        }
        std::sort(gens_.begin(), gens_.end());
        gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
        int64 g = 0;
        for (const int64 v : gens_) {
            if (v < 1) {
                throw domain_error("generator_set: generators must be >= 1");
            }
            if (v > max_generator) {
                throw resource_error("generator_set: generator exceeds 2^31");
            }
            g = std::gcd(g, v);
        }
        if (g != 1) {
            throw domain_error("generator_set: generators must have gcd 1");
        }
    }

    const std::vector<int64>& gens() const { return gens_; }
    int64 smallest() const { return gens_.front(); }

private:
    std::vector<int64> gens_;
};

// Residue table mod the smallest generator m: min_rep[r] is the least
// semigroup element congruent to r (mod m). The Frobenius number is
// max(min_rep) - m.
struct apery_table {
    int64 modulus;
    std::vector<int64> min_rep;
};

// Dijkstra over the cyclic group of order m with the other generators as
// edge weights. Generators divisible by m never improve a distance and are
// skipped.
inline apery_table build_apery_table(const generator_set& gs, int64 budget = default_budget) {
    const int64 m = gs.smallest();
    if (m < 2) {
        throw domain_error("build_apery_table: smallest generator must be >= 2");
    }
    if (m > budget) {
        throw resource_error("build_apery_table: modulus exceeds the memory budget");
    }
    constexpr int64 unreached = std::numeric_limits<int64>::max();
    std::vector<int64> dist(static_cast<std::size_t>(m), unreached);
    dist[0] = 0;
    using node = std::pair<int64, int64>; // (distance, residue)
    std::priority_queue<node, std::vector<node>, std::greater<>> queue;
    queue.push({0, 0});
    while (!queue.empty()) {
        const auto [d, r] = queue.top();
        queue.pop();
        if (d != dist[static_cast<std::size_t>(r)]) {
            continue;
        }
        for (const int64 g : gs.gens()) {
            if (g % m == 0) {
                continue;
            }
            const int64 nr = (r + g) % m;
            const int64 nd = d + g;
            if (nd < dist[static_cast<std::size_t>(nr)]) {
                dist[static_cast<std::size_t>(nr)] = nd;
                queue.push({nd, nr});
            }
        }
    }
    for (const int64 d : dist) {
        if (d == unreached) {
            throw invariant_error("build_apery_table: residue unreachable despite gcd 1");
        }
    }
    return {m, std::move(dist)};
}

inline bool is_representable(int64 n, const apery_table& table) {
    if (n < 0) {
        return false;
    }
    return n >= table.min_rep[static_cast<std::size_t>(n % table.modulus)];
}

// Largest non-representable integer; -1 when 1 is a generator (no gaps).
inline int64 frobenius_oracle(const generator_set& gs, int64 budget = default_budget) {
    if (gs.smallest() == 1) {
        return -1;
    }
    const apery_table table = build_apery_table(gs, budget);
    return *std::max_element(table.min_rep.begin(), table.min_rep.end()) - table.modulus;
}

struct representation_witness {
    int64 c1 = 0;
    int64 c2 = 0;
    int64 c3 = 0;
};

// Lexicographically minimal witness for sets of up to three generators.
// Search cost grows with n, so this is meant for desk-scale targets.
inline std::optional<representation_witness> find_witness(int64 n, const generator_set& gs) {
    const auto& g = gs.gens();
    if (g.size() > 3) {
        return std::nullopt;
    }
    if (g.size() == 1) {
        // gcd 1 forces the single generator to be 1
        return representation_witness{n, 0, 0};
    }
    for (int64 c1 = 0; c1 * g[0] <= n; ++c1) {
        const int64 rem1 = n - c1 * g[0];
        if (g.size() == 2) {
            if (rem1 % g[1] == 0) {
                return representation_witness{c1, rem1 / g[1], 0};
            }
            continue;
        }
        for (int64 c2 = 0; c2 * g[1] <= rem1; ++c2) {
            const int64 rem2 = rem1 - c2 * g[1];
            if (rem2 % g[2] == 0) {
                return representation_witness{c1, c2, rem2 / g[2]};
            }
        }
    }
    return std::nullopt;
}

struct representability {
    bool representable = false;
    std::optional<representation_witness> witness;
};

inline representability is_representable(int64 n, const generator_set& gs,
                                         int64 budget = default_budget) {
    if (n < 0) {
        throw domain_error("is_representable: n must be nonnegative");
    }
    bool rep = false;
    if (gs.smallest() == 1) {
        rep = true;
    } else {
        rep = is_representable(n, build_apery_table(gs, budget));
    }
    if (!rep || gs.gens().size() > 3) {
        return {rep, std::nullopt};
    }
    auto witness = find_witness(n, gs);
    if (!witness) {
        throw invariant_error("is_representable: residue table and witness search disagree");
    }
    return {rep, witness};
}

// All gaps in ascending order; the last one is the Frobenius number and the
// length is the genus.
inline std::vector<int64> gaps(const generator_set& gs, int64 budget = default_budget) {
    if (gs.smallest() == 1) {
        return {};
    }
    const apery_table table = build_apery_table(gs, budget);
    const int64 top = *std::max_element(table.min_rep.begin(), table.min_rep.end());
    std::vector<int64> out;
    for (int64 n = 1; n <= top - table.modulus; ++n) {
        if (!is_representable(n, table)) {
            out.push_back(n);
        }
    }
    return out;
}

// Second, independent ground truth: a dense sieve up to `bound`. The answer
// is certified once m consecutive representable values appear (everything
// above them is then representable too); nullopt means the bound was too
// small to certify.
inline std::optional<int64> sieve_frobenius(const generator_set& gs, int64 bound) {
    if (gs.smallest() == 1) {
        return -1;
    }
    if (bound < 1 || bound > default_budget) {
        throw resource_error("sieve_frobenius: bound outside the supported range");
    }
    const int64 m = gs.smallest();
    std::vector<char> rep(static_cast<std::size_t>(bound) + 1, 0);
    rep[0] = 1;
    int64 last_gap = -1;
    int64 run = 0;
    for (int64 n = 1; n <= bound; ++n) {
        for (const int64 g : gs.gens()) {
            if (n >= g && rep[static_cast<std::size_t>(n - g)]) {
                rep[static_cast<std::size_t>(n)] = 1;
                break;
            }
        }
        if (rep[static_cast<std::size_t>(n)]) {
            if (++run >= m) {
                return last_gap;
            }
        } else {
            last_gap = n;
            run = 0;
        }
    }
    return std::nullopt;
}

} // namespace frob
