#pragma once

// Test-side oracles: bit-by-bit readers that never go through the library's
// own position cache, plus seeded generators.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "comyhill/conat.hpp"

namespace oracle {

using comyhill::CoNat;
using comyhill::nat;

inline std::optional<nat> value(const CoNat& x, std::size_t fuel) {
    for (std::size_t k = 0; k < fuel; ++k)
        if (x.bit(k)) return k;
    return std::nullopt;
}

inline bool is_nat(const CoNat& x, nat n, std::size_t fuel) { return value(x, fuel) == n; }
inline bool all_zero(const CoNat& x, std::size_t fuel) { return !value(x, fuel).has_value(); }

inline bool same(const CoNat& x, const CoNat& y, std::size_t fuel) {
    for (std::size_t k = 0; k < fuel; ++k)
        if (x.bit(k) != y.bit(k)) return false;
    return true;
}

inline int ones(const CoNat& x, std::size_t fuel) {
    int c = 0;
    for (std::size_t k = 0; k < fuel; ++k) c += x.bit(k);
    return c;
}

// Strictly increasing a*k + b + (random nonnegative bumps, cumulative).
inline std::vector<nat> increasing_table(std::mt19937_64& rng, std::size_t len) {
    std::uniform_int_distribution<nat> a(1, 3), b(0, 5), bump(0, 2);
    nat slope = a(rng), v = b(rng);
    std::vector<nat> t;
    for (std::size_t k = 0; k < len; ++k) {
        t.push_back(v);
        v += slope + bump(rng);
    }
    return t;
}

// A finite-support permutation of 0..span-1.
inline std::vector<nat> perm(std::mt19937_64& rng, std::size_t span) {
    std::vector<nat> p(span);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace oracle
