#pragma once

// Generators and stream comparisons for the graph-side suites.

#include <optional>
#include <random>
#include <vector>

#include "comyhill/graphs.hpp"

namespace gen {

using namespace comyhill;

inline NatStream from_vec(std::vector<unsigned long long> v, unsigned long long fill = 0) {
    return NatStream::from_prefix(std::move(v), fill);
}

inline BitStream bits(std::vector<unsigned char> v) { return BitStream::from_prefix(std::move(v), 0); }

// first index < fuel where the streams differ
template <class T>
std::optional<std::size_t> diff_at(const Stream<T>& a, const Stream<T>& b, std::size_t fuel) {
    for (std::size_t k = 0; k < fuel; ++k)
        if (a.at(k) != b.at(k)) return k;
    return std::nullopt;
}

// random point of N x N-inf: finite second component most of the time
inline std::pair<nat, CoNat> random_nc(std::mt19937_64& rng) {
    nat a = rng() % 10;
    if (rng() % 5 == 0) return {a, infinity()};
    return {a, from_nat(rng() % 40)};
}

// a Baire point with a second 1 or an entry >= 2 somewhere in 1..30
inline NatStream random_invalid_baire(std::mt19937_64& rng) {
    std::vector<unsigned long long> v(32, 0);
    v[0] = rng() % 10;
    std::size_t i = 1 + rng() % 28;
    if (rng() % 2) {
        v[i] = 2 + rng() % 5;
    } else {
        std::size_t j = i + 1 + rng() % (31 - i);
        v[i] = v[j] = 1;
    }
    for (std::size_t k = 1; k < 32; ++k)
        if (v[k] == 0 && rng() % 9 == 0) v[k] = rng() % 3;
    return from_vec(v);
}

inline bool valid_baire(const NatStream& x, std::size_t fuel) { return valid_nat_conat_prefix(x, fuel); }

}  // namespace gen
