#pragma once

// Counterexample injection families, characteristic maps into N-infinity,
// extensions to Baire and Cantor space, and the sign falsifier.

#include <optional>
#include <utility>

#include "comyhill/myhill_conat.hpp"
#include "comyhill/myhill_nat.hpp"

namespace comyhill {

// Triangular pairing (n+m)(n+m+1)/2 + n.
nat cantor_pair(nat n, nat m);
std::pair<nat, nat> cantor_unpair(nat k);

// f advances even rungs <2n, m> -> <2n, m+1>; g advances odd rungs.
nat ladder_f(nat k);
nat ladder_g(nat k);
NatInjection ladder_f_injection();
NatInjection ladder_g_injection();
std::optional<nat> ladder_f_inverse(nat k);
std::optional<nat> ladder_g_inverse(nat k);
std::pair<ConatInjection, ConatInjection> lifted_ladders();

// inf -> n, k -> k + n + 1. Points with no 1 among the first `horizon`
// bits are read as inf, so injectivity only holds below the horizon.
inline constexpr std::size_t kCollapseHorizon = 4096;
ConatInjection collapse_at(nat n, std::size_t horizon = kCollapseHorizon);

// N + N-infinity.
struct SumPoint {
    bool right = false;
    nat left = 0;
    CoNat value;

    static SumPoint inl(nat n) { return {false, n, {}}; }
    static SumPoint inr(CoNat x) { return {true, 0, std::move(x)}; }
};
using SumFn = std::function<SumPoint(const SumPoint&)>;

struct CoproductPair {
    SumFn f, g;
    // A = inl(N) + inr(even-ladder naturals), B = inr(even-ladder naturals);
    // fuel-bounded on the right summand.
    std::function<bool(const SumPoint&, std::size_t)> in_a, in_b;
};
CoproductPair coproduct_pair();

// Points of N x N-inf or N-inf^2, first component as a conatural.
struct ProdPoint {
    CoNat first, second;
};
using ProdFn = std::function<ProdPoint(const ProdPoint&)>;
enum class ProductSpace { NatTimesConat, ConatSquared };

struct ProductCounterexample {
    ProductSpace space;
    ProdFn f, g;
    // A = {(0,0)} + N x {inf}, B = N x {inf}: semidecided up to fuel
    std::function<bool(const ProdPoint&, std::size_t)> in_a, in_b;
};
ProductCounterexample product_counterexample(ProductSpace space);

// Characteristic maps: the preimage of inf is the described set.
using BaireChi = std::function<CoNat(const NatStream&)>;
BaireChi chi_singleton(NatStream s);
BaireChi chi_two_ninfty();
template <class X>
std::function<CoNat(const X&)> chi_sum(std::function<CoNat(const X&)> a,
                                       std::function<CoNat(const X&)> b) {
    return [a, b](const X& x) { return add(a(x), b(x)); };
}

// Point (n, p) of N x N-inf inside Baire space: n, then the bits of p.
NatStream embed_nat_conat(nat n, const CoNat& p);
bool valid_nat_conat_prefix(const NatStream& x, std::size_t len);

using BaireFn = std::function<NatStream(const NatStream&)>;
// mu(a, n): f(x)_n depends on the first mu(x_0, n) entries of x.
using BaireModulus = std::function<nat(nat, nat)>;
BaireFn extend_baire(BaireFn f, BaireModulus mu);

// Cantor side: j(p, q) interleaves p on even and q on odd positions.
using ConatPairFn = std::function<std::pair<CoNat, CoNat>(const CoNat&, const CoNat&)>;
using CantorFn = std::function<BitStream(const BitStream&)>;
BitStream interleave(const CoNat& p, const CoNat& q);
bool valid_interleaved_prefix(const BitStream& z, std::size_t len);
// mu(n): output bit n depends on the first mu(n) input bits.
CantorFn extend_cantor(ConatPairFn f, std::function<nat(nat)> mu);
// The escape marker written after the valid part of an invalid input.
inline const std::vector<unsigned char> kCantorEscape = {0, 1, 1, 1, 1, 1, 1};

struct IotaCounterexample {
    nat rung;           // first pairing component
    int expected_sign;  // 1 for iota >= 0, 0 for iota < 0
    std::int64_t got;   // iota at <rung, 0>
};
using IotaFn = std::function<std::int64_t(const CoNat&)>;
// Searches rungs below `budget` for a sign the ladder graph forbids; the
// preimage of <2n, 0> is looked for among <2n, m>, m <= m_bound.
std::optional<IotaCounterexample> falsify_iota(const IotaFn& iota, nat budget, nat m_bound = 256);

}  // namespace comyhill
