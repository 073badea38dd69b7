#include "comyhill/graphs.hpp"

#include <algorithm>
#include <cmath>

namespace comyhill {

nat cantor_pair(nat n, nat m) { return (n + m) * (n + m + 1) / 2 + n; }

std::pair<nat, nat> cantor_unpair(nat k) {
    nat w = static_cast<nat>((std::sqrt(8.0L * static_cast<long double>(k) + 1) - 1) / 2);
    while (w * (w + 1) / 2 > k) --w;
    while ((w + 1) * (w + 2) / 2 <= k) ++w;
    nat n = k - w * (w + 1) / 2;
    return {n, w - n};
}

nat ladder_f(nat k) {
    auto [a, b] = cantor_unpair(k);
    return a % 2 == 0 ? cantor_pair(a, b + 1) : k;
}

nat ladder_g(nat k) {
    auto [a, b] = cantor_unpair(k);
    return a % 2 == 1 ? cantor_pair(a, b + 1) : k;
}

namespace {

std::optional<nat> ladder_inverse(nat k, nat parity) {
    auto [a, b] = cantor_unpair(k);
    if (a % 2 != parity) return k;
    if (b == 0) return std::nullopt;  // bottom rung is not an image
    return cantor_pair(a, b - 1);
}

}  // namespace

std::optional<nat> ladder_f_inverse(nat k) { return ladder_inverse(k, 0); }
std::optional<nat> ladder_g_inverse(nat k) { return ladder_inverse(k, 1); }

NatInjection ladder_f_injection() { return make_injection(ladder_f, "ladder-f", 4096, ladder_f_inverse); }
NatInjection ladder_g_injection() { return make_injection(ladder_g, "ladder-g", 4096, ladder_g_inverse); }

std::pair<ConatInjection, ConatInjection> lifted_ladders() {
    return {ConatInjection{lift_inflationary(ladder_f), "lifted-ladder-f"},
            ConatInjection{lift_inflationary(ladder_g), "lifted-ladder-g"}};
}

ConatInjection collapse_at(nat n, std::size_t horizon) {
    ConatFn f = [n, horizon](const CoNat& x) {
        return CoNat::from_bits([x, n, horizon](std::size_t j) {
            if (j < n) return false;
            if (j == n) return x.pos_upto(horizon - 1) < 0;
            std::size_t k = j - n - 1;
            return k < horizon && x.bit(k);
        });
    };
    return {f, "collapse(" + std::to_string(n) + ")"};
}

CoproductPair coproduct_pair() {
    auto [lf, lg] = lifted_ladders();
    CoproductPair p;
    p.f = [lf = lf](const SumPoint& x) {
        if (!x.right) return SumPoint::inr(from_nat(cantor_pair(2 * x.left, 0)));
        return SumPoint::inr(lf(x.value));
    };
    p.g = [lg = lg](const SumPoint& x) {
        if (!x.right) return SumPoint::inr(from_nat(cantor_pair(2 * x.left + 1, 0)));
        return SumPoint::inr(lg(x.value));
    };
    auto even_rung = [](const CoNat& v, std::size_t fuel) {
        auto k = mp_search_upto(v, fuel);
        return k && cantor_unpair(*k).first % 2 == 0;
    };
    p.in_b = [even_rung](const SumPoint& x, std::size_t fuel) { return x.right && even_rung(x.value, fuel); };
    p.in_a = [even_rung](const SumPoint& x, std::size_t fuel) { return !x.right || even_rung(x.value, fuel); };
    return p;
}

ProductCounterexample product_counterexample(ProductSpace space) {
    ProductCounterexample c;
    c.space = space;
    c.f = [](const ProdPoint& p) {
        // (0,0) is isolated, so this case split is decidable
        if (p.first.bit(0) && p.second.bit(0)) return ProdPoint{from_nat(0), infinity()};
        return ProdPoint{succ(p.first), p.second};
    };
    c.g = [](const ProdPoint& p) { return ProdPoint{p.first, add(p.second, from_nat(1))}; };
    c.in_b = [space](const ProdPoint& p, std::size_t fuel) {
        if (space == ProductSpace::ConatSquared && !mp_search_upto(p.first, fuel)) return false;
        return !mp_search_upto(p.second, fuel).has_value();
    };
    c.in_a = [in_b = c.in_b](const ProdPoint& p, std::size_t fuel) {
        return (p.first.bit(0) && p.second.bit(0)) || in_b(p, fuel);
    };
    return c;
}

BaireChi chi_singleton(NatStream s) {
    return [s](const NatStream& p) {
        return CoNat::from_bits([s, p](std::size_t k) { return s.at(k) != p.at(k); });
    };
}

namespace {

struct TwoState {
    bool tail_zero = false;  // checking the remainder is all zero
    std::size_t i = 0;
    bool pending = false;  // second successor of a 00 block
};

}  // namespace

BaireChi chi_two_ninfty() {
    return [](const NatStream& x) {
        std::function<Step<TwoState>(const TwoState&)> c = [x](const TwoState& s0) -> Step<TwoState> {
            if (s0.pending) return Continue<TwoState>{{false, s0.i, false}};
            TwoState s = s0;
            if (!s.tail_zero) {
                auto v = x.at(s.i);
                if (v >= 2) return Stop{};
                if (v == 1) {
                    s = {true, s.i + 1, false};
                } else {
                    if (x.at(s.i + 1) != 0) return Stop{};
                    return Continue<TwoState>{{false, s.i + 2, true}};
                }
            }
            if (x.at(s.i) != 0) return Stop{};
            return Continue<TwoState>{{true, s.i + 1, false}};
        };
        return unfold<TwoState>(c, TwoState{});
    };
}

NatStream embed_nat_conat(nat n, const CoNat& p) {
    return NatStream([n, p](std::size_t k) -> unsigned long long {
        return k == 0 ? n : static_cast<unsigned long long>(p.bit(k - 1));
    });
}

namespace {

// cell k: ones seen among entries 1..k, or -1 once the prefix is invalid
Stream<int> nat_conat_validity(const NatStream& x) {
    return Stream<int>::corec([x](std::size_t k, const int* prev) -> int {
        if (k == 0) return 0;
        if (*prev < 0) return -1;
        auto v = x.at(k);
        if (v > 1) return -1;
        if (v == 1) return *prev == 1 ? -1 : 1;
        return *prev;
    });
}

// cell k: bit0 = one seen on the even track, bit1 on the odd track; -1 invalid
Stream<int> interleaved_validity(const BitStream& z) {
    return Stream<int>::corec([z](std::size_t k, const int* prev) -> int {
        int st = prev ? *prev : 0;
        if (st < 0) return -1;
        if (!z.at(k)) return st;
        int mask = k % 2 == 0 ? 1 : 2;
        return (st & mask) ? -1 : (st | mask);
    });
}

// Running max made strictly increasing: n + max_{k <= n} mu(k).
Stream<nat> normalize(std::function<nat(nat)> mu) {
    auto mx = Stream<nat>::corec([mu](std::size_t k, const nat* prev) -> nat {
        nat v = mu(k);
        return prev ? std::max(*prev, v) : v;
    });
    return Stream<nat>([mx](std::size_t k) -> nat { return k + mx.at(k); });
}

// cell k: the first n <= k (n >= lo) with bad(n), or -1
Stream<std::int64_t> first_bad(std::function<bool(nat)> bad, nat lo) {
    return Stream<std::int64_t>::corec(
        [bad, lo](std::size_t k, const std::int64_t* prev) -> std::int64_t {
            if (prev && *prev >= 0) return *prev;
            return (k >= lo && bad(k)) ? static_cast<std::int64_t>(k) : -1;
        });
}

}  // namespace

bool valid_nat_conat_prefix(const NatStream& x, std::size_t len) {
    return len == 0 || nat_conat_validity(x).at(len - 1) >= 0;
}

BaireFn extend_baire(BaireFn f, BaireModulus mu) {
    return [f, mu](const NatStream& x) {
        auto val = nat_conat_validity(x);
        NatStream rep([x, val](std::size_t k) -> unsigned long long { return val.at(k) >= 0 ? x.at(k) : 0; });
        NatStream fx = f(rep);
        const nat a = x.at(0);
        auto m = normalize([mu, a](nat n) { return mu(a, n); });
        auto n0 = first_bad([m, val](nat n) { return m.at(n) > 0 && val.at(m.at(n) - 1) < 0; }, 1);
        return NatStream([x, fx, n0](std::size_t n) -> unsigned long long {
            auto b = n0.at(n);
            if (b < 0) return fx.at(n);
            return 2 + x.at(n - static_cast<std::size_t>(b));
        });
    };
}

BitStream interleave(const CoNat& p, const CoNat& q) {
    return BitStream([p, q](std::size_t k) -> unsigned char { return k % 2 == 0 ? p.bit(k / 2) : q.bit(k / 2); });
}

bool valid_interleaved_prefix(const BitStream& z, std::size_t len) {
    return len == 0 || interleaved_validity(z).at(len - 1) >= 0;
}

CantorFn extend_cantor(ConatPairFn f, std::function<nat(nat)> mu) {
    auto m = normalize(std::move(mu));
    return [f, m](const BitStream& z) {
        auto val = interleaved_validity(z);
        CoNat p = canon(BitStream([z](std::size_t k) -> unsigned char { return z.at(2 * k); }));
        CoNat q = canon(BitStream([z](std::size_t k) -> unsigned char { return z.at(2 * k + 1); }));
        auto [fp, fq] = f(p, q);
        BitStream good = interleave(fp, fq);
        auto cut = first_bad([m, val](nat n) { return m.at(n) > 0 && val.at(m.at(n) - 1) < 0; }, 0);
        return BitStream([z, good, cut](std::size_t n) -> unsigned char {
            auto b = cut.at(n);
            if (b < 0) return good.at(n);
            std::size_t r = n - static_cast<std::size_t>(b);
            if (r < kCantorEscape.size()) return kCantorEscape[r];
            return z.at(r - kCantorEscape.size());
        });
    };
}

std::optional<IotaCounterexample> falsify_iota(const IotaFn& iota, nat budget, nat m_bound) {
    for (nat n = 0; n < budget; ++n) {
        // even rung: some <2n, m> must reach <2n, 0> going backwards, which
        // with g fixed on even rungs means iota = -(m+1)
        const nat even0 = cantor_pair(2 * n, 0);
        bool found = false;
        for (nat m = 0; m <= m_bound && !found; ++m)
            found = iota(from_nat(cantor_pair(2 * n, m))) == -static_cast<std::int64_t>(m) - 1;
        if (!found) return IotaCounterexample{2 * n, 0, iota(from_nat(even0))};
        // odd rung: <2n+1, 0> has no g-preimage, so iota must be >= 0
        std::int64_t d = iota(from_nat(cantor_pair(2 * n + 1, 0)));
        if (d < 0) return IotaCounterexample{2 * n + 1, 1, d};
    }
    return std::nullopt;
}

}  // namespace comyhill
