// Acceptance runner: `acceptance [N...]` prints one PASS/FAIL line per
// criterion and exits non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "comyhill/adversary.hpp"
#include "comyhill/families.hpp"
#include "comyhill/graphs.hpp"
#include "graph_gen.hpp"
#include "support.hpp"

using namespace comyhill;
using namespace gen;

namespace {

struct Tally {
    std::size_t checks = 0, fails = 0;
    std::string first;
    std::string note;

    void operator()(bool ok, const std::string& what) {
        ++checks;
        if (!ok && fails++ == 0) first = what;
    }
};

std::string S(nat v) { return std::to_string(v); }

// f increasing or a shifted finite permutation, chosen per trial.
struct NatPairGen {
    std::vector<nat> inc, perm;
    nat shift;
    NatInjection f, g;

    explicit NatPairGen(std::mt19937_64& rng, bool swap) {
        inc = oracle::increasing_table(rng, 2000);
        perm = oracle::perm(rng, 40);
        shift = rng() % 5;
        auto t = inc;
        auto p = perm;
        nat s = shift;
        NatInjection a = make_injection([t](nat x) { return x < t.size() ? t[x] : t.back() + 4 * x; }, "inc", 512);
        NatInjection b = make_injection([p, s](nat x) { return (x < p.size() ? p[x] : x) + s; }, "perm", 512);
        f = swap ? b : a;
        g = swap ? a : b;
    }
};

// 1. Myhill on N: inverse, witness replay, chain and rank.
void c1(Tally& t) {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        NatPairGen p(rng, trial % 2 == 1);
        auto M = build(p.f, p.g);
        const std::string tag = "trial " + S(trial);
        // chain: each I_n is a prefix (in insertion order) of I_{n+1}
        PartialIso prev;
        for (nat n = 0; n <= 256; ++n) {
            auto I = M.stage(n);
            bool rank = true, chain = I.size() >= prev.size();
            for (nat k = 0; k < n; ++k) rank = rank && I.in_dom(k) && I.in_cod(k);
            for (std::size_t i = 0; chain && i < prev.size(); ++i)
                chain = I.pairs[i].dom == prev.pairs[i].dom && I.pairs[i].cod == prev.pairs[i].cod;
            t(rank, tag + ": rank at n=" + S(n));
            t(chain, tag + ": chain at n=" + S(n));
            prev = std::move(I);
        }
        auto I = M.stage(256);
        for (nat k = 0; k < 256; ++k) t(I.in_dom(k) && I.in_cod(k), tag + ": rank at 256");
        for (nat x = 0; x <= 256; ++x) {
            const nat y = M.h(x);
            t(M.h_inv(y) == x, tag + ": h_inv h " + S(x));
            t(M.h(M.h_inv(x)) == x, tag + ": h h_inv " + S(x));
            t(replay(p.f, p.g, x, M.witness(x).m) == y, tag + ": replay " + S(x));
        }
    }
    t.note = "100 pairs, x <= 256";
}

// Component of a point in the bipartite f/g graph, by walking preimages:
// the stopper reached, or the least domain value on the cycle.
struct Components {
    std::unordered_map<nat, nat> finv, ginv;
    nat window;

    Components(const NatInjection& f, const NatInjection& g, nat w) : window(w) {
        for (nat x = 0; x < w; ++x) {
            finv[f(x)] = x;
            ginv[g(x)] = x;
        }
    }
    // side 0: domain of f, side 1: domain of g
    std::pair<int, nat> id(int side, nat v) const {
        std::vector<std::pair<int, nat>> path;
        std::map<std::pair<int, nat>, std::size_t> seen;
        for (;;) {
            if (v >= window) throw std::runtime_error("component walk left the window");
            auto key = std::make_pair(side, v);
            if (auto it = seen.find(key); it != seen.end()) {
                nat lo = ~nat{0};
                for (std::size_t i = it->second; i < path.size(); ++i)
                    if (path[i].first == 0) lo = std::min(lo, path[i].second);
                return {2, lo};
            }
            seen[key] = path.size();
            path.push_back(key);
            const auto& inv = side == 0 ? ginv : finv;
            auto p = inv.find(v);
            if (p == inv.end()) return {side, v};
            side = 1 - side;
            v = p->second;
        }
    }
};

// 2. Reduction preservation.
void c2(Tally& t) {
    std::mt19937_64 rng(202);
    const nat W = 1 << 14;
    for (int trial = 0; trial < 50; ++trial) {
        NatPairGen p(rng, trial % 2 == 1);
        Components comp(p.f, p.g, W);
        const std::uint64_t seed = rng();
        auto colour = [seed](std::pair<int, nat> id) {
            std::uint64_t z = seed ^ (std::uint64_t(id.first) << 60) ^ (id.second * 0x9E3779B97F4A7C15ull);
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
            return ((z ^ (z >> 31)) & 1) != 0;
        };
        auto in_a = [&](nat x) { return colour(comp.id(0, x)); };
        auto in_b = [&](nat y) { return colour(comp.id(1, y)); };
        std::set<nat> A, B;
        nat hi = 0;
        for (nat x = 0; x <= 128; ++x) hi = std::max({hi, p.f(x), p.g(x)});
        for (nat v = 0; v <= hi; ++v) {
            if (in_a(v)) A.insert(v);
            if (in_b(v)) B.insert(v);
        }
        const std::string tag = "trial " + S(trial);
        t(verify_reduction(p.f.apply, A, B, 128), tag + ": f is not a reduction");
        t(verify_reduction(p.g.apply, B, A, 128), tag + ": g is not a reduction");
        auto M = build(p.f, p.g);
        for (nat x = 0; x <= 128; ++x) t(in_a(x) == in_b(M.h(x)), tag + ": membership at " + S(x));
    }
    t.note = "50 (f, g, A, B), x <= 128";
}

// 3. Selection laws.
void c3(Tally& t) {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 500; ++trial) {
        // Q(x) = T[min(pos(x), K)], pos(inf) = K
        std::size_t K = 1 + rng() % 40;
        std::vector<bool> T(K + 1);
        const unsigned odds = 2 + rng() % 30;
        for (auto&& b : T) b = rng() % odds != 0;
        DecPred Q([T, K](const CoNat& x) {
            auto pos = x.pos_upto(K - 1);
            return static_cast<bool>(T[pos < 0 ? K : static_cast<std::size_t>(pos)]);
        });
        auto q_at = [&](nat n) { return static_cast<bool>(T[std::min<nat>(n, K)]); };
        const std::string tag = "predicate " + std::to_string(trial);
        CoNat e = epsilon(Q);
        std::optional<nat> least;
        for (nat n = 0; n <= K && !least; ++n)
            if (!q_at(n)) least = n;
        if (Q(e)) {
            for (nat n = 0; n <= 128; ++n) t(q_at(n), tag + ": Q(eps) = 1 but Q(" + S(n) + ") = 0");
            t(Q(infinity()), tag + ": Q(eps) = 1 but Q(inf) = 0");
        }
        if (least)
            t(oracle::is_nat(e, *least, 4096), tag + ": eps is not the least counterexample");
        else
            t(oracle::all_zero(e, 4096), tag + ": eps is not inf for a true predicate");
        t(Q(e) == !least.has_value(), tag + ": Q(eps) disagrees with the oracle");
    }
    t.note = "500 predicates";
}

// 4. Lifting increasing maps.
void c4(Tally& t) {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 20; ++trial) {
        auto tab = oracle::increasing_table(rng, 300);
        auto F = lift_inflationary([tab](nat n) { return tab.at(n); });
        const std::string tag = "map " + S(trial);
        for (nat n = 0; n <= 64; ++n)
            t(oracle::same(F(from_nat(n)), from_nat(tab[n]), 256), tag + ": lift at " + S(n));
        t(oracle::all_zero(F(infinity()), 256), tag + ": lift at inf");
        for (nat m = 0; m <= 32; ++m)
            for (nat n = m + 1; n <= 32; ++n)
                t(apart(F(from_nat(m)), F(from_nat(n)), 256).has_value(),
                  tag + ": apartness " + S(m) + " " + S(n));
    }
    t.note = "20 maps";
}

struct ConatFamily {
    std::string name;
    bool lifted;
    nat collapse = 0;
};

std::vector<ConatFamily> conat_families() {
    return {{"identity", true}, {"succ", true},        {"lifted-ladder", true},
            {"collapse(0)", false, 0}, {"collapse(3)", false, 3}, {"collapse(7)", false, 7}};
}

std::vector<CoNat> conat_grid() {
    std::vector<CoNat> g;
    for (nat k = 0; k <= 64; ++k) g.push_back(from_nat(k));
    g.push_back(infinity());
    return g;
}

// collapse maps read a finite horizon, so lazily composed images are pinned
// to a point before being fed back; pinning must stay well inside the horizon
CoNat pin(const CoNat& y) { return embed(decode_upto(y, 256)); }

// 5. Back-and-forth on N-inf.
void c5(Tally& t) {
    for (const auto& fam : conat_families()) {
        auto [f, g] = conat_pair(parse_family(fam.name));
        auto B = bijection(f, g);
        const auto grid = conat_grid();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const CoNat& x = grid[i];
            const std::string at = fam.name + " at " + (i + 1 == grid.size() ? "inf" : S(i));
            CoNat y = B.h(x), z = B.h_inv(x);
            if (!fam.lifted) y = pin(y), z = pin(z);
            t(oracle::same(B.h_inv(y), x, 128), at + ": h_inv h");
            t(oracle::same(B.h(z), x, 128), at + ": h h_inv");
        }
        if (fam.lifted) {
            bool cont = true;
            for (nat n = 0; n <= 64; ++n) cont = cont && B.continuous(n);
            t(cont, fam.name + ": left continuous mode by rank 64");
            t(oracle::all_zero(B.h(infinity()), 128), fam.name + ": h(inf) not inf");
            t(oracle::all_zero(B.h_inv(infinity()), 128), fam.name + ": h_inv(inf) not inf");
        } else {
            auto sw = B.switch_rank(fam.collapse + 1);
            t(sw.has_value() && *sw <= fam.collapse + 1, fam.name + ": no switch by rank c+1");
        }
    }
    t.note = "6 families, grid 0..64 + inf";
}

// 6. Mindchange witnesses on the grid of 5.
void c6(Tally& t) {
    std::size_t checked = 0, open = 0;
    for (const auto& fam : conat_families()) {
        auto [f, g] = conat_pair(parse_family(fam.name));
        auto B = bijection(f, g);
        const auto grid = conat_grid();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const CoNat& x = grid[i];
            const std::string at = fam.name + " at " + (i + 1 == grid.size() ? "inf" : S(i));
            auto w = B.witness(x);
            auto c = mp_search_upto(w.w, 4096);
            if (!c) {
                // x infinite and no switch: not decidable, nothing to replay
                t(fam.lifted && i + 1 == grid.size(), at + ": witness undecided on a decidable point");
                ++open;
                continue;
            }
            auto m = w.resolve(Finite{*c}).m;
            t(oracle::same(replay_conat(B.pair(), x, m, 128), B.h(x), 128), at + ": replay");
            ++checked;
        }
    }
    t.note = std::to_string(checked) + " points replayed, " + std::to_string(open) + " infinite points without a switch";
}

// 7. Baire and Cantor extensions.
void c7(Tally& t) {
    std::mt19937_64 rng(707);
    BaireFn shift = [](const NatStream& z) {
        return NatStream([z](std::size_t k) -> unsigned long long {
            if (k == 0) return z.at(0) + 1;
            if (k <= 2) return 0;
            return z.at(k - 2);
        });
    };
    auto fb = extend_baire(shift, [](nat, nat n) { return n + 1; });
    std::vector<NatStream> bs;
    for (int i = 0; i < 50; ++i) {
        auto [a, p] = random_nc(rng);
        auto e = embed_nat_conat(a, p);
        bs.push_back(e);
        t(!diff_at(fb(e), embed_nat_conat(a + 1, add(p, from_nat(2))), 64), "baire agreement " + S(i));
    }
    for (int i = 0; i < 50; ++i) {
        auto z = random_invalid_baire(rng);
        t(!valid_baire(z, 32), "baire sample " + S(i) + " is valid");
        bs.push_back(z);
        t(!valid_baire(fb(z), 128), "baire invalid " + S(i) + " maps to a valid point");
    }
    std::vector<NatStream> bi;
    for (const auto& z : bs) bi.push_back(fb(z));
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (std::size_t j = i + 1; j < bs.size(); ++j)
            if (diff_at(bs[i], bs[j], 512)) t(diff_at(bi[i], bi[j], 512).has_value(), "baire apartness");

    ConatPairFn swap = [](const CoNat& p, const CoNat& q) { return std::make_pair(q, p); };
    auto fc = extend_cantor(swap, [](nat n) { return n + 1; });
    auto rc = [&rng]() { return rng() % 6 == 0 ? infinity() : from_nat(rng() % 30); };
    std::vector<BitStream> cs;
    for (int i = 0; i < 50; ++i) {
        CoNat p = rc(), q = rc();
        auto z = interleave(p, q);
        cs.push_back(z);
        t(!diff_at(fc(z), interleave(q, p), 64), "cantor agreement " + S(i));
    }
    for (int i = 0; i < 50; ++i) {
        std::vector<unsigned char> v(40, 0);
        std::size_t a = rng() % 30, d = 2 * (1 + rng() % 4);
        v[a] = v[a + d] = 1;
        for (auto& b : v)
            if (rng() % 10 == 0) b = 1;
        auto z = bits(v);
        t(!valid_interleaved_prefix(z, 40), "cantor sample " + S(i) + " is valid");
        cs.push_back(z);
        t(!valid_interleaved_prefix(fc(z), 128), "cantor invalid " + S(i) + " maps to a valid point");
    }
    std::vector<BitStream> ci;
    for (const auto& z : cs) ci.push_back(fc(z));
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (diff_at(cs[i], cs[j], 512)) t(diff_at(ci[i], ci[j], 512).has_value(), "cantor apartness");
    t.note = "50 valid + 50 invalid per space";
}

// 8. Adversary.
void c8(Tally& t) {
    std::string got;
    for (const auto& c : {assume_infinite(), lookahead(1), lookahead(2), lookahead(4), lookahead(8)}) {
        auto r = adversary(c);
        t(r.outcome == Outcome::Defeated, c.name + ": " + outcome_name(r.outcome));
        t(r.forced_bits_total <= 100000, c.name + ": over budget");
        t(recheck(c, r), c.name + ": report does not re-verify");
        got += c.name + "@x=" + (r.committed_x ? S(*r.committed_x) : "-") + " ";
    }
    auto r = adversary(constant_candidate());
    t(r.outcome == Outcome::Defeated && r.stage == "0", "constant not rejected at stage 0");
    t(recheck(constant_candidate(), r), "constant: report does not re-verify");
    t.note = got + "constant@stage " + r.stage;
}

// (i, x) -> (i xor j xor [x < t], x + c)
TwoFn translation(bool j, nat c, nat th) {
    return [j, c, th](const TwoCoNat& p) -> TwoCoNat {
        bool low = th > 0 && !is_at_least(p.value, th);
        return {static_cast<bool>(p.level ^ j ^ low), add(p.value, from_nat(c))};
    };
}

// 9. Builder on 2 x N-inf.
void c9(Tally& t) {
    std::mt19937_64 rng(909);
    std::int64_t widest = 0;
    for (int trial = 0; trial < 10; ++trial) {
        bool jf = rng() % 2, jg = trial < 5 ? jf : !jf;
        auto f = translation(jf, rng() % 3, rng() % 4);
        auto g = translation(jg, 1 + rng() % 2, rng() % 4);
        auto B = build_bijection(f, g);
        const std::string tag = "combo " + S(trial);
        t(B.tangled() == jf, tag + ": tangling misread");
        t(B.substituted() == (jf != jg), tag + ": substitution misread");
        const std::int64_t region = 2 * static_cast<std::int64_t>(B.threshold() + 1);
        for (bool l : {false, true})
            for (nat k = 0; k <= 33; ++k) {
                TwoCoNat p = k == 33 ? two_inf(l) : two(l, k);
                const std::string at = tag + " at (" + S(l) + "," + (k == 33 ? "inf" : S(k)) + ")";
                auto q = B.h(p);
                t(same_two(B.h_inv(q), p, 128), at + ": h_inv h");
                t(same_two(B.h(B.h_inv(p)), p, 128), at + ": h h_inv");
                if (k == 33) continue;
                auto m = B.witness(p);
                widest = std::max(widest, std::abs(m));
                t(std::abs(m) <= region, at + ": exponent beyond the region");
                t(same_two(replay_two(f, g, p, m), q, 128), at + ": replay");
            }
    }
    t.note = "5 untangled + 5 tangled, max |m| = " + std::to_string(widest);
}

// 10. Falsifier.
void c10(Tally& t) {
    auto zero = falsify_iota([](const CoNat&) -> std::int64_t { return 0; }, 64);
    t(zero.has_value(), "constant 0 not refuted");
    auto neg = falsify_iota([](const CoNat&) -> std::int64_t { return -1; }, 64);
    t(neg.has_value(), "constant -1 not refuted");
    // h = id solves the ladder: g^-1 on even rungs (g fixes them), f on odd ones
    IotaFn parity = [](const CoNat& x) -> std::int64_t {
        return cantor_unpair(mp_search(x)).first % 2 == 0 ? -1 : 0;
    };
    t(!falsify_iota(parity, 64).has_value(), "parity table refuted");
    auto M = build(ladder_f_injection(), ladder_g_injection());
    IotaFn table = [M](const CoNat& x) { return M.witness(mp_search(x)).m; };
    t(!falsify_iota(table, 64).has_value(), "bijection table refuted");
    t.note = "0 refuted at rung " + (zero ? S(zero->rung) : "-") + ", -1 at rung " + (neg ? S(neg->rung) : "-");
}

struct Criterion {
    const char* title;
    void (*run)(Tally&);
    double limit_s;  // 0: none
};

const std::map<int, Criterion> kCriteria = {
    {1, {"Myhill on N", c1, 10}},
    {2, {"reduction preservation", c2, 0}},
    {3, {"selection laws", c3, 5}},
    {4, {"lifted maps", c4, 0}},
    {5, {"N-inf back-and-forth", c5, 30}},
    {6, {"mindchange witnesses", c6, 0}},
    {7, {"Baire/Cantor extensions", c7, 0}},
    {8, {"adversary", c8, 60}},
    {9, {"2 x N-inf builder", c9, 0}},
    {10, {"falsifier", c10, 0}},
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
    if (which.empty())
        for (auto& [k, v] : kCriteria) which.push_back(k);
    int failed = 0;
    for (int k : which) {
        auto it = kCriteria.find(k);
        if (it == kCriteria.end()) {
            std::printf("FAIL criterion %d: no such criterion\n", k);
            ++failed;
            continue;
        }
        const Criterion& c = it->second;
        Tally t;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(t);
        } catch (const std::exception& e) {
            t(false, std::string("exception: ") + e.what());
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0 && s > c.limit_s) t(false, "took " + std::to_string(s) + " s");
        const bool ok = t.fails == 0;
        failed += !ok;
        std::printf("%s criterion %d (%s): %zu checks, %zu failed, %.2f s%s%s", ok ? "PASS" : "FAIL", k, c.title,
                    t.checks, t.fails, s, c.limit_s > 0 ? (" (limit " + std::to_string(int(c.limit_s)) + " s)").c_str() : "",
                    t.note.empty() ? "" : ("; " + t.note).c_str());
        if (!ok) std::printf("; first failure: %s", t.first.c_str());
        std::printf("\n");
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
