#pragma once

// Back-and-forth on the naturals, with path witnesses.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "comyhill/conat.hpp"

namespace comyhill {

struct NatInjection {
    NatFn apply;
    std::string name;
    // Optional exact inverse; bounded search is used when absent.
    std::function<std::optional<nat>(nat)> inverse;

    nat operator()(nat x) const { return apply(x); }
};

// Spot-checks injectivity on 0..check (pairwise distinct images).
NatInjection make_injection(NatFn f, std::string name, nat check = 256,
                            std::function<std::optional<nat>(nat)> inverse = {});

struct PathWitness {
    std::int64_t m = 0;  // h(x) = f (g f)^m (x)
};

template <class K>
struct PartialIsoT {
    struct Pair {
        K dom;
        K cod;
        PathWitness w;
    };
    std::vector<Pair> pairs;  // in insertion order
    std::map<K, std::size_t> by_dom, by_cod;

    std::size_t size() const { return pairs.size(); }
    bool in_dom(const K& k) const { return by_dom.count(k) != 0; }
    bool in_cod(const K& k) const { return by_cod.count(k) != 0; }
    const Pair* find_dom(const K& k) const {
        auto it = by_dom.find(k);
        return it == by_dom.end() ? nullptr : &pairs[it->second];
    }
    const Pair* find_cod(const K& k) const {
        auto it = by_cod.find(k);
        return it == by_cod.end() ? nullptr : &pairs[it->second];
    }
    void add(const K& d, const K& c, std::int64_t m) {
        if (in_dom(d) || in_cod(c)) throw InjectivityViolation("pair collides with partial iso");
        by_dom.emplace(d, pairs.size());
        by_cod.emplace(c, pairs.size());
        pairs.push_back({d, c, {m}});
    }
    void truncate(std::size_t n) {
        while (pairs.size() > n) {
            by_dom.erase(pairs.back().dom);
            by_cod.erase(pairs.back().cod);
            pairs.pop_back();
        }
    }
};

using PartialIso = PartialIsoT<nat>;

// Adds n to the domain along the least k <= |I| with f (g f)^k (n) fresh.
template <class K, class F, class G>
void forth(PartialIsoT<K>& iso, const K& n, const F& f, const G& g) {
    if (iso.in_dom(n)) return;
    const std::size_t lim = iso.size();
    K m = f(n);
    for (std::size_t k = 0;; ++k) {
        if (!iso.in_cod(m)) {
            iso.add(n, m, static_cast<std::int64_t>(k));
            return;
        }
        if (k >= lim) throw InjectivityViolation("forward path revisits the codomain");
        m = f(g(m));
    }
}

// Mirror image: adds n to the codomain along (g f)^k g (n).
template <class K, class F, class G>
void back(PartialIsoT<K>& iso, const K& n, const F& f, const G& g) {
    if (iso.in_cod(n)) return;
    const std::size_t lim = iso.size();
    K d = g(n);
    for (std::size_t k = 0;; ++k) {
        if (!iso.in_dom(d)) {
            iso.add(d, n, -static_cast<std::int64_t>(k) - 1);
            return;
        }
        if (k >= lim) throw InjectivityViolation("backward path revisits the domain");
        d = g(f(d));
    }
}

inline constexpr nat kDefaultPreimageBound = nat{1} << 16;

std::optional<nat> preimage(const NatInjection& f, nat v, nat bound = kDefaultPreimageBound);
// f (g f)^m (x), with preimages for negative m.
nat replay(const NatInjection& f, const NatInjection& g, nat x, std::int64_t m,
           nat bound = kDefaultPreimageBound);

void extend_step_inplace(PartialIso& iso, nat n, const NatInjection& f, const NatInjection& g);
PartialIso extend_step(PartialIso iso, nat n, const NatInjection& f, const NatInjection& g);

// h = union of the chain I_0 <= I_1 <= ..., grown on demand.
class MyhillIso {
public:
    MyhillIso(NatInjection f, NatInjection g);

    nat h(nat x) const;
    nat h_inv(nat y) const;
    PathWitness witness(nat x) const;
    // I_n, materialized.
    PartialIso stage(nat n) const;
    std::size_t stage_size(nat n) const;

    const NatInjection& f() const;
    const NatInjection& g() const;

private:
    struct State;
    void ensure(nat rank) const;
    std::shared_ptr<State> st_;
};

MyhillIso build(NatInjection f, NatInjection g);

bool verify_reduction(const NatFn& f, const std::set<nat>& a, const std::set<nat>& b, nat n);

struct SubfiniteIso {
    std::map<nat, nat> h, h_inv;
};
SubfiniteIso subfinite_iso(nat n, const std::set<nat>& a, const NatFn& f, const NatFn& g);

}  // namespace comyhill
