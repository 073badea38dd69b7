#include "comyhill/myhill_nat.hpp"

#include <mutex>
#include <unordered_set>

namespace comyhill {

NatInjection make_injection(NatFn f, std::string name, nat check,
                            std::function<std::optional<nat>(nat)> inverse) {
    std::unordered_set<nat> seen;
    for (nat x = 0; x <= check; ++x)
        if (!seen.insert(f(x)).second)
            throw InjectivityViolation(name + " repeats a value at " + std::to_string(x));
    return {std::move(f), std::move(name), std::move(inverse)};
}

std::optional<nat> preimage(const NatInjection& f, nat v, nat bound) {
    if (f.inverse) return f.inverse(v);
    for (nat x = 0; x <= bound; ++x)
        if (f(x) == v) return x;
    return std::nullopt;
}

nat replay(const NatInjection& f, const NatInjection& g, nat x, std::int64_t m, nat bound) {
    auto pre = [bound](const NatInjection& k, nat v) {
        auto r = preimage(k, v, bound);
        if (!r) throw PreimageNotFound(k.name + " has no preimage of " + std::to_string(v));
        return *r;
    };
    if (m >= 0) {
        for (std::int64_t i = 0; i < m; ++i) x = g(f(x));
        return f(x);
    }
    // f (g f)^-j = g^-1 (f^-1 g^-1)^(j-1)
    x = pre(g, x);
    for (std::int64_t i = 1; i < -m; ++i) x = pre(g, pre(f, x));
    return x;
}

void extend_step_inplace(PartialIso& iso, nat n, const NatInjection& f, const NatInjection& g) {
    forth(iso, n, f, g);
    back(iso, n, f, g);
}

PartialIso extend_step(PartialIso iso, nat n, const NatInjection& f, const NatInjection& g) {
    extend_step_inplace(iso, n, f, g);
    return iso;
}

struct MyhillIso::State {
    NatInjection f, g;
    std::mutex mu;
    PartialIso iso;
    std::vector<std::size_t> cut{0};  // cut[n] = |I_n|
};

MyhillIso::MyhillIso(NatInjection f, NatInjection g) : st_(std::make_shared<State>()) {
    st_->f = std::move(f);
    st_->g = std::move(g);
}

const NatInjection& MyhillIso::f() const { return st_->f; }
const NatInjection& MyhillIso::g() const { return st_->g; }

void MyhillIso::ensure(nat rank) const {
    std::lock_guard<std::mutex> lk(st_->mu);
    while (st_->cut.size() <= rank) {
        extend_step_inplace(st_->iso, st_->cut.size() - 1, st_->f, st_->g);
        st_->cut.push_back(st_->iso.size());
    }
}

nat MyhillIso::h(nat x) const {
    ensure(x + 1);
    std::lock_guard<std::mutex> lk(st_->mu);
    return st_->iso.find_dom(x)->cod;
}

nat MyhillIso::h_inv(nat y) const {
    ensure(y + 1);
    std::lock_guard<std::mutex> lk(st_->mu);
    return st_->iso.find_cod(y)->dom;
}

PathWitness MyhillIso::witness(nat x) const {
    ensure(x + 1);
    std::lock_guard<std::mutex> lk(st_->mu);
    return st_->iso.find_dom(x)->w;
}

PartialIso MyhillIso::stage(nat n) const {
    ensure(n);
    std::lock_guard<std::mutex> lk(st_->mu);
    PartialIso out;
    for (std::size_t i = 0; i < st_->cut[n]; ++i) {
        const auto& p = st_->iso.pairs[i];
        out.add(p.dom, p.cod, p.w.m);
    }
    return out;
}

std::size_t MyhillIso::stage_size(nat n) const {
    ensure(n);
    std::lock_guard<std::mutex> lk(st_->mu);
    return st_->cut[n];
}

MyhillIso build(NatInjection f, NatInjection g) { return MyhillIso(std::move(f), std::move(g)); }

bool verify_reduction(const NatFn& f, const std::set<nat>& a, const std::set<nat>& b, nat n) {
    for (nat x = 0; x <= n; ++x)
        if ((a.count(x) != 0) != (b.count(f(x)) != 0)) return false;
    return true;
}

SubfiniteIso subfinite_iso(nat n, const std::set<nat>& a, const NatFn& f, const NatFn& g) {
    SubfiniteIso out;
    if (n == 0 || a.empty()) return out;
    for (nat x : a) {
        nat y = f(x);
        if (!a.count(y) || out.h_inv.count(y)) throw InjectivityViolation("f is not injective on A");
        out.h[x] = y;
        out.h_inv[y] = x;
    }
    std::set<nat> gimg;
    for (nat x : a)
        if (!a.count(g(x)) || !gimg.insert(g(x)).second)
            throw InjectivityViolation("g is not injective on A");

    // Inverse of f as g (f g)^K with K = n! - 1: every cycle of f g has length
    // at most n, so (f g)^(n!) = id. The exponent is reduced per cycle.
    std::map<nat, nat> inv;
    for (nat y : a) {
        nat len = 1;
        for (nat z = f(g(y)); z != y; z = f(g(z))) ++len;
        nat fact = 1 % len;
        for (nat i = 2; i <= n; ++i) fact = (fact * (i % len)) % len;
        nat k = (fact + len - 1) % len;
        nat z = y;
        for (nat i = 0; i < k; ++i) z = f(g(z));
        inv[y] = g(z);
    }
    for (auto [y, x] : inv)
        if (out.h_inv.at(y) != x) throw InjectivityViolation("inverse formula disagrees with f");
    return out;
}

}  // namespace comyhill
