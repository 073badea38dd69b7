#include "comyhill/two_ninfty.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace comyhill {

bool same_two(const TwoCoNat& a, const TwoCoNat& b, std::size_t fuel) {
    return a.level == b.level && prefix_equal(a.value, b.value, fuel);
}

std::pair<TwoFn, TwoFn> broken_ladder(CoNat x) {
    TwoFn f = [x](const TwoCoNat& p) -> TwoCoNat {
        if (!p.level) return {false, succ(p.value)};
        if (p.value.bit(0)) return {false, from_nat(0)};
        const CoNat y = p.value;
        // y = y' + 1 goes down to y' when 2y' + 1 < x, else stays
        return {true, CoNat::from_bits([x, y](std::size_t k) {
                    if (y.bit(k + 1) && is_at_least(x, 2 * k + 2)) return true;
                    return k >= 1 && y.bit(k) && !is_at_least(x, 2 * k);
                })};
    };
    TwoFn g = [x](const TwoCoNat& p) -> TwoCoNat {
        if (!p.level) return p;
        const CoNat y = p.value;
        // y stays when 2y < x, else moves up one
        return {true, CoNat::from_bits([x, y](std::size_t k) {
                    if (y.bit(k) && is_at_least(x, 2 * k + 1)) return true;
                    return k >= 1 && y.bit(k - 1) && !is_at_least(x, 2 * k - 1);
                })};
    };
    return {f, g};
}

IsoPoint ladder_fx(nat x, IsoPoint p) {
    if (!p.level) return {false, p.value + 1};
    if (p.value == 0) return {false, 0};
    nat y = p.value - 1;
    return 2 * y + 1 < x ? IsoPoint{true, y} : p;
}

IsoPoint ladder_gx(nat x, IsoPoint p) {
    if (!p.level) return p;
    return 2 * p.value < x ? p : IsoPoint{true, p.value + 1};
}

std::optional<IsoPoint> ladder_fx_inv(nat x, IsoPoint q) {
    if (!q.level) {
        if (q.value == 0) return IsoPoint{true, 0};
        return IsoPoint{false, q.value - 1};
    }
    if (2 * q.value + 1 < x) return IsoPoint{true, q.value + 1};
    if (q.value >= 1 && 2 * q.value - 1 >= x) return q;
    return std::nullopt;
}

std::optional<IsoPoint> ladder_gx_inv(nat x, IsoPoint q) {
    if (!q.level) return q;
    if (2 * q.value < x) return q;
    if (q.value >= 1 && 2 * (q.value - 1) >= x) return IsoPoint{true, q.value - 1};
    return std::nullopt;
}

std::optional<Stopper> ladder_component(nat x, IsoPoint p, bool y_side, std::size_t max_steps) {
    for (std::size_t s = 0; s < max_steps; ++s) {
        auto pre = y_side ? ladder_fx_inv(x, p) : ladder_gx_inv(x, p);
        if (!pre) return Stopper{y_side, p};
        p = *pre;
        y_side = !y_side;
    }
    return std::nullopt;
}

ContInjDescriptor classify(const TwoFn& f, nat max_threshold, std::size_t watchdog) {
    ContInjDescriptor d;
    d.j = f(two_inf(false)).level;
    if (f(two_inf(true)).level == d.j)
        throw InjectivityViolation("both points at infinity land on the same level");
    for (nat n = 0; n <= max_threshold; ++n) {
        const CoNat base = from_nat(n);
        const bool j = d.j;
        DecPred moves([f, base, j](const CoNat& x) {
            CoNat y = add(base, x);
            return f({false, y}).level != j || f({true, y}).level == j;
        });
        if (exists_conat(moves, watchdog)) continue;
        d.n = n;
        d.fprime = [f, base](bool i, const CoNat& x) { return f({i, add(base, x)}).value; };
        return d;
    }
    throw WatchdogExhausted(max_threshold);
}

namespace {

IsoPoint eval_iso(const TwoFn& F, IsoPoint p, std::size_t fuel) {
    auto r = F(two(p.level, p.value));
    auto v = mp_search_upto(r.value, fuel);
    if (!v) throw InjectivityViolation("an isolated point was sent to a non-isolated one");
    return {r.level, *v};
}

std::optional<IsoPoint> preimage_iso(const TwoFn& F, IsoPoint q, std::size_t fuel) {
    auto hit = search_two([&F, q](bool i, const CoNat& y) {
        auto r = F({i, y});
        return r.level == q.level && eq_nat(r.value, q.value);
    });
    if (!hit) return std::nullopt;
    auto v = mp_search_upto(hit->value, fuel);
    if (!v) throw PreimageNotFound("preimage of an isolated point is not isolated within fuel");
    return IsoPoint{hit->level, *v};
}

TwoCoNat preimage_two(const TwoFn& F, const TwoCoNat& q, std::size_t fuel) {
    auto v = mp_search_upto(q.value, fuel);
    if (!v) {
        for (bool i : {false, true})
            if (F(two_inf(i)).level == q.level) return two_inf(i);
        throw PreimageNotFound("no point at infinity maps to this level");
    }
    auto p = preimage_iso(F, {q.level, *v}, fuel);
    if (!p) throw PreimageNotFound("point is not in the image");
    return two(p->level, p->value);
}

}  // namespace

struct TwoBijection::State {
    TwoFn f, g, G;
    std::int64_t gexp = -1;
    bool j = false, subst = false;
    nat n = 0, thr = 0;
    std::size_t fuel = 0;

    std::recursive_mutex mu;
    std::map<IsoPoint, IsoPoint> f_memo, G_memo;
    std::map<IsoPoint, std::optional<IsoPoint>> pre_f_memo, pre_G_memo;
    std::map<IsoPoint, bool> follows_f;  // Cantor-Bernstein side of an X point
    std::vector<nat> bound_h, bound_hinv;

    IsoPoint fv(IsoPoint p) {
        auto it = f_memo.find(p);
        if (it != f_memo.end()) return it->second;
        return f_memo[p] = eval_iso(f, p, fuel);
    }
    IsoPoint Gv(IsoPoint p) {
        auto it = G_memo.find(p);
        if (it != G_memo.end()) return it->second;
        return G_memo[p] = eval_iso(G, p, fuel);
    }
    std::optional<IsoPoint> pre_f(IsoPoint q) {
        auto it = pre_f_memo.find(q);
        if (it != pre_f_memo.end()) return it->second;
        return pre_f_memo[q] = preimage_iso(f, q, fuel);
    }
    std::optional<IsoPoint> pre_G(IsoPoint q) {
        auto it = pre_G_memo.find(q);
        if (it != pre_G_memo.end()) return it->second;
        return pre_G_memo[q] = preimage_iso(G, q, fuel);
    }

    // X points whose backward chain stops on the codomain side follow G^-1;
    // everything else (X stoppers, cycles, infinite chains) follows f.
    bool decide(IsoPoint p) {
        auto it = follows_f.find(p);
        if (it != follows_f.end()) return it->second;
        const nat side = std::max(p.value, thr) + 2;
        const std::size_t budget = 4 * side * side;
        std::vector<IsoPoint> path{p};
        std::set<IsoPoint> seen{p};
        bool res = true;
        IsoPoint cur = p;
        for (std::size_t s = 0;; ++s) {
            if (s >= budget)
                throw ChainBudgetExceeded("backward chain from (" + std::to_string(p.level) + ", " +
                                          std::to_string(p.value) + ") longer than " +
                                          std::to_string(budget) + " steps");
            auto y = pre_G(cur);
            if (!y) break;
            auto x = pre_f(*y);
            if (!x) {
                res = false;
                break;
            }
            if (auto k = follows_f.find(*x); k != follows_f.end()) {
                res = k->second;
                break;
            }
            if (!seen.insert(*x).second) break;
            path.push_back(*x);
            cur = *x;
        }
        for (auto& q : path) follows_f[q] = res;
        return res;
    }

    std::pair<IsoPoint, std::int64_t> h_iso(IsoPoint p) {
        if (decide(p)) return {fv(p), 0};
        auto y = pre_G(p);
        if (!y) throw InjectivityViolation("chain classification lost a preimage");
        return {*y, gexp};
    }

    IsoPoint h_inv_iso(IsoPoint q) {
        if (auto x = pre_f(q); x && decide(*x)) return *x;
        IsoPoint x = Gv(q);
        if (decide(x)) throw InjectivityViolation("point has no partner under the bijection");
        return x;
    }

    // Every point whose image value is <= k has value <= bound(k).
    nat bound(std::vector<nat>& memo, nat k, bool forward) {
        while (memo.size() <= k) {
            nat b = memo.empty() ? 0 : memo.back();
            const nat v = memo.size();
            for (bool l : {false, true})
                b = std::max(b, forward ? h_inv_iso({l, v}).value : h_iso({l, v}).first.value);
            memo.push_back(b);
        }
        return memo[k];
    }
};

namespace {

TwoCoNat lazy_side(const std::shared_ptr<TwoBijection::State>& st, const TwoCoNat& p, bool forward) {
    auto iso = [st, forward](IsoPoint q) {
        return forward ? st->h_iso(q).first : st->h_inv_iso(q);
    };
    TwoCoNat out;
    {
        std::lock_guard<std::recursive_mutex> lk(st->mu);
        auto t = trichotomy_nat(p.value, st->thr);
        if (auto* lt = std::get_if<Less>(&t))
            out.level = iso({p.level, lt->k}).level;
        else
            out.level = p.level != st->j;
    }
    const bool lv = p.level;
    const CoNat x = p.value;
    out.value = CoNat::from_bits([st, iso, lv, x, forward](std::size_t k) {
        std::lock_guard<std::recursive_mutex> lk(st->mu);
        const nat b = st->bound(forward ? st->bound_h : st->bound_hinv, k, forward);
        auto t = trichotomy_nat(x, b);
        nat v;
        if (auto* lt = std::get_if<Less>(&t))
            v = lt->k;
        else if (std::holds_alternative<Equal>(t))
            v = b;
        else
            return false;
        return iso({lv, v}).value == k;
    });
    return out;
}

}  // namespace

TwoCoNat TwoBijection::h(const TwoCoNat& p) const { return lazy_side(st_, p, true); }
TwoCoNat TwoBijection::h_inv(const TwoCoNat& q) const { return lazy_side(st_, q, false); }

std::int64_t TwoBijection::witness(const TwoCoNat& p) const {
    auto v = mp_search_upto(p.value, st_->fuel);
    if (!v) return 0;
    std::lock_guard<std::recursive_mutex> lk(st_->mu);
    return st_->h_iso({p.level, *v}).second;
}

bool TwoBijection::tangled() const { return st_->j; }
bool TwoBijection::substituted() const { return st_->subst; }
nat TwoBijection::threshold() const { return st_->thr; }
const TwoFn& TwoBijection::f() const { return st_->f; }
const TwoFn& TwoBijection::g() const { return st_->g; }

TwoBijection build_bijection(TwoFn f, TwoFn g, std::size_t search_fuel) {
    auto st = std::make_shared<TwoBijection::State>();
    st->f = f;
    st->g = g;
    st->fuel = search_fuel;
    auto cf = classify(f);
    auto cg = classify(g);
    if (cf.j != cg.j) {
        // g f g sends (j, inf) to itself, and f (gfgf)^m = f (gf)^2m
        st->G = [f, g](const TwoCoNat& p) { return g(f(g(p))); };
        st->gexp = -2;
        st->subst = true;
        cg = classify(st->G);
    } else {
        st->G = g;
    }
    st->j = cf.j;
    st->n = std::max(cf.n, cg.n);
    // least m with: x < n implies both images have value < n + m
    const nat n = st->n;
    nat m = 0;
    for (const TwoFn* F : {&st->f, &st->G}) {
        const TwoFn& Fr = *F;
        while (search_two([&Fr, n, m](bool i, const CoNat& x) {
            return !is_at_least(x, n) && is_at_least(Fr({i, x}).value, n + m);
        }))
            ++m;
    }
    st->thr = n + m;
    return TwoBijection(st);
}

TwoCoNat replay_two(const TwoFn& f, const TwoFn& g, const TwoCoNat& p, std::int64_t m, std::size_t fuel) {
    if (m >= 0) {
        TwoCoNat y = f(p);
        for (std::int64_t i = 0; i < m; ++i) y = f(g(y));
        return y;
    }
    TwoCoNat y = preimage_two(g, p, fuel);
    for (std::int64_t i = 1; i < -m; ++i) y = preimage_two(g, preimage_two(f, y, fuel), fuel);
    return y;
}

}  // namespace comyhill
