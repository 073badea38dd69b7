#include "comyhill/myhill_conat.hpp"

#include <mutex>
#include <set>

namespace comyhill {

ConatInjection make_conat_injection(ConatFn f, std::string name, nat samples, std::size_t fuel) {
    std::vector<CoNat> outs;
    for (nat k = 0; k < samples; ++k) outs.push_back(f(from_nat(k)));
    outs.push_back(f(infinity()));
    for (std::size_t i = 0; i < outs.size(); ++i)
        for (std::size_t j = i + 1; j < outs.size(); ++j) {
            auto a = outs[i].pos_upto(fuel - 1), b = outs[j].pos_upto(fuel - 1);
            if (a >= 0 && a == b)
                throw InjectivityViolation(name + " sends two sample points to " +
                                           std::to_string(a));
        }
    return {std::move(f), std::move(name)};
}

CoNat embed(const Desc& d) { return d.is_inf ? infinity() : from_nat(d.n); }

Desc decode(const LpoDecider& dec, const CoNat& x) {
    auto a = dec(x);
    if (auto* fin = std::get_if<Finite>(&a)) return Desc::fin(fin->n);
    return Desc::inf();
}

Desc decode_upto(const CoNat& x, std::size_t fuel) {
    auto n = mp_search_upto(x, Fuel(fuel));
    return n ? Desc::fin(*n) : Desc::inf();
}

ConatPair make_pair(ConatInjection f, ConatInjection g) {
    ConatPair p{std::move(f), std::move(g), {}, {}};
    p.f_inf = p.f(infinity());
    p.g_inf = p.g(infinity());
    return p;
}

namespace {

// inf(F(n), F(inf)) is finite by injectivity; TookRight means F(inf) is the
// finite one, which hands us LPO.
std::variant<nat, LpoDecider> step_or_lpo(const ConatInjection& F, const CoNat& f_inf, nat n) {
    auto c = inf_case(F(from_nat(n)), f_inf);
    if (auto* r = std::get_if<TookRight>(&c)) return lpo_from_isolated(F.apply, r->n);
    return std::get<TookLeft>(c).n;
}

}  // namespace

PhiResult phi(const ContSolution& sol, nat n, const ConatPair& p) {
    if (auto* e = sol.iso.find_dom(n)) return AddPair{e->cod, sol};
    std::set<nat> removed;  // codomain points dropped by the recursion
    nat cur = n;
    for (std::int64_t k = 0;; ++k) {
        auto s = step_or_lpo(p.f, p.f_inf, cur);
        if (auto* d = std::get_if<LpoDecider>(&s)) return Dummy{*d};
        nat m = std::get<nat>(s);
        if (!sol.iso.in_cod(m) || removed.count(m)) {
            ContSolution out = sol;
            out.iso.add(n, m, k);
            return AddPair{m, std::move(out)};
        }
        removed.insert(m);
        if (removed.size() > sol.iso.size()) throw InjectivityViolation("forward recursion did not shrink");
        auto t = step_or_lpo(p.g, p.g_inf, m);
        if (auto* d = std::get_if<LpoDecider>(&t)) return Dummy{*d};
        cur = std::get<nat>(t);
    }
}

PhiResult psi(const ContSolution& sol, nat n, const ConatPair& p) {
    if (auto* e = sol.iso.find_cod(n)) return AddPair{e->dom, sol};
    std::set<nat> removed;
    nat cur = n;
    for (std::int64_t k = 0;; ++k) {
        auto s = step_or_lpo(p.g, p.g_inf, cur);
        if (auto* d = std::get_if<LpoDecider>(&s)) return Dummy{*d};
        nat d0 = std::get<nat>(s);
        if (!sol.iso.in_dom(d0) || removed.count(d0)) {
            ContSolution out = sol;
            out.iso.add(d0, n, -k - 1);
            return AddPair{d0, std::move(out)};
        }
        removed.insert(d0);
        if (removed.size() > sol.iso.size()) throw InjectivityViolation("backward recursion did not shrink");
        auto t = step_or_lpo(p.f, p.f_inf, d0);
        if (auto* d = std::get_if<LpoDecider>(&t)) return Dummy{*d};
        cur = std::get<nat>(t);
    }
}

ExtendCont extend_cont(const ContSolution& sol, const ConatPair& p) {
    const nat n = sol.rank;
    if (!is_at_least(inf(p.f_inf, p.g_inf), n + 1)) {
        auto at = p.f_inf.pos_upto(n);
        if (at >= 0) return Switch{lpo_from_isolated(p.f.apply, static_cast<nat>(at))};
        return Switch{lpo_from_isolated(p.g.apply, static_cast<nat>(p.g_inf.pos_upto(n)))};
    }
    auto a = phi(sol, n, p);
    if (auto* d = std::get_if<Dummy>(&a)) return Switch{d->dec};
    auto b = psi(std::get<AddPair>(a).sol, n, p);
    if (auto* d = std::get_if<Dummy>(&b)) return Switch{d->dec};
    ContSolution out = std::move(std::get<AddPair>(b).sol);
    out.rank = n + 1;
    return Extended{std::move(out)};
}

namespace {

struct DescEval {
    const ConatInjection* F;
    const LpoDecider* dec;
    Desc operator()(const Desc& x) const { return decode(*dec, (*F)(embed(x))); }
};

}  // namespace

DiscSolution cont_to_disc(const ContSolution& sol, LpoDecider dec, const ConatPair& p) {
    DiscSolution out;
    out.rank = sol.rank;
    out.dec = std::move(dec);
    for (const auto& q : sol.iso.pairs) out.iso.add(Desc::fin(q.dom), Desc::fin(q.cod), q.w.m);
    DescEval ef{&p.f, &out.dec}, eg{&p.g, &out.dec};
    forth(out.iso, Desc::inf(), ef, eg);
    back(out.iso, Desc::inf(), ef, eg);
    return out;
}

DiscSolution extend_disc(const DiscSolution& sol, const ConatPair& p) {
    DiscSolution out = sol;
    DescEval ef{&p.f, &out.dec}, eg{&p.g, &out.dec};
    forth(out.iso, Desc::fin(sol.rank), ef, eg);
    back(out.iso, Desc::fin(sol.rank), ef, eg);
    out.rank = sol.rank + 1;
    return out;
}

CoNat replay_conat(const ConatPair& p, const CoNat& x, std::int64_t m, std::size_t fuel, nat bound) {
    if (m >= 0) {
        CoNat y = x;
        for (std::int64_t i = 0; i < m; ++i) y = p.g(p.f(y));
        return p.f(y);
    }
    auto pre = [&](const ConatInjection& F, const CoNat& t) -> CoNat {
        auto tp = t.pos_upto(fuel - 1);
        if (tp >= 0)
            for (nat k = 0; k <= bound; ++k)
                if (F(from_nat(k)).pos_upto(fuel - 1) == tp) return from_nat(k);
        if (prefix_equal(F(infinity()), t, fuel)) return infinity();
        throw PreimageNotFound(F.name + " has no preimage within the search range");
    };
    CoNat y = pre(p.g, x);
    for (std::int64_t i = 1; i < -m; ++i) y = pre(p.g, pre(p.f, y));
    return y;
}

struct ConatMyhill::State {
    ConatPair p;
    std::mutex mu;
    std::vector<std::shared_ptr<const Solution>> sols;
};

ConatMyhill::ConatMyhill(ConatPair p) : st_(std::make_shared<State>()) {
    st_->p = std::move(p);
    st_->sols.push_back(std::make_shared<const Solution>(ContSolution{}));
}

const ConatPair& ConatMyhill::pair() const { return st_->p; }

void ConatMyhill::ensure(nat n) const {
    std::lock_guard<std::mutex> lk(st_->mu);
    const ConatPair& p = st_->p;
    while (st_->sols.size() <= n) {
        const Solution& cur = *st_->sols.back();
        Solution next;
        if (auto* c = std::get_if<ContSolution>(&cur)) {
            auto r = extend_cont(*c, p);
            if (auto* e = std::get_if<Extended>(&r)) {
                next = std::move(e->sol);
            } else {
                // partial additions of the failed step are dropped
                next = extend_disc(cont_to_disc(*c, std::get<Switch>(r).dec, p), p);
            }
        } else {
            next = extend_disc(std::get<DiscSolution>(cur), p);
        }
        st_->sols.push_back(std::make_shared<const Solution>(std::move(next)));
    }
}

namespace {

template <class M>
std::shared_ptr<const Solution> fetch(M& st, nat n) {
    std::lock_guard<std::mutex> lk(st.mu);
    return st.sols[n];
}

// Bit n of the image of x: n is in the codomain of I_{n+1}, so it has a
// unique partner d, and the bit is [x = d].
bool image_bit(const Solution& sol, const CoNat& x, nat n, bool forward) {
    if (auto* c = std::get_if<ContSolution>(&sol)) {
        auto* q = forward ? c->iso.find_cod(n) : c->iso.find_dom(n);
        return x.bit(forward ? q->dom : q->cod);
    }
    const auto& d = std::get<DiscSolution>(sol);
    auto* q = forward ? d.iso.find_cod(Desc::fin(n)) : d.iso.find_dom(Desc::fin(n));
    const Desc& other = forward ? q->dom : q->cod;
    if (!other.is_inf) return x.bit(other.n);
    return decode(d.dec, x).is_inf;
}

}  // namespace

Solution ConatMyhill::solution(nat n) const {
    ensure(n);
    return *fetch(*st_, n);
}

bool ConatMyhill::continuous(nat n) const {
    ensure(n);
    return std::holds_alternative<ContSolution>(*fetch(*st_, n));
}

std::optional<nat> ConatMyhill::switch_rank(nat upto) const {
    for (nat n = 0; n <= upto; ++n)
        if (!continuous(n)) return n;
    return std::nullopt;
}

CoNat ConatMyhill::h(const CoNat& x) const {
    ConatMyhill self = *this;
    return CoNat::from_bits([self, x](std::size_t n) {
        self.ensure(n + 1);
        return image_bit(*fetch(*self.st_, n + 1), x, n, true);
    });
}

CoNat ConatMyhill::h_inv(const CoNat& y) const {
    ConatMyhill self = *this;
    return CoNat::from_bits([self, y](std::size_t n) {
        self.ensure(n + 1);
        return image_bit(*fetch(*self.st_, n + 1), y, n, false);
    });
}

CoNat ConatMyhill::horizon() const {
    ConatMyhill self = *this;
    std::function<Step<nat>(const nat&)> c = [self](const nat& n) -> Step<nat> {
        if (self.continuous(n + 1)) return Continue<nat>{n + 1};
        return Stop{};
    };
    return unfold<nat>(c, 0);
}

MindchangeWitness ConatMyhill::witness(const CoNat& x) const {
    ConatMyhill self = *this;
    CoNat s = horizon();
    MindchangeWitness out;
    out.w = inf(x, s);
    out.resolve = [self, x, s](const LpoAnswer& a) -> PathWitness {
        auto* fin = std::get_if<Finite>(&a);
        if (!fin) return PathWitness{0};
        const nat t = fin->n;
        auto lookup = [&self](const Desc& d, nat rank) -> PathWitness {
            Solution sol = self.solution(rank);
            if (auto* c = std::get_if<ContSolution>(&sol)) return c->iso.find_dom(d.n)->w;
            return std::get<DiscSolution>(sol).iso.find_dom(d)->w;
        };
        if (s.bit(t)) {
            // I_{t+1} is the first discontinuous stage: LPO decides x
            const Solution sol = self.solution(t + 1);
            const auto& d = std::get<DiscSolution>(sol);
            Desc dx = decode(d.dec, x);
            if (dx.is_inf) return d.iso.find_dom(dx)->w;
            return lookup(dx, std::max(dx.n, t) + 1);
        }
        return lookup(Desc::fin(t), t + 1);
    };
    return out;
}

ConatMyhill bijection(ConatInjection f, ConatInjection g) {
    return ConatMyhill(make_pair(std::move(f), std::move(g)));
}

}  // namespace comyhill
