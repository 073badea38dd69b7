#pragma once

// Back-and-forth on conaturals: an optimistic continuous phase that assumes
// f(inf) = g(inf) = inf, and a switch to LPO-backed descriptors once that
// assumption is caught failing.

#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "comyhill/myhill_nat.hpp"
#include "comyhill/search.hpp"

namespace comyhill {

struct ConatInjection {
    ConatFn apply;
    std::string name;
    CoNat operator()(const CoNat& x) const { return apply(x); }
};

// Rejects f if two of {0..samples-1, inf} provably collide within fuel.
ConatInjection make_conat_injection(ConatFn f, std::string name, nat samples = 8,
                                    std::size_t fuel = 64);

// Point of N-infinity once LPO makes it decidable.
struct Desc {
    bool is_inf = false;
    nat n = 0;

    static Desc fin(nat k) { return {false, k}; }
    static Desc inf() { return {true, 0}; }
    friend bool operator<(const Desc& a, const Desc& b) {
        if (a.is_inf != b.is_inf) return b.is_inf;
        return !a.is_inf && a.n < b.n;
    }
    friend bool operator==(const Desc& a, const Desc& b) {
        return a.is_inf == b.is_inf && (a.is_inf || a.n == b.n);
    }
    std::string show() const { return is_inf ? "inf" : std::to_string(n); }
};

CoNat embed(const Desc& d);
Desc decode(const LpoDecider& dec, const CoNat& x);
// Fuel-bounded guess: no 1 within fuel reads as inf.
Desc decode_upto(const CoNat& x, std::size_t fuel);

// f, g with their values at infinity cached.
struct ConatPair {
    ConatInjection f, g;
    CoNat f_inf, g_inf;
};
ConatPair make_pair(ConatInjection f, ConatInjection g);

struct ContSolution {
    PartialIso iso;
    nat rank = 0;
};

struct DiscSolution {
    PartialIsoT<Desc> iso;
    nat rank = 0;
    LpoDecider dec;
};

using Solution = std::variant<ContSolution, DiscSolution>;

struct AddPair {
    nat m;
    ContSolution sol;
};
struct Dummy {
    LpoDecider dec;
};
using PhiResult = std::variant<AddPair, Dummy>;

// Forth step: puts n in the domain, or reports LPO.
PhiResult phi(const ContSolution& sol, nat n, const ConatPair& p);
// Back step: puts n in the codomain, or reports LPO.
PhiResult psi(const ContSolution& sol, nat n, const ConatPair& p);

struct Extended {
    ContSolution sol;
};
struct Switch {
    LpoDecider dec;
};
using ExtendCont = std::variant<Extended, Switch>;

ExtendCont extend_cont(const ContSolution& sol, const ConatPair& p);
DiscSolution cont_to_disc(const ContSolution& sol, LpoDecider dec, const ConatPair& p);
DiscSolution extend_disc(const DiscSolution& sol, const ConatPair& p);

struct MindchangeWitness {
    CoNat w;
    std::function<PathWitness(const LpoAnswer&)> resolve;
};

// f (g f)^m (x); negative m searches preimages among inf and 0..bound,
// comparing prefixes of length fuel.
CoNat replay_conat(const ConatPair& p, const CoNat& x, std::int64_t m, std::size_t fuel,
                   nat bound = 256);

class ConatMyhill {
public:
    explicit ConatMyhill(ConatPair p);

    // I_n, rank >= n.
    Solution solution(nat n) const;
    bool continuous(nat n) const;
    // First n with I_n discontinuous, if reached by rank `upto`.
    std::optional<nat> switch_rank(nat upto) const;

    CoNat h(const CoNat& x) const;
    CoNat h_inv(const CoNat& y) const;
    MindchangeWitness witness(const CoNat& x) const;
    // s >= n iff I_n is continuous.
    CoNat horizon() const;

    const ConatPair& pair() const;

private:
    struct State;
    void ensure(nat n) const;
    std::shared_ptr<State> st_;
};

ConatMyhill bijection(ConatInjection f, ConatInjection g);

}  // namespace comyhill
