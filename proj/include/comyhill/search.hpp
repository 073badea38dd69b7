#pragma once

// Selection on conaturals, quantifiers, and LPO deciders.

#include <functional>
#include <optional>
#include <utility>
#include <variant>

#include "comyhill/conat.hpp"

namespace comyhill {

inline constexpr std::size_t kDefaultWatchdog = std::size_t{1} << 20;

struct DecPred {
    std::function<bool(const CoNat&)> eval;
    std::optional<nat> modulus;  // declared, only read by the adversary

    DecPred() = default;
    template <class F,
              class = std::enable_if_t<std::is_invocable_r_v<bool, F, const CoNat&>>>
    DecPred(F f) : eval(std::move(f)) {}  // NOLINT

    bool operator()(const CoNat& x) const { return eval(x); }
};

DecPred negate(DecPred q);

// Runs q on x with a forcing budget; WatchdogExhausted if q overruns it.
bool guarded(const DecPred& q, const CoNat& x, std::size_t watchdog = kDefaultWatchdog);

// Least counterexample: bit n is 1 iff q(n) = 0 and q(k) = 1 for k < n.
CoNat epsilon(DecPred q, std::size_t watchdog = kDefaultWatchdog);
bool exists_conat(const DecPred& q, std::size_t watchdog = kDefaultWatchdog);
bool forall_conat(const DecPred& q, std::size_t watchdog = kDefaultWatchdog);

struct TwoPoint {
    bool level = false;
    CoNat value;
};
std::optional<TwoPoint> search_two(const std::function<bool(bool, const CoNat&)>& q,
                                   std::size_t watchdog = kDefaultWatchdog);
std::optional<std::pair<CoNat, CoNat>> search_pair(
    const std::function<bool(const CoNat&, const CoNat&)>& q,
    std::size_t watchdog = kDefaultWatchdog);

struct Finite {
    nat n;
};
struct Infinite {};
using LpoAnswer = std::variant<Finite, Infinite>;

struct LpoDecider {
    std::function<LpoAnswer(const CoNat&)> decide;
    nat target = 0;  // the isolated image of infinity the decider rests on
    LpoAnswer operator()(const CoNat& p) const { return decide(p); }
};

LpoDecider lpo_from_isolated(ConatFn f, nat target);

struct CertificateViolation {
    nat n;
};
using OscillationAnswer = std::variant<Finite, Infinite, CertificateViolation>;

OscillationAnswer oscillation_decider(const std::function<bool(const CoNat&)>& f,
                                      const std::function<nat(nat)>& cert,
                                      const CoNat& x, nat horizon);

}  // namespace comyhill
