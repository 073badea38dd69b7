#include "comyhill/search.hpp"

#include <atomic>
#include <memory>

namespace comyhill {

DecPred negate(DecPred q) {
    DecPred out([q](const CoNat& x) { return !q.eval(x); });
    out.modulus = q.modulus;
    return out;
}

bool guarded(const DecPred& q, const CoNat& x, std::size_t watchdog) {
    auto count = std::make_shared<std::atomic<std::size_t>>(0);
    CoNat watched = CoNat::from_bits([x, count, watchdog](std::size_t k) {
        if (count->fetch_add(1) >= watchdog) throw WatchdogExhausted(watchdog);
        return x.bit(k);
    });
    return q.eval(watched);
}

CoNat epsilon(DecPred q, std::size_t watchdog) {
    Stream<unsigned char> ok([q, watchdog](std::size_t k) -> unsigned char {
        return guarded(q, from_nat(k), watchdog);
    });
    auto all_ok = Stream<unsigned char>::corec(
        [ok](std::size_t k, const unsigned char* prev) -> unsigned char {
            return (prev == nullptr || *prev) && ok.at(k);
        });
    return CoNat::from_bits([ok, all_ok](std::size_t n) {
        return (n == 0 || all_ok.at(n - 1)) && !ok.at(n);
    });
}

bool forall_conat(const DecPred& q, std::size_t watchdog) {
    return guarded(q, epsilon(q, watchdog), watchdog);
}

bool exists_conat(const DecPred& q, std::size_t watchdog) {
    return guarded(q, epsilon(negate(q), watchdog), watchdog);
}

std::optional<TwoPoint> search_two(const std::function<bool(bool, const CoNat&)>& q,
                                   std::size_t watchdog) {
    for (bool level : {false, true}) {
        DecPred qi([q, level](const CoNat& x) { return q(level, x); });
        CoNat x = epsilon(negate(qi), watchdog);
        if (guarded(qi, x, watchdog)) return TwoPoint{level, x};
    }
    return std::nullopt;
}

std::optional<std::pair<CoNat, CoNat>> search_pair(
    const std::function<bool(const CoNat&, const CoNat&)>& q, std::size_t watchdog) {
    auto witness_y = [q, watchdog](const CoNat& x) {
        DecPred qx([q, x](const CoNat& y) { return q(x, y); });
        return epsilon(negate(qx), watchdog);
    };
    DecPred p([q, witness_y](const CoNat& x) { return q(x, witness_y(x)); });
    CoNat x = epsilon(negate(p), watchdog);
    if (!guarded(p, x, watchdog)) return std::nullopt;
    return std::make_pair(x, witness_y(x));
}

LpoDecider lpo_from_isolated(ConatFn f, nat target) {
    if (!std::holds_alternative<Equal>(trichotomy_nat(f(infinity()), target)))
        throw NotIsolated("f(inf) is not " + std::to_string(target));
    LpoDecider d;
    d.target = target;
    d.decide = [f, target](const CoNat& p) -> LpoAnswer {
        // f is injective and f(inf) = target, so f(p) = target iff p = inf
        if (std::holds_alternative<Equal>(trichotomy_nat(f(p), target))) return Infinite{};
        return Finite{mp_search(p)};
    };
    return d;
}

OscillationAnswer oscillation_decider(const std::function<bool(const CoNat&)>& f,
                                      const std::function<nat(nat)>& cert,
                                      const CoNat& x, nat horizon) {
    const bool at_inf = f(infinity());
    DecPred moves([f, x, at_inf](const CoNat& y) { return f(add(x, y)) != at_inf; });
    if (exists_conat(moves)) return Finite{mp_search(x)};
    for (nat n = 0; n <= horizon; ++n)
        if (f(from_nat(n + cert(n))) == at_inf) return CertificateViolation{n};
    return Infinite{};
}

}  // namespace comyhill
