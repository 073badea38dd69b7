#pragma once

// 2 x N-infinity: the broken ladder family, classification of continuous
// injections, and a continuous bijection builder.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "comyhill/search.hpp"

namespace comyhill {

struct TwoCoNat {
    bool level = false;
    CoNat value;
};
using TwoFn = std::function<TwoCoNat(const TwoCoNat&)>;

inline TwoCoNat two(bool level, nat v) { return {level, from_nat(v)}; }
inline TwoCoNat two_inf(bool level) { return {level, infinity()}; }
// Levels agree and values agree on the first `fuel` bits.
bool same_two(const TwoCoNat& a, const TwoCoNat& b, std::size_t fuel);

// f_x, g_x: one connected component when x = inf, broken near (1, x/2)
// otherwise. The comparisons with x are made per output bit.
std::pair<TwoFn, TwoFn> broken_ladder(CoNat x);

// Exact versions on isolated points for finite x, used to re-check
// adversary reports without going through the lazy maps.
struct IsoPoint {
    bool level = false;
    nat value = 0;
    friend bool operator==(const IsoPoint& a, const IsoPoint& b) {
        return a.level == b.level && a.value == b.value;
    }
    friend bool operator<(const IsoPoint& a, const IsoPoint& b) {
        return a.level != b.level ? a.level < b.level : a.value < b.value;
    }
};
IsoPoint ladder_fx(nat x, IsoPoint p);
IsoPoint ladder_gx(nat x, IsoPoint p);
std::optional<IsoPoint> ladder_fx_inv(nat x, IsoPoint q);
std::optional<IsoPoint> ladder_gx_inv(nat x, IsoPoint q);
// The start of the ray containing p, walking backwards; `y_side` says
// whether p (and the returned stopper) lives in the codomain copy.
struct Stopper {
    bool y_side = false;
    IsoPoint at;
    friend bool operator==(const Stopper& a, const Stopper& b) {
        return a.y_side == b.y_side && a.at == b.at;
    }
};
std::optional<Stopper> ladder_component(nat x, IsoPoint p, bool y_side, std::size_t max_steps = 1 << 16);

// f(i, n + x) = (i xor j, fprime(i, x)).
struct ContInjDescriptor {
    bool j = false;
    nat n = 0;
    std::function<CoNat(bool, const CoNat&)> fprime;
};
inline constexpr nat kMaxThreshold = 1024;
ContInjDescriptor classify(const TwoFn& f, nat max_threshold = kMaxThreshold,
                           std::size_t watchdog = kDefaultWatchdog);

class TwoBijection {
public:
    TwoCoNat h(const TwoCoNat& p) const;
    TwoCoNat h_inv(const TwoCoNat& q) const;
    // Exponent m with h(p) = f (g f)^m (p); p must be isolated or infinite.
    std::int64_t witness(const TwoCoNat& p) const;

    bool tangled() const;
    bool substituted() const;  // g was replaced by g f g
    nat threshold() const;     // n + m: levels are rigid from here on
    const TwoFn& f() const;
    const TwoFn& g() const;

    struct State;
    explicit TwoBijection(std::shared_ptr<State> st) : st_(std::move(st)) {}

private:
    std::shared_ptr<State> st_;
};

// Cantor-Bernstein on the isolated points, chains traced backwards under a
// step budget (ChainBudgetExceeded past it); tails follow the rigid levels.
TwoBijection build_bijection(TwoFn f, TwoFn g, std::size_t search_fuel = 1 << 14);

// f (g f)^m (p) for isolated or infinite p; negative m uses preimages.
TwoCoNat replay_two(const TwoFn& f, const TwoFn& g, const TwoCoNat& p, std::int64_t m,
                    std::size_t fuel = 1 << 14);

}  // namespace comyhill
