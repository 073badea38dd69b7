#include "comyhill/conat.hpp"

#include <atomic>
#include <memory>

namespace comyhill {

CoNat CoNat::from_bits(std::function<bool(std::size_t)> bit) {
    CoNat x;
    x.s_ = Stream<std::int64_t>::corec(
        [bit = std::move(bit)](std::size_t k, const std::int64_t* prev) -> std::int64_t {
            if (prev && *prev >= 0) return *prev;
            return bit(k) ? static_cast<std::int64_t>(k) : -1;
        });
    return x;
}

CoNat::CoNat() : s_(Stream<std::int64_t>::constant(-1)) {}

std::int64_t CoNat::pos_upto(std::size_t n) const {
    std::int64_t p = s_.at(n + off_);
    if (p < 0) return -1;
    if (static_cast<std::size_t>(p) < off_) return -1;  // the 1 was cut off
    return p - static_cast<std::int64_t>(off_);
}

bool CoNat::bit(std::size_t n) const {
    return pos_upto(n) == static_cast<std::int64_t>(n);
}

std::vector<unsigned char> CoNat::prefix(std::size_t n) const {
    std::vector<unsigned char> out(n, 0);
    if (n == 0) return out;
    auto p = pos_upto(n - 1);
    if (p >= 0) out[static_cast<std::size_t>(p)] = 1;
    return out;
}

std::string CoNat::show(std::size_t n) const {
    std::string s;
    for (auto b : prefix(n)) s.push_back(b ? '1' : '0');
    return s;
}

BitStream CoNat::bits() const {
    CoNat self = *this;
    return BitStream([self](std::size_t k) -> unsigned char { return self.bit(k); });
}

CoNat CoNat::tail() const {
    CoNat t = *this;
    t.off_ += 1;
    return t;
}

CoNat from_nat(nat n) {
    return CoNat::from_bits([n](std::size_t k) { return k == n; });
}

CoNat infinity() { return CoNat(); }

CoNat canon(const BitStream& s) {
    return CoNat::from_bits([s](std::size_t k) { return s.at(k) != 0; });
}

CoNat succ(const CoNat& x) {
    return CoNat::from_bits([x](std::size_t k) { return k > 0 && x.bit(k - 1); });
}

CoNatCase observe(const CoNat& x) {
    if (x.bit(0)) return Zero{};
    return Succ{x.tail()};
}

bool is_at_least(const CoNat& x, nat n) { return x.at_least(n); }

Trichotomy trichotomy_nat(const CoNat& x, nat n) {
    auto p = x.pos_upto(n);
    if (p < 0) return Greater{};
    if (static_cast<nat>(p) == n) return Equal{};
    return Less{static_cast<nat>(p)};
}

bool eq_nat(const CoNat& x, nat n) { return x.bit(n); }

CoNat inf(const CoNat& x, const CoNat& y) {
    return CoNat::from_bits([x, y](std::size_t n) {
        return x.at_least(n) && y.at_least(n) && (x.bit(n) || y.bit(n));
    });
}

CoNat sup(const CoNat& x, const CoNat& y) {
    // one side equals n and the other is already at or below n
    return CoNat::from_bits([x, y](std::size_t n) {
        return (x.bit(n) && y.pos_upto(n) >= 0) || (y.bit(n) && x.pos_upto(n) >= 0);
    });
}

CoNat add(const CoNat& x, const CoNat& y) {
    return CoNat::from_bits([x, y](std::size_t n) {
        auto i = x.pos_upto(n);
        return i >= 0 && y.bit(n - static_cast<std::size_t>(i));
    });
}

CoNat mul(const CoNat& x, const CoNat& y) {
    return CoNat::from_bits([x, y](std::size_t n) {
        if (n == 0) return x.bit(0) || y.bit(0);
        auto i = x.pos_upto(n), j = y.pos_upto(n);
        return i > 0 && j > 0 && static_cast<std::size_t>(i * j) == n;
    });
}

CoNat sub(const CoNat& x, nat n) {
    // drops n successor layers, truncating at zero
    return CoNat::from_bits([x, n](std::size_t k) {
        if (k == 0) return x.pos_upto(n) >= 0;
        return x.bit(k + n);
    });
}

TriBool le_upto(const CoNat& x, const CoNat& y, Fuel fuel) {
    for (std::size_t n = 0; fuel.allows(n); ++n) {
        bool xb = x.bit(n), yb = y.bit(n);
        // both were >= n so far; x = n decides x <= y, y = n < x decides no
        if (xb) return {TriBool::True, n};
        if (yb) return {TriBool::False, n};
    }
    return {TriBool::Unknown, fuel.budget};
}

std::optional<nat> apart(const CoNat& x, const CoNat& y, Fuel fuel) {
    for (std::size_t n = 0; fuel.allows(n); ++n) {
        bool xb = x.bit(n), yb = y.bit(n);
        if (xb != yb) return n;
        if (xb) return std::nullopt;  // both equal n
    }
    return std::nullopt;
}

bool prefix_equal(const CoNat& x, const CoNat& y, std::size_t n) {
    if (n == 0) return true;
    return x.pos_upto(n - 1) == y.pos_upto(n - 1);
}

nat mp_search(const CoNat& x) {
    for (std::size_t n = 0;; ++n)
        if (x.bit(n)) return n;
}

std::optional<nat> mp_search_upto(const CoNat& x, Fuel fuel) {
    if (fuel.unbounded) return mp_search(x);
    if (fuel.budget == 0) return std::nullopt;
    auto p = x.pos_upto(fuel.budget - 1);
    if (p < 0) return std::nullopt;
    return static_cast<nat>(p);
}

std::optional<nat> to_nat(const CoNat& x, Fuel fuel) { return mp_search_upto(x, fuel); }

static InfCase classify_inf(const CoNat& x, nat n) {
    if (std::holds_alternative<Equal>(trichotomy_nat(x, n))) return TookLeft{n};
    return TookRight{n};
}

InfCase inf_case(const CoNat& x, const CoNat& y) {
    return classify_inf(x, mp_search(inf(x, y)));
}

std::optional<InfCase> inf_case_upto(const CoNat& x, const CoNat& y, Fuel fuel) {
    auto n = mp_search_upto(inf(x, y), fuel);
    if (!n) return std::nullopt;
    return classify_inf(x, *n);
}

namespace {

// Coalgebra state for the lift: scanning the input at index s, or counting
// down the r remaining successors of f(s) - s.
struct LiftState {
    bool counting = false;
    nat s = 0;
    nat r = 0;
};

}  // namespace

ConatFn lift_inflationary(NatFn f) {
    return [f](const CoNat& x) {
        std::function<Step<LiftState>(const LiftState&)> c =
            [f, x](const LiftState& st) -> Step<LiftState> {
            if (st.counting) {
                if (st.r == 0) return Stop{};
                return Continue<LiftState>{{true, st.s, st.r - 1}};
            }
            nat v = f(st.s);
            if (v < st.s) throw InflationViolation(st.s);
            if (x.bit(st.s)) {
                nat d = v - st.s;  // f'(s), the difference map
                if (d == 0) return Stop{};
                return Continue<LiftState>{{true, st.s, d - 1}};
            }
            return Continue<LiftState>{{false, st.s + 1, 0}};
        };
        return unfold<LiftState>(c, LiftState{});
    };
}

}  // namespace comyhill
