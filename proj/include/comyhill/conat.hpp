#pragma once

// Conatural numbers as bit streams with at most one 1.

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "comyhill/errors.hpp"
#include "comyhill/stream.hpp"

namespace comyhill {

using nat = std::uint64_t;

struct Fuel {
    std::size_t budget = 0;
    bool unbounded = false;

    Fuel() = default;
    Fuel(std::size_t b) : budget(b) {}  // NOLINT: plain counts read naturally
    static Fuel infinite() {
        Fuel f;
        f.unbounded = true;
        return f;
    }
    bool allows(std::size_t i) const { return unbounded || i < budget; }
};

struct TriBool {
    enum Kind { True, False, Unknown } kind = Unknown;
    std::size_t index = 0;  // deciding index, or where fuel ran out

    bool is_true() const { return kind == True; }
    bool is_false() const { return kind == False; }
    bool unknown() const { return kind == Unknown; }
    friend bool operator==(const TriBool& a, TriBool::Kind k) { return a.kind == k; }
};

class CoNat {
public:
    // Canonicalizing constructor: keeps the first 1 of the generated bits.
    static CoNat from_bits(std::function<bool(std::size_t)> bit);

    CoNat();  // infinity

    bool bit(std::size_t n) const;
    // Index of the 1 if it sits in 0..n, else -1.
    std::int64_t pos_upto(std::size_t n) const;
    // Bits 0..n-1 are all zero.
    bool at_least(std::size_t n) const { return n == 0 || pos_upto(n - 1) < 0; }

    std::vector<unsigned char> prefix(std::size_t n) const;
    std::string show(std::size_t n) const;
    BitStream bits() const;

    // Underlying tail view: bit k of tail() is bit k+1 of *this.
    CoNat tail() const;
    std::size_t forced() const { return s_.forced(); }

private:
    Stream<std::int64_t> s_;  // cell k: position of the 1 within 0..k, or -1
    std::size_t off_ = 0;
};

CoNat from_nat(nat n);
CoNat infinity();
CoNat canon(const BitStream& s);
CoNat succ(const CoNat& x);

struct Zero {};
struct Succ {
    CoNat pred;
};
using CoNatCase = std::variant<Zero, Succ>;
CoNatCase observe(const CoNat& x);

struct Stop {};
template <class S>
struct Continue {
    S next;
};
template <class S>
using Step = std::variant<Stop, Continue<S>>;

// Terminal coalgebra map: output is 0 iff c(seed) stops, else Succ of the
// unfold from the next state. Bit n needs n+1 applications of c.
template <class S>
CoNat unfold(std::function<Step<S>(const S&)> c, S seed) {
    // cell k holds the state reached after k Continue steps, or nothing
    // once a Stop was seen.
    auto states = Stream<std::optional<S>>::corec(
        [c, seed](std::size_t k, const std::optional<S>* prev) -> std::optional<S> {
            if (k == 0) return seed;
            if (!prev->has_value()) return std::nullopt;
            auto r = c(**prev);
            if (auto* go = std::get_if<Continue<S>>(&r)) return go->next;
            return std::nullopt;
        });
    return CoNat::from_bits([states, c](std::size_t k) {
        auto st = states.at(k);
        if (!st) return false;
        return std::holds_alternative<Stop>(c(*st));
    });
}

bool is_at_least(const CoNat& x, nat n);

struct Less {
    nat k;
};
struct Equal {};
struct Greater {};
using Trichotomy = std::variant<Less, Equal, Greater>;
Trichotomy trichotomy_nat(const CoNat& x, nat n);
bool eq_nat(const CoNat& x, nat n);

CoNat inf(const CoNat& x, const CoNat& y);
CoNat sup(const CoNat& x, const CoNat& y);
CoNat add(const CoNat& x, const CoNat& y);
CoNat mul(const CoNat& x, const CoNat& y);
CoNat sub(const CoNat& x, nat n);

TriBool le_upto(const CoNat& x, const CoNat& y, Fuel fuel);
std::optional<nat> apart(const CoNat& x, const CoNat& y, Fuel fuel);
bool prefix_equal(const CoNat& x, const CoNat& y, std::size_t n);

nat mp_search(const CoNat& x);
std::optional<nat> mp_search_upto(const CoNat& x, Fuel fuel);
std::optional<nat> to_nat(const CoNat& x, Fuel fuel);

struct TookLeft {
    nat n;
};
struct TookRight {
    nat n;
};
using InfCase = std::variant<TookLeft, TookRight>;
InfCase inf_case(const CoNat& x, const CoNat& y);
std::optional<InfCase> inf_case_upto(const CoNat& x, const CoNat& y, Fuel fuel);

using NatFn = std::function<nat(nat)>;
using ConatFn = std::function<CoNat(const CoNat&)>;

// Extension of an inflationary f to conaturals, F(n) = f(n), F(inf) = inf.
// Inflation is checked for every index the output is forced through.
ConatFn lift_inflationary(NatFn f);

}  // namespace comyhill
