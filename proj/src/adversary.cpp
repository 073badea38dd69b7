#include "comyhill/adversary.hpp"

#include <algorithm>
#include <memory>
#include <set>

#include "json.hpp"

namespace comyhill {

namespace {

// h = f_inf and its inverse, written out directly.
TwoSolution infinite_solution() {
    TwoFn h = [](const TwoCoNat& p) -> TwoCoNat {
        if (!p.level) return {false, succ(p.value)};
        if (p.value.bit(0)) return {false, from_nat(0)};
        return {true, p.value.tail()};
    };
    TwoFn h_inv = [](const TwoCoNat& q) -> TwoCoNat {
        if (q.level) return {true, succ(q.value)};
        if (q.value.bit(0)) return {true, from_nat(0)};
        return {false, q.value.tail()};
    };
    return {h, h_inv};
}

TwoSolution identity_solution() {
    TwoFn id = [](const TwoCoNat& p) { return p; };
    return {id, id};
}

}  // namespace

Candidate assume_infinite() {
    return {"assume-infinite", [](const CoNat&) { return infinite_solution(); }};
}

Candidate lookahead(nat k) {
    return {"lookahead-" + std::to_string(k), [k](const CoNat& x) {
                // finite x: f_inf is a solution at even x, the identity at odd x
                auto at = k == 0 ? -1 : x.pos_upto(k - 1);
                if (at >= 0 && at % 2 == 1) return identity_solution();
                return infinite_solution();
            }};
}

Candidate constant_candidate() {
    return {"constant", [](const CoNat&) {
                TwoFn c = [](const TwoCoNat&) { return two(false, 0); };
                return TwoSolution{c, c};
            }};
}

Candidate non_continuous() {
    return {"non-continuous", [](const CoNat& x) {
                for (std::size_t k = 0;; ++k)
                    if (x.bit(k)) break;
                return infinite_solution();
            }};
}

std::optional<Candidate> candidate_by_name(const std::string& name) {
    if (name == "assume-infinite") return assume_infinite();
    if (name == "constant") return constant_candidate();
    if (name == "non-continuous") return non_continuous();
    const std::string pre = "lookahead-";
    if (name.rfind(pre, 0) == 0 && name.size() > pre.size()) {
        const std::string d = name.substr(pre.size());
        if (d.size() > 6 || !std::all_of(d.begin(), d.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            return std::nullopt;
        return lookahead(std::stoull(d));
    }
    return std::nullopt;
}

namespace {

struct ProbeOverrun {
    std::size_t at;
};
struct BudgetOut {};

struct Meter {
    std::size_t total = 0, limit = 0, per_probe = 0, highwater = 0;
};

struct Probe {
    std::shared_ptr<Meter> meter;
    std::size_t seen = 0;  // bits of this x read so far
};

// Fresh counting view of `base`; `probe` reports the bits read.
CoNat instrument(const CoNat& base, const std::shared_ptr<Meter>& meter, std::shared_ptr<Probe>* probe = nullptr) {
    auto pr = std::make_shared<Probe>();
    pr->meter = meter;
    if (probe) *probe = pr;
    return CoNat::from_bits([base, pr](std::size_t k) {
        Meter& m = *pr->meter;
        if (k >= m.per_probe) throw ProbeOverrun{k};
        if (k + 1 > pr->seen) {
            m.total += k + 1 - pr->seen;
            pr->seen = k + 1;
            m.highwater = std::max(m.highwater, pr->seen);
            if (m.total > m.limit) throw BudgetOut{};
        }
        return base.bit(k);
    });
}

// Checks one point of the committed instance. x = nullopt is infinity,
// where the graph is connected and only bijectivity can fail.
std::optional<Violation> check_point(const TwoSolution& sol, std::optional<nat> x, IsoPoint p, bool y_side,
                                     nat ground, std::size_t fuel) {
    const TwoFn& fwd = y_side ? sol.h_inv : sol.h;
    const TwoFn& bwd = y_side ? sol.h : sol.h_inv;
    const TwoCoNat q = fwd(two(p.level, p.value));
    const auto qv = mp_search_upto(q.value, fuel);
    if (!qv) return std::nullopt;  // nothing decided within fuel
    const IsoPoint qi{q.level, *qv};
    const TwoCoNat r = bwd(two(qi.level, qi.value));
    const auto rv = mp_search_upto(r.value, fuel);
    // p.value < fuel, so a missing 1 is a genuine difference
    if (r.level != p.level || !rv || *rv != p.value) {
        std::string back = rv ? std::to_string(*rv) : ">=" + std::to_string(fuel);
        return Violation{"NotBijective", y_side, p,
                         "goes to (" + std::to_string(qi.level) + ", " + std::to_string(qi.value) +
                             ") and comes back to (" + std::to_string(r.level) + ", " + back + ")"};
    }
    if (!x) return std::nullopt;
    auto cp = ladder_component(*x, p, y_side);
    auto cq = ladder_component(*x, qi, !y_side);
    if (!cp || !cq || *cp == *cq) return std::nullopt;
    std::string kind = p.level && !qi.level && p.value >= ground ? "GroundLevelWrong" : "NotCompatible";
    return Violation{kind, y_side, p,
                     "partner (" + std::to_string(qi.level) + ", " + std::to_string(qi.value) +
                         ") lies in another component"};
}

std::optional<Violation> scan(const TwoSolution& sol, std::optional<nat> x, nat width, nat ground,
                              std::size_t fuel) {
    for (bool y_side : {false, true})
        for (bool level : {true, false})
            for (nat v = 0; v <= width; ++v)
                if (auto bad = check_point(sol, x, {level, v}, y_side, ground, fuel)) return bad;
    return std::nullopt;
}

}  // namespace

AdversaryReport adversary(const Candidate& c, const StageBudget& budget) {
    AdversaryReport r;
    r.candidate = c.name;
    auto meter = std::make_shared<Meter>();
    meter->limit = budget.forced_bits;
    meter->per_probe = budget.per_probe;
    const std::size_t fuel = budget.fuel;
    auto finish = [&](Outcome o) {
        r.outcome = o;
        r.forced_bits_highwater = meter->highwater;
        r.forced_bits_total = meter->total;
        return r;
    };
    if (budget.forced_bits == 0) {
        r.stage = "0";
        r.probe = "no budget";
        return finish(Outcome::Survived);
    }
    try {
        // stage 0: sanity on x = inf
        r.stage = "0";
        r.probe = "stage 0 sanity";
        {
            auto sol = c.solve(instrument(infinity(), meter));
            if (auto bad = scan(sol, std::nullopt, 15, 0, fuel)) {
                r.committed = true;
                r.violation = bad;
                r.transcript.push_back({"0", 0, 0, 0, 0, "violation on x = inf"});
                return finish(Outcome::Defeated);
            }
            r.transcript.push_back({"0", 0, 0, 0, 0, "bijective on the sample window at inf"});
        }

        // stage 1: ground levels settle above some n
        r.stage = "1";
        auto ground = [&](const CoNat& x, const CoNat& y) {
            auto sol = c.solve(instrument(x, meter));
            return std::make_pair(sol.h({true, y}).level, sol.h_inv({true, y}).level);
        };
        r.probe = "ground levels at inf";
        const auto v_inf = ground(infinity(), infinity());
        std::optional<nat> n;
        for (nat t = 1; t <= budget.max_threshold; t *= 2) {
            r.probe = "stabilization above " + std::to_string(t);
            const CoNat base = from_nat(t);
            auto moved = search_pair([&](const CoNat& x, const CoNat& y) {
                return ground(add(base, x), add(base, y)) != v_inf;
            });
            r.transcript.push_back({"1", t, 0, 0, 0, moved ? "ground moves" : "ground settled"});
            if (!moved) {
                n = t;
                break;
            }
        }
        if (!n) {
            r.probe = "no stabilization up to " + std::to_string(budget.max_threshold);
            return finish(Outcome::Survived);
        }
        r.n = *n;

        // bound the values and the x-dependence on A_n = {1} x {0..n-1}
        nat m = *n + 1;
        std::vector<std::pair<IsoPoint, IsoPoint>> committed;
        for (nat k = 0; k < *n; ++k) {
            r.probe = "commitments on (1, " + std::to_string(k) + ")";
            std::shared_ptr<Probe> pr;
            auto sol = c.solve(instrument(infinity(), meter, &pr));
            auto a = sol.h(two(true, k));
            auto b = sol.h_inv(two(true, k));
            auto av = mp_search_upto(a.value, fuel);
            auto bv = mp_search_upto(b.value, fuel);
            if (!av || !bv) return finish(Outcome::Survived);
            committed.push_back({{a.level, *av}, {b.level, *bv}});
            m = std::max({m, *av, *bv, static_cast<nat>(pr->seen)});
        }
        r.m = m;
        std::set<nat> sl, sr;
        for (auto& [a, b] : committed) {
            if (a.level && a.value >= *n && a.value <= m) sl.insert(a.value);
            if (b.level && b.value >= *n && b.value <= m) sr.insert(b.value);
        }
        r.s_left = sl.size();
        r.s_right = sr.size();

        // unequal counts break at odd x, equal counts at even x
        const bool unequal = sl.size() != sr.size();
        const nat x = unequal ? 2 * m + 1 : 2 * m;
        r.stage = unequal ? "2a" : "2b";
        r.committed = true;
        r.committed_x = x;
        r.transcript.push_back({r.stage, *n, m, r.s_left, r.s_right, "commit x = " + std::to_string(x)});
        r.probe = "verification at x = " + std::to_string(x);
        auto sol = c.solve(instrument(from_nat(x), meter));
        if (auto bad = scan(sol, x, 2 * m + 3, *n, fuel)) {
            r.violation = bad;
            return finish(Outcome::Defeated);
        }
        return finish(Outcome::Survived);
    } catch (const ProbeOverrun& e) {
        r.probe += ": read bit " + std::to_string(e.at) + " of x";
        return finish(Outcome::NonContinuous);
    } catch (const WatchdogExhausted&) {
        r.probe += ": search watchdog";
        return finish(Outcome::NonContinuous);
    } catch (const BudgetOut&) {
        r.probe += ": forced-bit budget spent";
        return finish(Outcome::Survived);
    }
}

bool recheck(const Candidate& c, const AdversaryReport& r, std::size_t fuel) {
    if (r.outcome != Outcome::Defeated || !r.violation || !r.committed) return false;
    const CoNat x = r.committed_x ? from_nat(*r.committed_x) : infinity();
    auto sol = c.solve(x);
    auto v = check_point(sol, r.committed_x, r.violation->point, r.violation->y_side, r.n, fuel);
    return v && v->kind == r.violation->kind;
}

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Defeated: return "Defeated";
        case Outcome::Survived: return "Survived";
        case Outcome::NonContinuous: return "NonContinuous";
    }
    return "?";
}

std::string report_json(const AdversaryReport& r) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["candidate"] = r.candidate;
    j["outcome"] = outcome_name(r.outcome);
    j["stage"] = r.stage;
    j["n"] = r.n;
    j["m"] = r.m;
    j["s_left"] = r.s_left;
    j["s_right"] = r.s_right;
    if (!r.committed)
        j["committed_x"] = nullptr;
    else if (r.committed_x)
        j["committed_x"] = *r.committed_x;
    else
        j["committed_x"] = "inf";
    if (r.violation) {
        const auto& v = *r.violation;
        j["violation"] = {{"kind", v.kind},
                          {"point", {{"side", v.y_side ? "codomain" : "domain"},
                                     {"level", v.point.level ? 1 : 0},
                                     {"value", v.point.value}}},
                          {"details", v.details}};
    } else {
        j["violation"] = nullptr;
    }
    j["forced_bits_highwater"] = r.forced_bits_highwater;
    j["forced_bits_total"] = r.forced_bits_total;
    j["probe"] = r.probe;
    auto& t = j["transcript"] = ordered_json::array();
    for (const auto& e : r.transcript)
        t.push_back({{"stage", e.stage}, {"n", e.n}, {"m", e.m}, {"s_left", e.s_left},
                     {"s_right", e.s_right}, {"note", e.note}});
    return j.dump(2);
}

}  // namespace comyhill
