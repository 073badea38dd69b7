// comyhill: command-line front end.
// Exit codes: 0 ok / Defeated, 1 usage or runtime error, 2 Survived, 3 NonContinuous.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "comyhill/adversary.hpp"
#include "comyhill/families.hpp"
#include "comyhill/graphs.hpp"

using namespace comyhill;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t default_fuel() {
    if (const char* e = std::getenv("COMYHILL_FUEL")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(e, &end, 10);
        if (end && *end == '\0' && v >= 1) return v;
        throw UsageError("COMYHILL_FUEL must be a positive integer");
    }
    return 4096;
}

std::string show(const CoNat& x, std::size_t fuel) { return decode_upto(x, fuel).show(); }

// nat(k) | inf | add(e,e) | sub(e,k) | min(e,e) | max(e,e) | lift(name)(e)
class ExprParser {
public:
    explicit ExprParser(std::string s) : s_(std::move(s)) {}

    CoNat parse() {
        CoNat v = expr();
        skip();
        if (i_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    std::string s_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw UsageError("parse error at position " + std::to_string(i_) + ": " + what);
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    void expect(char c) {
        skip();
        if (i_ >= s_.size() || s_[i_] != c) fail(std::string("expected '") + c + "'");
        ++i_;
    }
    std::string word() {
        skip();
        std::size_t b = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '-')) ++i_;
        if (b == i_) fail("expected a name");
        return s_.substr(b, i_ - b);
    }
    nat number() {
        skip();
        std::size_t b = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (b == i_ || i_ - b > 18) fail("expected a natural number");
        return std::stoull(s_.substr(b, i_ - b));
    }
    CoNat expr() {
        const std::size_t at = i_;
        const std::string w = word();
        if (w == "inf") return infinity();
        if (w == "nat") {
            expect('(');
            nat k = number();
            expect(')');
            return from_nat(k);
        }
        if (w == "add" || w == "min" || w == "max") {
            expect('(');
            CoNat a = expr();
            expect(',');
            CoNat b = expr();
            expect(')');
            return w == "add" ? add(a, b) : w == "min" ? inf(a, b) : sup(a, b);
        }
        if (w == "sub") {
            expect('(');
            CoNat a = expr();
            expect(',');
            nat k = number();
            expect(')');
            return sub(a, k);
        }
        if (w == "lift") {
            expect('(');
            skip();
            std::size_t b = i_;
            int depth = 1;
            while (i_ < s_.size() && depth > 0) {
                depth += s_[i_] == '(' ? 1 : s_[i_] == ')' ? -1 : 0;
                ++i_;
            }
            if (depth) fail("unbalanced parentheses in lift");
            std::string name = s_.substr(b, i_ - 1 - b);
            NatFn f;
            try {
                f = increasing_fn(parse_family(name));
            } catch (const UnknownFamily& e) {
                i_ = b;
                fail(e.what());
            }
            expect('(');
            CoNat a = expr();
            expect(')');
            return lift_inflationary(f)(a);
        }
        i_ = at;
        fail("unknown operator '" + w + "'");
    }
};

std::vector<nat> parse_list(const std::string& s) {
    std::vector<nat> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 18)
            throw UsageError("bad list entry '" + item + "'");
        out.push_back(std::stoull(item));
    }
    return out;
}

std::string show_two(const TwoCoNat& p, std::size_t fuel) {
    return "(" + std::to_string(p.level) + "," + show(p.value, fuel) + ")";
}

std::string show_sum(const SumPoint& p, std::size_t fuel) {
    return p.right ? "inr(" + show(p.value, fuel) + ")" : "inl(" + std::to_string(p.left) + ")";
}

std::string show_prod(const ProdPoint& p, std::size_t fuel) {
    return "(" + show(p.first, fuel) + "," + show(p.second, fuel) + ")";
}

int cmd_family(const std::string& name, nat grid, std::size_t fuel) {
    const FamilySpec s = parse_family(name);
    std::cout << "point\tf(point)\tg(point)\tin_A\tin_B\n";
    auto yn = [](bool b) { return b ? "1" : "0"; };
    if (s.name == "coproduct-squiggle") {
        auto c = coproduct_pair();
        std::vector<SumPoint> pts;
        for (nat k = 0; k < grid; ++k) pts.push_back(SumPoint::inl(k));
        for (nat k = 0; k < grid; ++k) pts.push_back(SumPoint::inr(from_nat(k)));
        pts.push_back(SumPoint::inr(infinity()));
        for (const auto& p : pts)
            std::cout << show_sum(p, fuel) << '\t' << show_sum(c.f(p), fuel) << '\t' << show_sum(c.g(p), fuel)
                      << '\t' << yn(c.in_a(p, fuel)) << '\t' << yn(c.in_b(p, fuel)) << '\n';
        return 0;
    }
    if (s.name == "product-nat-conat" || s.name == "product-conat2") {
        auto c = product_counterexample(s.name == "product-conat2" ? ProductSpace::ConatSquared
                                                                   : ProductSpace::NatTimesConat);
        std::vector<ProdPoint> pts;
        for (nat a = 0; a < grid; ++a) {
            for (nat b = 0; b < grid; ++b) pts.push_back({from_nat(a), from_nat(b)});
            pts.push_back({from_nat(a), infinity()});
        }
        for (const auto& p : pts)
            std::cout << show_prod(p, fuel) << '\t' << show_prod(c.f(p), fuel) << '\t' << show_prod(c.g(p), fuel)
                      << '\t' << yn(c.in_a(p, fuel)) << '\t' << yn(c.in_b(p, fuel)) << '\n';
        return 0;
    }
    if (s.name == "broken-ladder" || s.name == "swap") {
        auto [f, g] = two_pair(s);
        for (bool l : {false, true}) {
            std::vector<TwoCoNat> pts;
            for (nat k = 0; k < grid; ++k) pts.push_back(two(l, k));
            pts.push_back(two_inf(l));
            for (const auto& p : pts)
                std::cout << show_two(p, fuel) << '\t' << show_two(f(p), fuel) << '\t' << show_two(g(p), fuel)
                          << "\t-\t-\n";
        }
        return 0;
    }
    if (s.name == "lifted-ladder" || s.name == "collapse") {
        auto [f, g] = conat_pair(s);
        for (nat k = 0; k <= grid; ++k) {
            CoNat x = k == grid ? infinity() : from_nat(k);
            std::cout << show(x, fuel) << '\t' << show(f(x), fuel) << '\t' << show(g(x), fuel) << "\t-\t-\n";
        }
        return 0;
    }
    auto [f, g] = nat_pair(s);
    for (nat k = 0; k < grid; ++k) std::cout << k << '\t' << f(k) << '\t' << g(k) << "\t-\t-\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Executable conatural numbers, Myhill bijections and counterexamples"};
    app.require_subcommand(1);
    app.fallthrough();
    std::optional<std::size_t> fuel_flag;
    app.add_option("--fuel", fuel_flag, "bits forced per value (env COMYHILL_FUEL, default 4096)")
        ->check(CLI::PositiveNumber);

    std::string expr;
    auto* eval = app.add_subcommand("eval", "print the bits of a conatural expression");
    eval->add_option("expr", expr, "nat(k) | inf | add(e,e) | sub(e,k) | min(e,e) | max(e,e) | lift(name)(e)")
        ->required();

    std::string fname, gname, family;
    nat rows = 16;
    auto* mnat = app.add_subcommand("myhill-nat", "back-and-forth bijection on N");
    mnat->add_option("--family", family, "pair family (even-odd-ladder, succ, ...)");
    mnat->add_option("--f", fname, "injection f");
    mnat->add_option("--g", gname, "injection g");
    mnat->add_option("-n,--rows", rows, "number of rows")->check(CLI::NonNegativeNumber);

    nat grid = 16;
    auto* mconat = app.add_subcommand("myhill-conat", "bijection on N-infinity");
    mconat->add_option("--family", family, "pair family (identity, succ, lifted-ladder, collapse(n), ...)");
    mconat->add_option("--f", fname, "injection f");
    mconat->add_option("--g", gname, "injection g");
    mconat->add_option("--grid", grid, "points 0..grid-1 plus inf")->check(CLI::PositiveNumber);

    std::string flips;
    int dflt = 1;
    auto* sel = app.add_subcommand("selection", "selection functional on a finitely supported predicate");
    sel->add_option("--default", dflt, "value of Q off the support, and at inf")->check(CLI::IsMember({0, 1}));
    sel->add_option("--flip", flips, "comma-separated naturals where Q differs from the default");

    std::string space = "baire", map = "id", input;
    auto* ext = app.add_subcommand("extend", "extension of an embedded map to Baire or Cantor space");
    ext->add_option("--space", space, "baire | cantor")->check(CLI::IsMember({"baire", "cantor"}));
    ext->add_option("--map", map, "baire: id | shift; cantor: id | swap");
    ext->add_option("--input", input, "comma-separated prefix, zeros after")->required();

    std::string candidate, out;
    std::size_t budget = 100000;
    auto* adv = app.add_subcommand("adversary", "run the staged adversary against a candidate solver");
    adv->add_option("--candidate", candidate, "assume-infinite | lookahead-<k> | constant | non-continuous")
        ->required();
    adv->add_option("--budget", budget, "forced-bit budget");
    adv->add_option("--out", out, "JSON report file (stdout if absent)");

    auto* fam = app.add_subcommand("family", "tabulate a named family on a grid");
    fam->add_option("name", family, "family name")->required();
    fam->add_option("--grid", grid, "grid size")->check(CLI::PositiveNumber);

    app.add_subcommand("families", "list the family registry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        const std::size_t fuel = fuel_flag ? *fuel_flag : default_fuel();

        if (*eval) {
            CoNat x = ExprParser(expr).parse();
            std::cout << "index\tbit\n";
            for (std::size_t k = 0; k < fuel; ++k) std::cout << k << '\t' << x.bit(k) << '\n';
            return 0;
        }

        auto pick = [&](auto&& single, auto&& pair) {
            if (!family.empty()) {
                if (!fname.empty() || !gname.empty()) throw UsageError("--family excludes --f/--g");
                return pair(parse_family(family));
            }
            if (fname.empty() || gname.empty()) throw UsageError("give --family or both --f and --g");
            return std::make_pair(single(parse_family(fname)), single(parse_family(gname)));
        };

        if (*mnat) {
            auto [f, g] = pick(nat_injection, nat_pair);
            auto B = build(f, g);
            std::cout << "x\th(x)\th_inv(x)\tm\n";
            for (nat x = 0; x < rows; ++x)
                std::cout << x << '\t' << B.h(x) << '\t' << B.h_inv(x) << '\t' << B.witness(x).m << '\n';
            return 0;
        }

        if (*mconat) {
            auto [f, g] = pick(conat_injection, conat_pair);
            auto B = bijection(f, g);
            auto sw = B.switch_rank(grid + 1);
            std::cout << "x\th(x)\tmode\twitness\n";
            for (nat k = 0; k <= grid; ++k) {
                const bool is_inf = k == grid;
                CoNat x = is_inf ? infinity() : from_nat(k);
                // mode at the rank that settles x
                const nat rank = is_inf ? grid + 1 : k + 1;
                const bool cont = !sw || *sw > rank;
                auto w = B.witness(x);
                // "-": x and the horizon both look infinite, no path to report
                std::string wit = "-";
                if (auto t = mp_search_upto(w.w, fuel)) wit = std::to_string(w.resolve(Finite{*t}).m);
                std::cout << show(x, fuel) << '\t' << show(B.h(x), fuel) << '\t'
                          << (cont ? "continuous" : "switched") << '\t' << wit << '\n';
            }
            return 0;
        }

        if (*sel) {
            std::set<nat> flip;
            if (!flips.empty())
                for (nat v : parse_list(flips)) flip.insert(v);
            const bool d = dflt == 1;
            DecPred q = [flip, d](const CoNat& x) {
                for (nat v : flip)
                    if (eq_nat(x, v)) return !d;
                return d;
            };
            CoNat e = epsilon(q);
            std::cout << "quantity\tvalue\n";
            std::cout << "epsilon\t" << show(e, fuel) << '\n';
            std::cout << "Q(epsilon)\t" << q(e) << '\n';
            std::cout << "exists\t" << exists_conat(q) << '\n';
            std::cout << "forall\t" << forall_conat(q) << '\n';
            return 0;
        }

        if (*ext) {
            std::cout << "index\tvalue\n";
            auto in = parse_list(input);
            if (space == "baire") {
                BaireFn f;
                if (map == "id") {
                    f = [](const NatStream& x) { return x; };
                } else if (map == "shift") {
                    // (n, p) -> (n + 1, p + 2) on the embedding
                    f = [](const NatStream& z) {
                        return NatStream([z](std::size_t k) -> unsigned long long {
                            if (k == 0) return z.at(0) + 1;
                            if (k <= 2) return 0;
                            return z.at(k - 2);
                        });
                    };
                } else {
                    throw UsageError("baire maps: id | shift");
                }
                auto fx = extend_baire(f, [](nat, nat n) { return n + 1; });
                NatStream x([in](std::size_t k) -> unsigned long long { return k < in.size() ? in[k] : 0; });
                auto y = fx(x);
                for (std::size_t k = 0; k < fuel; ++k) std::cout << k << '\t' << y.at(k) << '\n';
            } else {
                ConatPairFn f;
                if (map == "id")
                    f = [](const CoNat& p, const CoNat& q) { return std::make_pair(p, q); };
                else if (map == "swap")
                    f = [](const CoNat& p, const CoNat& q) { return std::make_pair(q, p); };
                else
                    throw UsageError("cantor maps: id | swap");
                for (nat b : in)
                    if (b > 1) throw UsageError("cantor input must be bits");
                auto fx = extend_cantor(f, [](nat n) { return n + 1; });
                BitStream x([in](std::size_t k) -> unsigned char { return k < in.size() ? in[k] : 0; });
                auto y = fx(x);
                for (std::size_t k = 0; k < fuel; ++k) std::cout << k << '\t' << int(y.at(k)) << '\n';
            }
            return 0;
        }

        if (*adv) {
            auto c = candidate_by_name(candidate);
            if (!c) throw UsageError("unknown candidate '" + candidate + "'");
            StageBudget b;
            b.forced_bits = budget;
            auto r = adversary(*c, b);
            const std::string js = report_json(r) + "\n";
            if (out.empty()) {
                std::cout << js;
            } else {
                std::ofstream os(out);
                if (!os) throw UsageError("cannot write " + out);
                os << js;
                std::cout << "candidate\toutcome\tstage\tcommitted_x\n"
                          << r.candidate << '\t' << outcome_name(r.outcome) << '\t' << r.stage << '\t'
                          << (r.committed_x ? std::to_string(*r.committed_x) : "-") << '\n';
            }
            switch (r.outcome) {
                case Outcome::Defeated: return 0;
                case Outcome::Survived: return 2;
                case Outcome::NonContinuous: return 3;
            }
        }

        if (*fam) return cmd_family(family, grid, fuel);

        std::cout << "name\tkind\tabout\n";
        for (const auto& f : family_registry()) std::cout << f.name << '\t' << f.kind << '\t' << f.about << '\n';
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "comyhill: " << e.what() << '\n';
        return 1;
    } catch (const UnknownFamily& e) {
        std::cerr << "comyhill: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "comyhill: " << e.what() << '\n';
        return 1;
    }
}
