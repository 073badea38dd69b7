#include "comyhill/families.hpp"

#include <cctype>

#include "comyhill/graphs.hpp"

namespace comyhill {

namespace {

void arity(const FamilySpec& s, std::size_t n) {
    if (s.params.size() != n)
        throw UnknownFamily(s.name + " takes " + std::to_string(n) + " argument(s), got " +
                            std::to_string(s.params.size()));
}

nat finite_param(const FamilySpec& s, std::size_t i) {
    if (!s.params[i]) throw UnknownFamily(s.name + ": argument must be finite");
    return *s.params[i];
}

}  // namespace

std::string FamilySpec::show() const {
    if (params.empty()) return name;
    std::string out = name + "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out += ",";
        out += params[i] ? std::to_string(*params[i]) : "inf";
    }
    return out + ")";
}

FamilySpec parse_family(const std::string& text) {
    FamilySpec s;
    auto open = text.find('(');
    s.name = text.substr(0, open);
    if (s.name.empty()) throw UnknownFamily("empty family name");
    for (char c : s.name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-')
            throw UnknownFamily("bad family name '" + text + "'");
    if (open == std::string::npos) return s;
    if (text.back() != ')') throw UnknownFamily("missing ')' in '" + text + "'");
    std::string args = text.substr(open + 1, text.size() - open - 2);
    std::size_t pos = 0;
    while (pos <= args.size()) {
        auto comma = args.find(',', pos);
        std::string a = args.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (a == "inf") {
            s.params.push_back(std::nullopt);
        } else {
            if (a.empty() || a.size() > 18) throw UnknownFamily("bad argument '" + a + "' in '" + text + "'");
            for (char c : a)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw UnknownFamily("bad argument '" + a + "' in '" + text + "'");
            s.params.push_back(std::stoull(a));
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return s;
}

NatFn increasing_fn(const FamilySpec& s) {
    if (s.name == "shift") {
        arity(s, 1);
        nat k = finite_param(s, 0);
        return [k](nat n) { return n + k; };
    }
    arity(s, 0);
    if (s.name == "id" || s.name == "identity") return [](nat n) { return n; };
    if (s.name == "succ") return [](nat n) { return n + 1; };
    if (s.name == "double") return [](nat n) { return 2 * n; };
    if (s.name == "square") return [](nat n) { return n * n; };
    throw UnknownFamily("unknown map '" + s.show() + "'");
}

NatInjection nat_injection(const FamilySpec& s) {
    if (s.name == "ladder-f") return arity(s, 0), ladder_f_injection();
    if (s.name == "ladder-g") return arity(s, 0), ladder_g_injection();
    return make_injection(increasing_fn(s), s.show());
}

std::pair<NatInjection, NatInjection> nat_pair(const FamilySpec& s) {
    if (s.name == "even-odd-ladder") {
        arity(s, 0);
        return {ladder_f_injection(), ladder_g_injection()};
    }
    auto f = nat_injection(s);
    return {f, f};
}

ConatInjection conat_injection(const FamilySpec& s) {
    if (s.name == "collapse") {
        arity(s, 1);
        return collapse_at(finite_param(s, 0));
    }
    if (s.name == "ladder-f") return arity(s, 0), lifted_ladders().first;
    if (s.name == "ladder-g") return arity(s, 0), lifted_ladders().second;
    return make_conat_injection(lift_inflationary(increasing_fn(s)), s.show());
}

std::pair<ConatInjection, ConatInjection> conat_pair(const FamilySpec& s) {
    if (s.name == "lifted-ladder") return arity(s, 0), lifted_ladders();
    if (s.name == "collapse") {
        arity(s, 1);
        nat n = finite_param(s, 0);
        return {collapse_at(n), collapse_at(n + 1)};
    }
    auto f = conat_injection(s);
    return {f, f};
}

std::pair<TwoFn, TwoFn> two_pair(const FamilySpec& s) {
    if (s.name == "broken-ladder") {
        arity(s, 1);
        return broken_ladder(s.params[0] ? from_nat(*s.params[0]) : infinity());
    }
    if (s.name == "swap") {
        arity(s, 0);
        TwoFn f = [](const TwoCoNat& p) { return TwoCoNat{!p.level, p.value}; };
        return {f, f};
    }
    auto lifted = lift_inflationary(increasing_fn(s));
    TwoFn f = [lifted](const TwoCoNat& p) { return TwoCoNat{p.level, lifted(p.value)}; };
    return {f, f};
}

const std::vector<FamilyInfo>& family_registry() {
    static const std::vector<FamilyInfo> r = {
        {"identity", "nat conat two", "n -> n"},
        {"succ", "nat conat two", "n -> n+1"},
        {"double", "nat conat two", "n -> 2n"},
        {"square", "nat conat two", "n -> n^2"},
        {"shift(k)", "nat conat two", "n -> n+k"},
        {"ladder-f", "nat conat", "advances even rungs"},
        {"ladder-g", "nat conat", "advances odd rungs"},
        {"even-odd-ladder", "nat-pair", "(ladder-f, ladder-g)"},
        {"lifted-ladder", "conat-pair", "ladders lifted to N-inf"},
        {"collapse(n)", "conat conat-pair", "inf -> n, k -> k+n+1; pair (collapse n, collapse n+1)"},
        {"swap", "two", "(i, x) -> (1-i, x)"},
        {"broken-ladder(x)", "two-pair", "(f_x, g_x) on 2 x N-inf, x natural or inf"},
        {"coproduct-squiggle", "counterexample", "N + N-inf, ladder on the right summand"},
        {"product-nat-conat", "counterexample", "N x N-inf"},
        {"product-conat2", "counterexample", "N-inf x N-inf"},
    };
    return r;
}

}  // namespace comyhill
