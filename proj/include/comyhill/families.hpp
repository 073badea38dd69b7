#pragma once

// Named injections and injection pairs, shared by the CLI and the Python
// module. Names take optional arguments: "collapse(3)", "broken-ladder(inf)".

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "comyhill/errors.hpp"
#include "comyhill/myhill_conat.hpp"
#include "comyhill/myhill_nat.hpp"
#include "comyhill/two_ninfty.hpp"

namespace comyhill {

struct UnknownFamily : Error {
    using Error::Error;
};

struct FamilySpec {
    std::string name;
    std::vector<std::optional<nat>> params;  // nullopt is "inf"
    std::string show() const;
};
// Throws UnknownFamily on malformed text; arity is checked at lookup.
FamilySpec parse_family(const std::string& text);

// Increasing maps on N, usable both directly and lifted: id, succ, double,
// square, shift(k).
NatFn increasing_fn(const FamilySpec& s);

NatInjection nat_injection(const FamilySpec& s);  // the above + ladder-f, ladder-g
std::pair<NatInjection, NatInjection> nat_pair(const FamilySpec& s);

ConatInjection conat_injection(const FamilySpec& s);  // lifted maps + collapse(n)
// identity, succ, double, shift(k), lifted-ladder, collapse(n) = (collapse n, collapse n+1)
std::pair<ConatInjection, ConatInjection> conat_pair(const FamilySpec& s);

// broken-ladder(x), identity, succ, swap, shift(k)
std::pair<TwoFn, TwoFn> two_pair(const FamilySpec& s);

// name, kind, description
struct FamilyInfo {
    std::string name, kind, about;
};
const std::vector<FamilyInfo>& family_registry();

}  // namespace comyhill
