#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "comyhill/adversary.hpp"
#include "comyhill/families.hpp"
#include "comyhill/graphs.hpp"

namespace py = pybind11;
using namespace comyhill;

namespace {

std::optional<nat> value_of(const CoNat& x, std::size_t fuel) { return mp_search_upto(x, fuel); }

std::string repr(const CoNat& x) {
    auto v = mp_search_upto(x, 64);
    return v ? "CoNat(" + std::to_string(*v) + ")" : "CoNat(>=64 or inf)";
}

CoNat to_conat(const py::object& o) {
    if (py::isinstance<CoNat>(o)) return o.cast<CoNat>();
    if (py::isinstance<py::float_>(o) && std::isinf(o.cast<double>())) return infinity();
    if (py::isinstance<py::str>(o) && o.cast<std::string>() == "inf") return infinity();
    return from_nat(o.cast<nat>());
}

}  // namespace

PYBIND11_MODULE(_comyhill, m) {
    m.doc() = "Lazy conatural numbers, Myhill bijections and the 2 x N-inf adversary";

    py::register_exception<Error>(m, "ComyhillError", PyExc_RuntimeError);

    py::class_<CoNat>(m, "CoNat")
        .def(py::init([](const py::object& o) { return to_conat(o); }), py::arg("value"))
        .def("bit", [](const CoNat& x, std::size_t k) { return x.bit(k); })
        .def("bits", [](const CoNat& x, std::size_t n) {
            std::vector<int> b;
            for (std::size_t k = 0; k < n; ++k) b.push_back(x.bit(k));
            return b;
        })
        .def("value", &value_of, py::arg("fuel") = 4096,
             "position of the 1 within fuel, None if the prefix is all zero")
        .def("at_least", [](const CoNat& x, nat n) { return is_at_least(x, n); })
        .def("__add__", [](const CoNat& a, const py::object& b) { return add(a, to_conat(b)); })
        .def("__repr__", &repr);

    m.def("nat", &from_nat);
    m.def("inf", &infinity);
    m.def("add", [](const py::object& a, const py::object& b) { return add(to_conat(a), to_conat(b)); });
    m.def("min", [](const py::object& a, const py::object& b) { return inf(to_conat(a), to_conat(b)); });
    m.def("max", [](const py::object& a, const py::object& b) { return sup(to_conat(a), to_conat(b)); });
    m.def("sub", [](const py::object& a, nat k) { return sub(to_conat(a), k); });
    m.def("lift", [](const std::string& name, const py::object& x) {
        return lift_inflationary(increasing_fn(parse_family(name)))(to_conat(x));
    }, "lift(name, x): id | succ | double | square | shift(k)");

    m.def("epsilon", [](std::function<bool(const CoNat&)> q, std::size_t watchdog) {
        return epsilon(DecPred(std::move(q)), watchdog);
    }, py::arg("q"), py::arg("watchdog") = kDefaultWatchdog);
    m.def("exists", [](std::function<bool(const CoNat&)> q, std::size_t watchdog) {
        return exists_conat(DecPred(std::move(q)), watchdog);
    }, py::arg("q"), py::arg("watchdog") = kDefaultWatchdog);
    m.def("forall", [](std::function<bool(const CoNat&)> q, std::size_t watchdog) {
        return forall_conat(DecPred(std::move(q)), watchdog);
    }, py::arg("q"), py::arg("watchdog") = kDefaultWatchdog);

    py::class_<MyhillIso>(m, "MyhillNat")
        .def("h", &MyhillIso::h)
        .def("h_inv", &MyhillIso::h_inv)
        .def("witness", [](const MyhillIso& M, nat x) { return M.witness(x).m; });
    m.def("myhill_nat", [](const std::string& family) {
        auto [f, g] = nat_pair(parse_family(family));
        return build(f, g);
    }, py::arg("family"));
    m.def("myhill_nat_fns", [](std::function<nat(nat)> f, std::function<nat(nat)> g) {
        return build(make_injection(std::move(f), "f"), make_injection(std::move(g), "g"));
    }, py::arg("f"), py::arg("g"), "from two injective Python callables");

    py::class_<ConatMyhill>(m, "MyhillConat")
        .def("h", [](const ConatMyhill& B, const py::object& x) { return B.h(to_conat(x)); })
        .def("h_inv", [](const ConatMyhill& B, const py::object& x) { return B.h_inv(to_conat(x)); })
        .def("continuous", &ConatMyhill::continuous)
        .def("switch_rank", &ConatMyhill::switch_rank)
        .def("witness", [](const ConatMyhill& B, const py::object& x, std::size_t fuel) -> std::optional<std::int64_t> {
            auto w = B.witness(to_conat(x));
            auto t = mp_search_upto(w.w, fuel);
            if (!t) return std::nullopt;
            return w.resolve(Finite{*t}).m;
        }, py::arg("x"), py::arg("fuel") = 4096, "exponent m, or None when the case is not decided within fuel");
    m.def("myhill_conat", [](const std::string& family) {
        auto [f, g] = conat_pair(parse_family(family));
        return bijection(f, g);
    }, py::arg("family"));

    py::class_<TwoBijection>(m, "TwoBijection")
        .def("h", [](const TwoBijection& B, bool level, const py::object& x) {
            auto r = B.h({level, to_conat(x)});
            return py::make_tuple(r.level, r.value);
        })
        .def("h_inv", [](const TwoBijection& B, bool level, const py::object& x) {
            auto r = B.h_inv({level, to_conat(x)});
            return py::make_tuple(r.level, r.value);
        })
        .def("witness", [](const TwoBijection& B, bool level, const py::object& x) {
            return B.witness({level, to_conat(x)});
        })
        .def_property_readonly("tangled", &TwoBijection::tangled)
        .def_property_readonly("threshold", &TwoBijection::threshold);
    m.def("two_bijection", [](const std::string& family) {
        auto [f, g] = two_pair(parse_family(family));
        return build_bijection(f, g);
    }, py::arg("family"), "broken-ladder(x) | identity | succ | swap | shift(k)");

    m.def("adversary", [](const std::string& candidate, std::size_t budget) {
        auto c = candidate_by_name(candidate);
        if (!c) throw py::value_error("unknown candidate '" + candidate + "'");
        StageBudget b;
        b.forced_bits = budget;
        auto json = py::module_::import("json");
        return json.attr("loads")(report_json(adversary(*c, b)));
    }, py::arg("candidate"), py::arg("budget") = 100000);

    m.def("families", [] {
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        for (const auto& f : family_registry()) out.emplace_back(f.name, f.kind, f.about);
        return out;
    });
}
