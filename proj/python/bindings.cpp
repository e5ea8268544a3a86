#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "xtop/dot.hpp"
#include "xtop/errors.hpp"
#include "xtop/forest_spec.hpp"
#include "xtop/json_io.hpp"
#include "xtop/semiring.hpp"
#include "xtop/separation.hpp"
#include "xtop/verify.hpp"

namespace py = pybind11;
using namespace xtop;

namespace {

// Reports already have a JSON form; reuse it instead of hand-building dicts.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::object& o) {
    return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

ElementSet labels_to_set(const FiniteLattice& l, const std::vector<std::string>& names) {
    ElementSet s;
    for (const auto& n : names) s.insert(l.index_of(n));
    return s;
}

std::vector<std::string> set_to_labels(const FiniteLattice& l, const ElementSet& s) {
    std::vector<std::string> out;
    s.for_each([&](Index i) { out.push_back(l.label(i)); });
    return out;
}

std::vector<std::vector<std::string>> family_labels(const FiniteLattice& l, const std::vector<ElementSet>& f) {
    std::vector<std::vector<std::string>> out;
    for (const auto& s : f) out.push_back(set_to_labels(l, s));
    return out;
}

SpecSelector selector(const std::string& s) {
    if (s == "all") return SpecSelector::All;
    if (s == "max") return SpecSelector::Max;
    if (s == "min") return SpecSelector::Min;
    if (s == "drop-zero") return SpecSelector::DropZero;
    throw ParseError("unknown subspace '" + s + "'");
}

py::dict suite_dict(const SuiteResult& r) {
    py::dict d;
    d["suite"] = r.suite;
    d["instances"] = r.instances;
    d["failures"] = r.failures;
    d["passed"] = r.passed();
    return d;
}

}  // namespace

PYBIND11_MODULE(_xtop, m) {
    m.doc() = "Zariski-like topologies on finite lattices and spectra of finite semirings";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", base);
    py::register_exception<NotXTopError>(m, "NotXTopError", base);
    py::register_exception<AxiomError>(m, "AxiomError", base);
    py::register_exception<NotALatticeError>(m, "NotALatticeError", base);
    py::register_exception<CycleError>(m, "CycleError", base);
    py::register_exception<RangeError>(m, "RangeError", base);
    py::register_exception<TooLargeError>(m, "TooLargeError", base);

    py::class_<FinitePoset>(m, "Poset")
        .def(py::init([](std::vector<std::string> labels, std::vector<std::pair<std::string, std::string>> leq) {
                 return FinitePoset::from_relation(std::move(labels), leq);
             }),
             py::arg("labels"), py::arg("leq") = std::vector<std::pair<std::string, std::string>>{})
        .def_property_readonly("labels", &FinitePoset::labels)
        .def("__len__", &FinitePoset::size)
        .def("leq", [](const FinitePoset& p, const std::string& a, const std::string& b) {
            return p.leq(p.index_of(a), p.index_of(b));
        })
        .def("covers", [](const FinitePoset& p) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& [a, b] : p.covers()) out.emplace_back(p.label(a), p.label(b));
            return out;
        })
        .def("shape", [](const FinitePoset& p) { return describe_shape(p); })
        .def("krull_dim", [](const FinitePoset& p) { return krull_dim(p); })
        .def("dot", [](const FinitePoset& p) { return hasse_dot(p); })
        .def("to_dict", [](const FinitePoset& p) { return to_py(to_json(p)); });

    m.def("chain", &chain, py::arg("k"));
    m.def("tree", &tree, py::arg("n"));
    m.def("dual_tree", &dual_tree, py::arg("m"));
    m.def("antichain", &antichain, py::arg("n"));
    m.def("forest", [](const std::string& spec) { return forest(parse_forest_spec(spec)); }, py::arg("spec"));
    m.def("is_isomorphic", &is_isomorphic);

    py::class_<XTopSpace>(m, "Space")
        .def_static("from_poset", &XTopSpace::from_poset, py::arg("poset"))
        .def_static("from_dict", [](const py::object& o) { return space_from_json(from_py(o)); })
        .def_property_readonly("points", [](const XTopSpace& s) { return set_to_labels(s.lattice(), s.points()); })
        .def("__len__", &XTopSpace::point_count)
        .def("closed_sets", [](const XTopSpace& s) { return family_labels(s.lattice(), s.closed_family()); })
        .def("open_sets", [](const XTopSpace& s) { return family_labels(s.lattice(), s.open_family()); })
        .def("closure", [](const XTopSpace& s, const std::vector<std::string>& y) {
            return set_to_labels(s.lattice(), s.closure(labels_to_set(s.lattice(), y)));
        })
        .def("interior", [](const XTopSpace& s, const std::vector<std::string>& y) {
            return set_to_labels(s.lattice(), s.interior(labels_to_set(s.lattice(), y)));
        })
        .def("kernel", [](const XTopSpace& s, const std::string& x) {
            return set_to_labels(s.lattice(), s.kernel(s.point(x)));
        })
        .def("subspace", [](const XTopSpace& s, const std::vector<std::string>& y) {
            return s.subspace(labels_to_set(s.lattice(), y));
        })
        .def("specialization_poset", &XTopSpace::specialization_poset)
        .def("report", [](const XTopSpace& s) { return to_py(to_json(s, separation_report(s))); })
        .def("points_report", [](const XTopSpace& s) { return to_py(to_json(s, classify_points(s))); })
        .def("cross_check", [](const XTopSpace& s) { return to_py(to_json(cross_check(s))); })
        .def("to_dict", [](const XTopSpace& s) { return to_py(to_json(s)); })
        .def("dot", [](const XTopSpace& s, bool closed_sets) { return space_dot(s, closed_sets); },
             py::arg("closed_sets") = false);

    m.def("is_xtop", [](const py::object& lattice, const std::vector<std::string>& x) {
        const FiniteLattice l = lattice_from_json(from_py(lattice));
        return is_xtop_by_unions(l, labels_to_set(l, x));
    });

    py::class_<FiniteSemiring>(m, "Semiring")
        .def(py::init([](std::vector<std::string> labels, const std::vector<std::vector<std::string>>& add,
                         const std::vector<std::vector<std::string>>& mul, const std::string& zero,
                         const std::string& one) {
                 Json j;
                 j["labels"] = labels;
                 j["add"] = add;
                 j["mul"] = mul;
                 j["zero"] = zero;
                 j["one"] = one;
                 return semiring_from_json(j);
             }),
             py::arg("labels"), py::arg("add"), py::arg("mul"), py::arg("zero"), py::arg("one"))
        .def_property_readonly("labels", &FiniteSemiring::labels)
        .def("__len__", &FiniteSemiring::size)
        .def("add", [](const FiniteSemiring& r, const std::string& a, const std::string& b) {
            return r.label(r.add(r.index_of(a), r.index_of(b)));
        })
        .def("mul", [](const FiniteSemiring& r, const std::string& a, const std::string& b) {
            return r.label(r.mul(r.index_of(a), r.index_of(b)));
        })
        .def("spectrum", [](const FiniteSemiring& r) { return to_py(to_json(r, spectrum(r))); })
        .def("spec_space", [](const FiniteSemiring& r, const std::string& which) { return spec_space(r, selector(which)); },
             py::arg("subspace") = "all")
        .def("to_dict", [](const FiniteSemiring& r) { return to_py(to_json(r)); });

    m.def("bni", &bni, py::arg("n"), py::arg("i"));
    m.def("zn", &zn, py::arg("n"));
    m.def("s3", &s3);
    m.def("boolean_semiring", &boolean_semiring);

    m.def("verify_bni", [](std::size_t n, std::size_t i) {
        const auto v = verify_bni(n, i);
        const auto r = bni(n, i);
        auto fam = [&](const std::vector<ElementSet>& f) {
            std::vector<std::vector<std::string>> out;
            for (const auto& s : f) {
                std::vector<std::string> row;
                s.for_each([&](Index k) { row.push_back(r.label(k)); });
                out.push_back(row);
            }
            return out;
        };
        py::dict d;
        d["n"] = v.n;
        d["i"] = v.i;
        d["case"] = v.theorem_case;
        d["predicted_spec"] = fam(v.predicted_spec);
        d["computed_spec"] = fam(v.computed_spec);
        d["predicted_kdim"] = v.predicted_kdim;
        d["computed_kdim"] = v.computed_kdim;
        d["predicted_shape"] = v.predicted_shape;
        d["computed_shape"] = v.computed_shape;
        d["match"] = v.match;
        return d;
    }, py::arg("n"), py::arg("i"));

    m.def("run_suite", [](const std::string& name, std::optional<std::size_t> max_size, std::optional<std::size_t> max_n) {
        py::list out;
        for (const auto& r : run_suite(name, {max_size, max_n})) out.append(suite_dict(r));
        return out;
    }, py::arg("name"), py::arg("max_size") = py::none(), py::arg("max_n") = py::none());
}
