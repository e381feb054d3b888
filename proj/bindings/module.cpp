#include "pellfrieze/analysis.hpp"
#include "pellfrieze/frieze.hpp"
#include "pellfrieze/geometry.hpp"
#include "pellfrieze/json_io.hpp"
#include "pellfrieze/quadint.hpp"
#include "pellfrieze/sequences.hpp"
#include "pellfrieze/svg.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace pellfrieze;
namespace an = pellfrieze::analysis;
namespace seq = pellfrieze::sequences;

namespace pybind11::detail {

// cpp_int <-> Python int, through the decimal representation.
template <>
struct type_caster<BigInt> {
    PYBIND11_TYPE_CASTER(BigInt, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = BigInt(py::str(src).cast<std::string>());
        return true;
    }

    static handle cast(const BigInt& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

using ArcPair = std::pair<int, int>;

std::vector<ArcPair> arcs_out(const std::vector<Arc>& arcs) {
    std::vector<ArcPair> out;
    out.reserve(arcs.size());
    for (const Arc& a : arcs) out.emplace_back(a.u, a.v);
    return out;
}

std::vector<ArcPair> arcs_out(const std::set<Arc>& arcs) {
    return arcs_out(std::vector<Arc>(arcs.begin(), arcs.end()));
}

std::vector<Arc> arcs_in(const std::vector<ArcPair>& pairs) {
    std::vector<Arc> out;
    out.reserve(pairs.size());
    for (const auto& [u, v] : pairs) out.emplace_back(u, v);
    return out;
}

py::dict scan_report_dict(const an::ScanReport& r) {
    py::dict filters;
    filters["type_max"] = r.filters.type_max ? py::cast(*r.filters.type_max) : py::none();
    filters["separated_only"] = r.filters.separated_only;
    filters["four_angulations_only"] = r.filters.four_angulations_only;

    py::list counterexamples;
    for (const Dissection& d : r.counterexamples) counterexamples.append(d);
    py::list hard;
    for (const Dissection& d : r.hard_violations) hard.append(d);

    py::dict out;
    out["n"] = r.n;
    out["filters"] = filters;
    out["from_index"] = r.from_index;
    out["family_total"] = r.family_total;
    out["examined"] = r.examined;
    out["unitary"] = r.unitary;
    out["tower_decomposable"] = r.tower_decomposable;
    out["both"] = r.both;
    out["neither"] = r.neither;
    out["counterexamples"] = counterexamples;
    out["hard_violations"] = hard;
    return out;
}

}  // namespace

PYBIND11_MODULE(_pellfrieze, m) {
    m.doc() = "Exact friezes over Z[sqrt(2)] from polygon dissections";

    py::register_exception<NotAUnit>(m, "NotAUnit", PyExc_ValueError);
    py::register_exception<NotPositive>(m, "NotPositive", PyExc_ValueError);
    py::register_exception<ParseError>(m, "FriezeParseError", PyExc_ValueError);
    py::register_exception<InvalidDissection>(m, "InvalidDissection", PyExc_ValueError);
    py::register_exception<NotTriQuad>(m, "NotTriQuad", PyExc_ValueError);
    py::register_exception<UnsupportedP>(m, "UnsupportedP", PyExc_ValueError);
    py::register_exception<DiamondViolation>(m, "DiamondViolation", PyExc_ValueError);

    py::class_<QuadInt>(m, "QuadInt")
        .def(py::init<BigInt, BigInt>(), py::arg("a") = BigInt(0), py::arg("b") = BigInt(0))
        .def_property_readonly("a", &QuadInt::a)
        .def_property_readonly("b", &QuadInt::b)
        .def_static("sqrt2", &QuadInt::sqrt2)
        .def_static("parse", [](const std::string& s) { return QuadInt::parse(s); })
        .def("sign", &QuadInt::sign)
        .def("compare", &QuadInt::compare)
        .def("__add__", [](const QuadInt& x, const QuadInt& y) { return x + y; })
        .def("__sub__", [](const QuadInt& x, const QuadInt& y) { return x - y; })
        .def("__mul__", [](const QuadInt& x, const QuadInt& y) { return x * y; })
        .def("__neg__", [](const QuadInt& x) { return -x; })
        .def("__eq__", [](const QuadInt& x, const QuadInt& y) { return x == y; })
        .def("__lt__", [](const QuadInt& x, const QuadInt& y) { return x < y; })
        .def("__le__", [](const QuadInt& x, const QuadInt& y) { return x <= y; })
        .def("__gt__", [](const QuadInt& x, const QuadInt& y) { return x > y; })
        .def("__ge__", [](const QuadInt& x, const QuadInt& y) { return x >= y; })
        .def("__hash__", [](const QuadInt& x) { return py::hash(py::str(x.str())); })
        .def("__str__", &QuadInt::str)
        .def("__repr__", [](const QuadInt& x) { return "QuadInt(" + x.str() + ")"; });

    m.def("norm", &norm);
    m.def("is_unit", &is_unit);
    m.def("unit_power", &unit_power);
    m.def("unit_log", &unit_log);
    m.def("chebyshev_u", &chebyshev_u);

    py::class_<Dissection>(m, "Dissection")
        .def(py::init([](int n, const std::vector<ArcPair>& arcs) {
                 return Dissection(n, arcs_in(arcs));
             }),
             py::arg("n"), py::arg("arcs") = std::vector<ArcPair>{})
        .def_property_readonly("n", &Dissection::n)
        .def_property_readonly("arcs", [](const Dissection& d) { return arcs_out(d.arcs()); })
        .def_property_readonly("faces", [](const Dissection& d) { return d.faces(); })
        .def("__eq__", [](const Dissection& a, const Dissection& b) { return a == b; })
        .def("__repr__", [](const Dissection& d) {
            return "Dissection(" + dissection_to_json(d).dump() + ")";
        });

    m.def("is_boundary", [](ArcPair a, int n) { return is_boundary(Arc(a.first, a.second), n); });
    m.def("crosses", [](ArcPair x, ArcPair y, int n) {
        return crosses(Arc(x.first, x.second), Arc(y.first, y.second), n);
    });
    m.def("is_tri_quad", &is_tri_quad);
    m.def("is_triangulation", &is_triangulation);
    m.def("vertex_face_degree", &vertex_face_degree);
    m.def("type_of", &type_of);
    m.def("is_separated", &is_separated);
    m.def(
        "all_dissections",
        [](int n, const std::vector<int>& sizes) { return all_dissections(n, sizes); },
        py::arg("n"), py::arg("allowed_face_sizes") = std::vector<int>{3, 4});
    m.def("all_triangulations", &all_triangulations);

    py::class_<FriezeTable>(m, "FriezeTable")
        .def(py::init<int>())
        .def_property_readonly("n", &FriezeTable::n)
        .def("__getitem__",
             [](const FriezeTable& t, ArcPair ij) { return t.at(ij.first, ij.second); })
        .def("set", &FriezeTable::set)
        .def("verify",
             [](const FriezeTable& t) -> py::object {
                 const auto violation = verify_frieze(t);
                 if (!violation) return py::none();
                 py::dict out;
                 const char* names[] = {"diagonal", "boundary", "zero", "ptolemy"};
                 out["kind"] = names[static_cast<int>(violation->kind)];
                 out["arcs"] = py::make_tuple(py::make_tuple(violation->i, violation->j),
                                              py::make_tuple(violation->k, violation->l));
                 return out;
             })
        .def("classify",
             [](const FriezeTable& t) {
                 const FriezeClasses c = classify(t);
                 py::dict out;
                 out["ge1"] = c.ge1;
                 out["nonneg_coeffs"] = c.nonneg_coeffs;
                 return out;
             })
        .def("to_pattern", &to_frieze_pattern);

    m.def("euclidean_frieze", &euclidean_frieze);
    m.def("frieze_from_dissection", &frieze_from_dissection);
    m.def("from_frieze_pattern", &from_frieze_pattern);

    py::class_<an::Tower>(m, "Tower")
        .def_readonly("roof", &an::Tower::roof)
        .def_readonly("face_indices", &an::Tower::face_indices)
        .def_readonly("vertices", &an::Tower::vertices)
        .def("__repr__", [](const an::Tower& t) {
            return "Tower(roof=" + std::to_string(t.roof) + ", faces=" +
                   std::to_string(t.face_indices.size()) + ")";
        });

    py::class_<an::TowerDecomposition>(m, "TowerDecomposition")
        .def_readonly("towers", &an::TowerDecomposition::towers)
        .def_property_readonly(
            "glue_arcs", [](const an::TowerDecomposition& d) { return arcs_out(d.glue_arcs); });

    m.def("unit_arcs", [](const FriezeTable& t) { return arcs_out(an::unit_arcs(t)); });
    m.def("find_unitary_triangulation", &an::find_unitary_triangulation);
    m.def("enumerate_unitary_triangulations", &an::enumerate_unitary_triangulations);
    m.def("triangulation_algorithm", &an::triangulation_algorithm);
    m.def("tower_decomposition", &an::tower_decomposition);
    m.def("enumerate_tower_decompositions", &an::enumerate_tower_decompositions);
    m.def("unitary_from_towers", &an::unitary_from_towers);
    m.def("tower_arc_weight", &an::tower_arc_weight);
    m.def("pell_arc_weight", &an::pell_arc_weight);
    m.def("make_stack", &an::make_stack);
    m.def("make_tower", &an::make_tower);
    m.def("make_zigzag", &an::make_zigzag);
    m.def("make_pell_figure", &an::make_pell_figure);
    m.def("build_pell_witness", [](int i, int m) {
        const auto [d, arc] = an::build_pell_witness(i, m);
        return py::make_tuple(d, py::make_tuple(arc.u, arc.v));
    });
    m.def("tower_arcs", [](const Dissection& d) { return arcs_out(an::tower_arcs(d)); });
    m.def("pell_arcs", [](const Dissection& d) { return arcs_out(an::pell_arcs(d)); });
    m.def("lemma56_check", [](const Dissection& d, const FriezeTable& t) {
        py::list out;
        for (const auto& v : an::lemma56_check(d, t)) {
            out.append(py::make_tuple(v.x, v.y, v.z));
        }
        return out;
    });

    m.def(
        "conjecture_scan",
        [](int n, std::optional<int> type_max, bool separated_only, bool four_angulations_only,
           int workers, long from_index) {
            an::ScanFilters filters;
            filters.type_max = type_max;
            filters.separated_only = separated_only;
            filters.four_angulations_only = four_angulations_only;
            return scan_report_dict(an::conjecture_scan(n, filters, workers, from_index));
        },
        py::arg("n"), py::arg("type_max") = py::none(), py::arg("separated_only") = false,
        py::arg("four_angulations_only") = false, py::arg("workers") = 1,
        py::arg("from_index") = 0);

    m.def(
        "lemma56_scan",
        [](int n, int workers) {
            const an::Lemma56Report r = an::lemma56_scan(n, workers);
            py::list violations;
            for (const auto& [d, v] : r.violations) {
                violations.append(py::make_tuple(d, py::make_tuple(v.x, v.y, v.z)));
            }
            py::dict out;
            out["n"] = r.n;
            out["dissections"] = r.dissections;
            out["checked"] = r.checked;
            out["violations"] = violations;
            return out;
        },
        py::arg("n"), py::arg("workers") = 1);

    m.def("s", &seq::s);
    m.def("d", &seq::d);
    m.def("ell", &seq::ell);
    m.def("convergent", [](int n) {
        const auto c = seq::convergent(n);
        return py::make_tuple(c.a, c.b);
    });
    m.def("pell", &seq::pell);

    m.def("dissection_to_json", [](const Dissection& d) { return dissection_to_json(d).dump(); });
    m.def("dissection_from_json", [](const std::string& text) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(e.what());
        }
        return dissection_from_json(j);
    });
    m.def("frieze_to_json", [](const FriezeTable& t) { return frieze_to_json(t).dump(); });
    m.def(
        "render_svg",
        [](const Dissection& d, const FriezeTable* overlay) { return render_svg(d, overlay); },
        py::arg("dissection"), py::arg("overlay_units") = nullptr);
}
