#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <szlenk/cb_topology.hpp>
#include <szlenk/classification.hpp>
#include <szlenk/indices.hpp>
#include <szlenk/notation.hpp>
#include <szlenk/space_algebra.hpp>

namespace py = pybind11;
using namespace szlenk;

namespace {

Ordinal to_ordinal(const py::object& v) {
    if (py::isinstance<Ordinal>(v)) {
        return v.cast<Ordinal>();
    }
    if (py::isinstance<py::bool_>(v)) {
        throw py::type_error("expected an Ordinal, str or non-negative int");
    }
    if (py::isinstance<py::int_>(v)) {
        const auto n = v.cast<long long>();
        if (n < 0) {
            throw py::value_error("ordinals are non-negative");
        }
        return Ordinal::finite(static_cast<Coefficient>(n));
    }
    if (py::isinstance<py::str>(v)) {
        return parse_ordinal(v.cast<std::string>());
    }
    throw py::type_error("expected an Ordinal, str or non-negative int");
}

SpaceExpr to_space(const py::object& v) {
    if (py::isinstance<SpaceExpr>(v)) {
        return v.cast<SpaceExpr>();
    }
    return parse_space(v.cast<std::string>());
}

py::list steps_to_list(const RewriteTrace& t) {
    py::list out;
    for (const RewriteStep& s : t.steps) {
        py::dict d;
        d["rule"] = std::string(rule_name(s.rule));
        d["position"] = s.position;
        d["before"] = format_space(s.before);
        d["after"] = format_space(s.after);
        out.append(d);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_szlenk, m) {
    m.doc() = "Cantor normal form ordinals and the Szlenk indices of C([0, alpha])";

    auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<SyntaxError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<OverflowError>(m, "OrdinalOverflowError", PyExc_OverflowError);
    (void)domain;

    py::class_<Ordinal>(m, "Ordinal")
        .def(py::init([](const py::object& v) { return to_ordinal(v); }), py::arg("value") = 0)
        .def_static("omega", &Ordinal::omega)
        .def_static("epsilon_atom", &Ordinal::epsilon_atom, py::arg("k"))
        .def_property_readonly("is_finite", &Ordinal::is_finite)
        .def_property_readonly("is_atom", &Ordinal::is_atom)
        .def("__int__",
             [](const Ordinal& a) {
                 if (!a.is_finite()) {
                     throw py::value_error("ordinal is infinite");
                 }
                 return a.finite_value();
             })
        .def("deg", [](const Ordinal& a) { return deg(a); })
        .def("terms",
             [](const Ordinal& a) {
                 Term scratch;
                 std::vector<std::pair<Ordinal, Coefficient>> out;
                 for (const Term& t : view_terms(a, scratch)) {
                     out.emplace_back(t.exponent, t.coefficient);
                 }
                 return out;
             })
        .def("__add__", [](const Ordinal& a, const py::object& b) { return add(a, to_ordinal(b)); })
        .def("__radd__", [](const Ordinal& a, const py::object& b) { return add(to_ordinal(b), a); })
        .def("__mul__", [](const Ordinal& a, const py::object& b) { return mul(a, to_ordinal(b)); })
        .def("__rmul__", [](const Ordinal& a, const py::object& b) { return mul(to_ordinal(b), a); })
        .def("__pow__", [](const Ordinal& a, const py::object& b) { return pow(a, to_ordinal(b)); })
        .def("__rpow__", [](const Ordinal& a, const py::object& b) { return pow(to_ordinal(b), a); })
        .def("__eq__", [](const Ordinal& a, const py::object& b) { return a == to_ordinal(b); })
        .def("__lt__", [](const Ordinal& a, const py::object& b) { return a < to_ordinal(b); })
        .def("__le__", [](const Ordinal& a, const py::object& b) { return a <= to_ordinal(b); })
        .def("__gt__", [](const Ordinal& a, const py::object& b) { return a > to_ordinal(b); })
        .def("__ge__", [](const Ordinal& a, const py::object& b) { return a >= to_ordinal(b); })
        .def("__hash__", [](const Ordinal& a) { return py::hash(py::str(format_ordinal(a))); })
        .def("__str__", &format_ordinal)
        .def("__repr__", [](const Ordinal& a) { return "Ordinal('" + format_ordinal(a) + "')"; });

    py::class_<SpaceExpr>(m, "Space")
        .def(py::init([](const std::string& text) { return parse_space(text); }), py::arg("text"))
        .def("__eq__", [](const SpaceExpr& a, const SpaceExpr& b) { return a == b; })
        .def("__str__", &format_space)
        .def("__repr__", [](const SpaceExpr& s) { return "Space('" + format_space(s) + "')"; });

    m.def("parse", [](const std::string& text) { return parse_ordinal(text); }, py::arg("text"));
    m.def("left_divmod", [](const py::object& a, const py::object& d) {
        const DivMod r = szlenk::divmod(to_ordinal(a), to_ordinal(d));
        return py::make_tuple(r.quotient, r.remainder);
    });
    m.def("left_difference", [](const py::object& a, const py::object& b) {
        return left_difference(to_ordinal(a), to_ordinal(b));
    });

    m.def("gamma", [](const py::object& a) { return gamma_of(to_ordinal(a)); }, py::arg("alpha"));
    m.def("szlenk_index", [](const py::object& a) { return szlenk_index(to_ordinal(a)); }, py::arg("alpha"));
    m.def("dentability_index", [](const py::object& a) { return dentability_index(to_ordinal(a)); },
          py::arg("alpha"));
    m.def(
        "isomorphic", [](const py::object& a, const py::object& b) { return isomorphic(to_ordinal(a), to_ordinal(b)).isomorphic; },
        py::arg("alpha"), py::arg("beta"));
    m.def("canonical_representative", [](const py::object& a) { return canonical_representative(to_ordinal(a)); },
          py::arg("alpha"));

    m.def("cb_height", [](const py::object& a) { return cb_height(to_ordinal(a)); }, py::arg("alpha"));
    m.def("cb_quotient", [](const py::object& a, const py::object& xi) {
        return cb_derivative(to_ordinal(a), to_ordinal(xi)).quotient;
    }, py::arg("alpha"), py::arg("xi"));
    m.def("dirac_rank", [](const py::object& a) { return dirac_rank(to_ordinal(a)); }, py::arg("point"));

    m.def("normalize", [](const py::object& s) {
        const RewriteTrace t = normalize(to_space(s));
        py::dict d;
        d["result"] = t.result;
        d["steps"] = steps_to_list(t);
        d["verified"] = check_trace(t);
        return d;
    }, py::arg("space"));
    m.def("decompose", [](const py::object& xi, const py::object& zeta) {
        return decompose_bp(to_ordinal(xi), to_ordinal(zeta)).result;
    }, py::arg("xi"), py::arg("zeta"));
    m.def("bounds", [](const py::object& s) {
        const IndexBounds b = szlenk_bounds(to_space(s));
        return py::make_tuple(b.lower, b.upper, b.exact);
    }, py::arg("space"));
}
