// Python bindings for the core operations. Polynomials cross the boundary as
// expression strings, big integers as exact Python ints.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "equising/abhyankar.hpp"
#include "equising/canon.hpp"
#include "equising/enumalg.hpp"
#include "equising/json_io.hpp"
#include "equising/poly_text.hpp"

namespace py = pybind11;
using namespace equising;

namespace {

py::int_ py_int(const Int& v) {
    PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

Int int_from_py(const py::handle& h) { return Int(py::str(h).cast<std::string>()); }

std::vector<Int> gens_from_py(const py::sequence& seq) {
    std::vector<Int> out;
    for (const auto& item : seq) out.push_back(int_from_py(item));
    return out;
}

py::list py_ints(const std::vector<Int>& vs) {
    py::list out;
    for (const Int& v : vs) out.append(py_int(v));
    return out;
}

py::dict semigroup_dict(const SemigroupData& s) {
    py::dict d;
    d["generators"] = py_ints(s.r);
    d["d"] = py_ints(s.d);
    d["e"] = py_ints(s.e);
    d["m"] = py_ints(s.m);
    d["h"] = s.h;
    d["conductor"] = s.conductor ? py::object(py_int(*s.conductor)) : py::none();
    return d;
}

py::dict trace_dict(const CriterionTrace& t) {
    py::dict d;
    d["irreducible"] = t.irreducible;
    d["reason"] = t.reason;
    d["r"] = py_ints(t.r);
    d["d"] = py_ints(t.d);
    d["tschirnhausen"] = t.tschirnhausen_applied;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact equisingularity data of irreducible plane curve singularities";

    m.def("validate", [](const py::sequence& gens) {
        const ValidationReport rep = validate(gens_from_py(gens));
        py::list fails;
        for (const auto& f : rep.failures) fails.append(f.to_string());
        py::dict d;
        d["valid"] = rep.valid;
        d["failures"] = fails;
        return d;
    }, py::arg("generators"), "Validate a candidate generator sequence.");

    m.def("semigroup", [](const py::sequence& gens) {
        return semigroup_dict(derive_char(gens_from_py(gens)));
    }, py::arg("generators"), "Characteristic sequences d, e, m and the conductor.");

    m.def("conductor", [](const py::sequence& gens) {
        return py_int(conductor(derive_char(gens_from_py(gens))));
    }, py::arg("generators"));

    m.def("membership", [](const py::sequence& gens, const py::int_& n) {
        return membership(derive_char(gens_from_py(gens)), int_from_py(n));
    }, py::arg("generators"), py::arg("n"));

    m.def("gaps", [](const py::sequence& gens) {
        return py_ints(gaps(derive_char(gens_from_py(gens))));
    }, py::arg("generators"));

    m.def("puiseux_pairs", [](const py::sequence& gens) {
        py::list out;
        for (const auto& [a, b] : puiseux_pairs(derive_char(gens_from_py(gens))))
            out.append(py::make_tuple(py_int(a), py_int(b)));
        return out;
    }, py::arg("generators"));

    m.def("theta_rep", [](const py::sequence& gens, int k) {
        return py_ints(theta_rep(derive_char(gens_from_py(gens)), k));
    }, py::arg("generators"), py::arg("k"));

    m.def("canonical_element", [](const py::sequence& gens) {
        const CanonicalElement ce = canonical_element(derive_char(gens_from_py(gens)));
        py::dict d;
        d["nested"] = ce.nested_text();
        d["expanded"] = to_string(ce.polynomial());
        py::list thetas;
        for (const auto& th : ce.theta) thetas.append(py_ints(th));
        d["theta"] = thetas;
        return d;
    }, py::arg("generators"));

    m.def("generic_form", [](const py::sequence& gens) {
        const GenericForm f = generic_form(derive_char(gens_from_py(gens)));
        py::dict d;
        d["nested"] = f.nested_text();
        d["json"] = to_json(f).dump();
        return d;
    }, py::arg("generators"));

    m.def("enumerate_E", [](const py::sequence& gens, int k, const py::int_& i,
                            const py::int_& bound, int type) {
        py::list out;
        for (const auto& th : enumerate_E(derive_char(gens_from_py(gens)), k,
                                          int_from_py(i), int_from_py(bound), type))
            out.append(py_ints(th));
        return out;
    }, py::arg("generators"), py::arg("k"), py::arg("i"), py::arg("xdeg_bound"),
       py::arg("type") = 2);

    m.def("sample_member", [](const py::sequence& gens, std::uint64_t seed, int terms,
                              const py::int_& coeff_bound) {
        return to_string(sample_member(derive_char(gens_from_py(gens)), seed, terms,
                                       int_from_py(coeff_bound)));
    }, py::arg("generators"), py::arg("seed") = 0, py::arg("extra_terms") = 0,
       py::arg("coeff_bound") = 5);

    m.def("is_irreducible", [](const std::string& poly) {
        return trace_dict(is_irreducible(parse_poly(poly)));
    }, py::arg("poly"), "Abhyankar's irreducibility criterion on an expression string.");

    m.def("semigroup_of", [](const std::string& poly) {
        return semigroup_dict(semigroup_of(parse_poly(poly)));
    }, py::arg("poly"));

    m.def("milnor", [](const std::string& poly) {
        return py_int(milnor(parse_poly(poly)));
    }, py::arg("poly"));

    m.def("int_mult", [](const std::string& f, const std::string& g) -> py::object {
        const XOrder v = int_mult(parse_poly(f), parse_poly(g));
        if (!v.is_finite()) return py::none();
        return py::int_(v.value());
    }, py::arg("f"), py::arg("g"), "Intersection multiplicity; None when infinite.");

    m.def("expand", [](const std::string& poly) { return to_string(parse_poly(poly)); },
          py::arg("poly"), "Parse an expression and print its canonical expanded form.");

    m.def("enumerate_semigroups", [](const py::int_& milnor_number, bool with_canonical) {
        py::list out;
        for (const auto& s : enumerate_semigroups(int_from_py(milnor_number))) {
            py::dict d = semigroup_dict(s);
            if (with_canonical) d["canonical"] = canonical_element(s).nested_text();
            out.append(d);
        }
        return out;
    }, py::arg("milnor"), py::arg("with_canonical") = false);

    m.def("sharp_family", [](int h) { return semigroup_dict(sharp_family(h)); },
          py::arg("h"));

    m.def("brute_force_enumerate", [](const py::int_& milnor_number, const py::int_& cap) {
        py::list out;
        for (const auto& s : brute_force_enumerate(int_from_py(milnor_number),
                                                   int_from_py(cap)))
            out.append(semigroup_dict(s));
        return out;
    }, py::arg("milnor"), py::arg("r_cap"));

    m.def("length_range", [](const py::int_& milnor_number) {
        return length_range(int_from_py(milnor_number));
    }, py::arg("milnor"));
}
