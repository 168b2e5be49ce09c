#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gnum/errors.hpp"
#include "gnum/session.hpp"

namespace py = pybind11;

namespace {

// Builds a Session per call so registry and precision stay explicit at the Python level.
gnum::Session make_session(const std::optional<std::string>& registry, const std::optional<std::string>& precision) {
    gnum::Session s;
    if (registry) s.load_registry_text(*registry);
    if (precision) s.precision = gnum::parse_precision(*precision);
    return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "JSON-level bindings of the gnum session commands";

    static py::exception<gnum::Error> error(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const gnum::Error& e) {
            py::tuple args = py::make_tuple(e.code(), e.what(), gnum::exit_code_for(e.code()));
            PyErr_SetObject(error.ptr(), args.ptr());
        }
    });

    py::class_<gnum::Session>(m, "Session")
        .def(py::init(&make_session), py::arg("registry") = py::none(), py::arg("precision") = py::none())
        .def("load_grid", &gnum::Session::load_grid_text, py::arg("grid_json"))
        .def("eval",
             [](const gnum::Session& s, const std::string& expr, long level, const std::string& iota,
                const std::string& eps, const std::optional<std::string>& prec) {
                 const gnum::TestPoint t(level, gnum::parse_rational(iota), gnum::parse_rational(eps));
                 return s.eval(expr, t, prec ? std::optional(gnum::parse_precision(*prec)) : std::nullopt).dump();
             },
             py::arg("expr"), py::arg("level") = 0, py::arg("iota") = "1", py::arg("eps") = "1/1024",
             py::arg("prec") = py::none())
        .def("val", [](const gnum::Session& s, const std::string& x) { return s.val(x).dump(); })
        .def("norm", [](const gnum::Session& s, const std::string& x) { return s.norm(x).dump(); })
        .def("dist", [](const gnum::Session& s, const std::string& x, const std::string& y) { return s.dist(x, y).dump(); })
        .def("is_unit", [](const gnum::Session& s, const std::string& x) { return s.is_unit(x).dump(); })
        .def("is_null", [](const gnum::Session& s, const std::string& x) { return s.is_null(x).dump(); })
        .def("approx", [](const gnum::Session& s, const std::string& x, long n) { return s.approx(x, n).dump(); },
             py::arg("expr"), py::arg("max_n") = 8)
        .def("unitize", [](const gnum::Session& s, const std::string& x) { return s.unitize(x).dump(); })
        .def("idempotent", [](const gnum::Session& s, const std::string& x) { return s.idempotent(x).dump(); })
        .def("ideal_member",
             [](const gnum::Session& s, const std::string& x, const std::string& f) { return s.ideal_member(x, f).dump(); },
             py::arg("expr"), py::arg("family_json"))
        .def("enum_families", [](const gnum::Session& s, const std::string& a) { return s.enum_families(a).dump(); },
             py::arg("algebra_json"))
        .def("sign", [](const gnum::Session& s, const std::string& x) { return s.sign(x).dump(); })
        .def("decompose", [](const gnum::Session& s, const std::string& x) { return s.decompose(x).dump(); })
        .def("qsign", [](const gnum::Session& s, const std::string& x, const std::string& f) { return s.qsign(x, f).dump(); },
             py::arg("expr"), py::arg("family_json"))
        .def("oracle",
             [](const gnum::Session& s, const std::string& x, const std::optional<std::string>& inject) {
                 return s.oracle(x, inject).dump();
             },
             py::arg("expr"), py::arg("inject_valuation") = py::none())
        .def("suite", [](const gnum::Session& s, const std::string& name) { return s.suite(name).dump(); })
        .def("suite_list", [](const gnum::Session& s) { return s.suite_list().dump(); });
}
