#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "qseries/dsl.hpp"
#include "qseries/errors.hpp"
#include "qseries/identities.hpp"
#include "qseries/oracle.hpp"
#include "qseries/products.hpp"

namespace py = pybind11;
using namespace qseries;

namespace {

py::int_ to_py(const Integer& x) {
    const std::string s = x.get_str();
    return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

Integer from_py(const py::int_& x) { return Integer(py::str(x).cast<std::string>()); }

py::list to_py(const std::vector<Integer>& v) {
    py::list out;
    for (const auto& x : v) {
        out.append(to_py(x));
    }
    return out;
}

Series from_list(const py::list& coeffs, Exponent valuation, Exponent order) {
    std::vector<Integer> c;
    for (const auto& x : coeffs) {
        c.push_back(from_py(x.cast<py::int_>()));
    }
    return Series::from_coefficients(valuation, std::move(c), order);
}

py::dict report_dict(const IdentityReport& r) {
    py::dict params;
    for (const auto& [k, v] : r.params) {
        params[py::str(k)] = v;
    }
    py::dict d;
    d["identity"] = r.identity;
    d["params"] = params;
    d["order"] = r.order;
    d["outcome"] = to_string(r.outcome);
    d["first_mismatch"] = r.first_mismatch ? py::object(py::int_(*r.first_mismatch)) : py::none();
    d["millis"] = r.millis;
    d["variant"] = r.variant;
    d["passed"] = r.passed();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Truncated q-series arithmetic and identity checks";

    auto base = py::register_exception<Error>(m, "QSeriesError");
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<dsl::DslError>(m, "DslError", base.ptr());

    py::class_<Series>(m, "Series")
        .def(py::init([](const py::list& coeffs, Exponent valuation, Exponent order) {
                 return from_list(coeffs, valuation, order);
             }),
             py::arg("coefficients"), py::arg("valuation") = 0, py::arg("order"))
        .def_static("one", &Series::one, py::arg("order"))
        .def_static("zero", &Series::zero, py::arg("order"))
        .def_property_readonly("order", &Series::order)
        .def_property_readonly("valuation", &Series::valuation)
        .def("is_zero", &Series::is_zero)
        .def("coeff", [](const Series& f, Exponent e) { return to_py(f.coeff(e)); })
        .def("coefficients",
             [](const Series& f) {
                 return to_py(std::vector<Integer>(f.coefficients().begin(), f.coefficients().end()));
             })
        .def("truncate", &Series::truncate)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__pow__", [](const Series& f, Exponent k) { return pow(f, k); })
        .def("__repr__", &Series::to_string);

    m.def("invert", [](const Series& f) { return invert(f); });
    m.def("shift", &shift);
    m.def("first_mismatch",
          [](const Series& f, const Series& g, Exponent up_to) { return first_mismatch(f, g, up_to); }, py::arg("f"), py::arg("g"), py::arg("up_to"));

    m.def("pochhammer", &pochhammer, py::arg("a"), py::arg("d"), py::arg("order"));
    m.def("theta6", [](Exponent order, bool sum_form) {
        return theta6(order, sum_form ? ThetaMode::sum : ThetaMode::product);
    }, py::arg("order"), py::arg("sum_form") = false);
    m.def("eval", [](const std::string& expr, Exponent order) { return dsl::eval(expr, order); },
          py::arg("expr"), py::arg("order"));

    m.def("bounds_quin", [](Exponent n) {
        const auto b = bounds_quin(n);
        return py::make_tuple(b.r1, b.r2);
    });
    m.def("bounds_sept", [](Exponent n) {
        const auto b = bounds_sept(n);
        return py::make_tuple(b.s1, b.s2, b.s3, b.s4);
    });
    m.def("cor_quin_coefficients", [](Exponent n, Exponent mmax) {
        return to_py(cor_quin_coefficients(n, mmax));
    });
    m.def("cor_sept_coefficients", [](const std::string& variant, Exponent n, Exponent mmax) {
        if (variant != "14" && variant != "23") {
            throw DomainError("variant must be '14' or '23'");
        }
        return to_py(cor_sept_coefficients(variant == "14" ? SeptVariant::v14 : SeptVariant::v23,
                                           n, mmax));
    });

    m.def("m_oracle", [](Exponent k, Exponent n) { return to_py(oracle::m_oracle(k, n)); });
    m.def("modd_oracle", [](Exponent k, Exponent n) { return to_py(oracle::modd_oracle(k, n)); });

    m.def("identities", [] {
        std::vector<std::string> names;
        for (const auto id : all_identities()) {
            names.push_back(to_string(id));
        }
        return names;
    });
    m.def("verify",
          [](const std::string& name, const ParamMap& params, Exponent order) {
              const auto id = parse_identity(name);
              if (!id) {
                  throw DomainError("unknown identity " + name);
              }
              IdentityReport r;
              {
                  py::gil_scoped_release release;
                  r = verify(*id, params, order);
              }
              return report_dict(r);
          },
          py::arg("identity"), py::arg("params") = ParamMap{}, py::arg("order"));
}
