// Python module `pydaha`: normal forms, Dunkl actions and the check suites.

#include <memory>
#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"

#include "daha/checks.hpp"
#include "daha/dunkl.hpp"
#include "daha/parse.hpp"

namespace py = pybind11;
using namespace daha;

namespace {

std::shared_ptr<const PBWAlgebra> algebra_of(const std::string& family, const std::string& type, int rank,
                                             const std::string& params) {
    if (type.size() != 1) throw std::invalid_argument("type must be A, B or D");
    return std::make_shared<PBWAlgebra>(
        make_spec(family_kind_from_name(family), WeylType(family_from_char(type[0]), rank), ParamOverride::parse(params)));
}

py::object loads(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object render(const Algebra& alg, const Element& e, bool json) {
    if (json) return loads(alg.to_json(e));
    return py::str(alg.str(e));
}

}  // namespace

PYBIND11_MODULE(pydaha, m) {
    m.doc() = "Exact normal forms and verification for double affine Hecke algebras of types A, B, D";

    static py::exception<BudgetError> budget(m, "BudgetError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const BudgetError& e) {
            py::set_error(budget, e.what());
        }
    });

    m.def(
        "nf",
        [](const std::string& expr, const std::string& family, const std::string& type, int rank,
           const std::string& params, bool json) {
            auto alg = algebra_of(family, type, rank, params);
            return render(*alg, parse(*alg, expr), json);
        },
        "Normal form of an expression.", py::arg("expr"), py::arg("family") = "H", py::arg("type") = "A",
        py::arg("rank") = 2, py::arg("params") = "", py::arg("json") = false);

    m.def(
        "mul",
        [](const std::string& a, const std::string& b, const std::string& family, const std::string& type, int rank,
           const std::string& params, bool json) {
            auto alg = algebra_of(family, type, rank, params);
            return render(*alg, alg->mul(parse(*alg, a), parse(*alg, b)), json);
        },
        "Normal form of the product a*b.", py::arg("a"), py::arg("b"), py::arg("family") = "H", py::arg("type") = "A",
        py::arg("rank") = 2, py::arg("params") = "", py::arg("json") = false);

    m.def(
        "apply",
        [](const std::string& op, const std::string& input, const std::string& family, const std::string& type,
           int rank, const std::string& params, bool json) -> py::object {
            auto alg = algebra_of(family, type, rank, params);
            VermaModule mod(alg);
            const ModuleElement v = mod.act(to_free(*alg, parse(*alg, op)), mod.from_element(parse(*alg, input)));
            if (json) return loads(mod.to_json(v));
            return py::str(mod.str(v));
        },
        "Action of op on the Dunkl module vector input (x) 1.", py::arg("op"), py::arg("input"),
        py::arg("family") = "H", py::arg("type") = "A", py::arg("rank") = 2, py::arg("params") = "",
        py::arg("json") = false);

    m.def(
        "check",
        [](const std::string& suite, std::optional<std::string> family, std::optional<std::string> type,
           std::optional<int> rank, std::optional<int> degree, std::uint64_t seed, std::optional<std::string> map,
           bool inject_fault, bool unsafe_rank, const std::string& params) {
            CheckOptions o;
            if (family) o.family = family_kind_from_name(*family);
            if (type) o.type = family_from_char(type->at(0));
            o.rank = rank;
            o.degree = degree;
            if (map) o.map = map_kind_from_name(*map);
            o.seed = seed;
            o.inject_fault = inject_fault;
            o.unsafe_rank = unsafe_rank;
            o.params = ParamOverride::parse(params);
            CheckReport r;
            {
                py::gil_scoped_release release;
                r = run_check(suite, o);
            }
            return loads(r.to_json());
        },
        "Run a verification suite and return its report.", py::arg("suite"), py::arg("family") = py::none(),
        py::arg("type") = py::none(), py::arg("rank") = py::none(), py::arg("degree") = py::none(),
        py::arg("seed") = 1, py::arg("map") = py::none(), py::arg("inject_fault") = false,
        py::arg("unsafe_rank") = false, py::arg("params") = "");

    m.def("suites", &suite_names, "Names of the verification suites.");
}
