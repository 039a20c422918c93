// Python bindings: thin string-level wrappers over the JSON interfaces, plus
// a few exact-arithmetic entry points for direct experimentation.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gec/electro.hpp"
#include "gec/io.hpp"
#include "gec/meshgen.hpp"
#include "gec/verify.hpp"

namespace py = pybind11;
using namespace gec;

namespace {

std::string mesh_json(const std::string& kind, int dim, int sub) {
    ComplexPtr K;
    if (kind == "box")
        K = kuhn_box(dim, sub);
    else if (kind == "simplex")
        K = standard_simplex_mesh(dim);
    else
        throw InputError("unknown mesh kind '" + kind + "'");
    return mesh_to_json(K).dump(2);
}

std::string verify_json(const std::string& scenario_text, const std::string& base_dir,
                        std::optional<unsigned long long> seed) {
    Scenario sc = scenario_from_json(nlohmann::json::parse(scenario_text), base_dir);
    if (seed) sc.seed = *seed;
    return report_to_json(run_suites(sc)).dump(2);
}

std::string power_json(const std::string& scenario_text, const std::string& base_dir,
                       std::optional<int> refine) {
    Scenario sc = scenario_from_json(nlohmann::json::parse(scenario_text), base_dir);
    return power_report(sc, refine).dump(2);
}

std::string worked_power(int spacetime_dim, int potential_degree) {
    ElectroConfig cfg{spacetime_dim, potential_degree};
    PolyForm g(3, 1);
    g.add_term({1}, Poly::variable(3, 0));
    PolyForm alpha(3, 1);
    alpha.add_term({2}, Poly::variable(3, 1));
    return rat_to_string(total_power(kuhn_box(3, 1), g, alpha, cfg));
}

}  // namespace

PYBIND11_MODULE(_gec, m) {
    m.doc() = "exterior-calculus stress and electrodynamics engine";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    m.def("mesh_json", &mesh_json, py::arg("kind") = "box", py::arg("dim") = 3,
          py::arg("sub") = 1, "Generate a simplicial mesh and return it as a JSON string.");

    m.def("verify_json", &verify_json, py::arg("scenario"), py::arg("base_dir") = ".",
          py::arg("seed") = py::none(),
          "Run the identity suites for a scenario JSON string; returns the report JSON.");

    m.def("power_json", &power_json, py::arg("scenario"), py::arg("base_dir") = ".",
          py::arg("refine") = py::none(),
          "Evaluate the power scalars for a scenario JSON string; returns the report JSON.");

    m.def("suite_names", [] { return all_suite_names(); },
          "Names of the identity suites, in canonical order.");

    m.def("worked_power", &worked_power, py::arg("spacetime_dim") = 3,
          py::arg("potential_degree") = 1,
          "Exact total power of the g = x dy, alpha = y dz pair over the unit cube.");
}
