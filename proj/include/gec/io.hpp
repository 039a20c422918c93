#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gec/cochain.hpp"
#include "gec/complex.hpp"
#include "gec/smoothform.hpp"
#include "gec/stress.hpp"

namespace gec {

// Malformed files and inconsistent scenario data. The CLI maps this to its
// "bad input" exit code, distinct from a failed identity check.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

// Mesh files: {"dimension": d, "vertices": [["0", "1/2", ...], ...],
// "simplices": [[v0, ...], ...]} with rational coordinate strings.
ComplexPtr mesh_from_json(const nlohmann::json& j);
nlohmann::json mesh_to_json(const ComplexPtr& K);

// Polynomials: {"monomials": {"2,0,1": "3/2", ...}} keyed by exponent tuple.
Poly poly_from_json(const nlohmann::json& j, int nvars);
nlohmann::json poly_to_json(const Poly& p);

// Forms: {"dimension": n, "degree": k, "terms": {"1,3": <poly>, ...}} with
// 1-based axis lists in the keys.
PolyForm form_from_json(const nlohmann::json& j);
nlohmann::json form_to_json(const PolyForm& w);

// Cochains: {"degree": k, "values": {"0,1": "p/q", ...}} keyed by the
// canonical (ascending) vertex list.
Cochain cochain_from_json(const nlohmann::json& j, const ComplexPtr& K);
nlohmann::json cochain_to_json(const Cochain& w);

// Multivector fields use the same axes/monomials encoding as forms; stress
// and body-force fields are term lists
// {"dimension": n, "velocity_degree": r, "terms": [{"field": <mv>, "form": <form>}, ...]}.
PolyMultivectorField multivector_from_json(const nlohmann::json& j);
nlohmann::json multivector_to_json(const PolyMultivectorField& X);
TractionStressField traction_from_json(const nlohmann::json& j);
BodyForceField body_force_from_json(const nlohmann::json& j);

// A verification or power scenario. Field presence depends on the mode:
// smooth wants polynomial forms g/alpha, discrete wants cochains, the
// magnetostatics and crosscheck modes want three-component vector fields.
struct Scenario {
    std::string mode = "smooth";
    int d = 3;
    int r = 1;
    ComplexPtr mesh;
    std::optional<PolyForm> g;
    std::optional<PolyForm> alpha;
    std::optional<Cochain> g_cochain;
    std::optional<Cochain> alpha_cochain;
    std::optional<std::array<Poly, 3>> g_vec;
    std::optional<std::array<Poly, 3>> w_vec;
    std::optional<TractionStressField> sigma;
    std::optional<BodyForceField> body;
    // Absent: run everything. Present but empty: rejected as bad input.
    std::optional<std::vector<std::string>> suites;
    unsigned long long seed = 0;
    int test_degree = 3;        // monomial-basis cap for the current identities
    int refine_levels = 3;      // float-mode refinement count
    int quadrature_index = 1;   // float-mode rule index
    bool float_requested = false;
    bool inject_sign_error = false;
};

// Reads a scenario file. Relative mesh paths resolve against the scenario
// file's directory. "mesh_gen": {"kind": "box"|"simplex", "dim": d,
// "subdivisions": n} generates the mesh in place of a file reference; with
// neither present the unit box at subdivision 1 is used.
Scenario scenario_from_file(const std::string& path);
Scenario scenario_from_json(const nlohmann::json& j, const std::string& base_dir);

}  // namespace gec
