#include "gec/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gec/meshgen.hpp"

namespace gec {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InputError(what); }

// Comma-separated integer keys ("", "3", "0,2,5").
std::vector<long> split_ints(const std::string& key) {
    std::vector<long> out;
    if (key.empty()) return out;
    std::stringstream ss(key);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            std::size_t used = 0;
            long v = std::stol(piece, &used);
            if (used != piece.size()) bad("malformed integer list key: " + key);
            out.push_back(v);
        } catch (const std::logic_error&) {
            bad("malformed integer list key: " + key);
        }
    }
    return out;
}

std::string join_ints(const std::vector<long>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

Rat rat_field(const nlohmann::json& j, const std::string& context) {
    if (!j.is_string()) bad(context + ": rationals are encoded as strings");
    try {
        return rat_from_string(j.get<std::string>());
    } catch (const std::exception&) {
        bad(context + ": cannot parse rational '" + j.get<std::string>() + "'");
    }
}

int int_field(const nlohmann::json& j, const std::string& name) {
    if (!j.contains(name) || !j.at(name).is_number_integer())
        bad("missing or non-integer field '" + name + "'");
    return j.at(name).get<int>();
}

// Shared axes/monomials reader for forms and multivector fields.
template <class T>
T indexed_field_from_json(const nlohmann::json& j, const char* kind) {
    int nvars = int_field(j, "dimension");
    int degree = int_field(j, "degree");
    if (nvars < 0 || degree < 0) bad(std::string(kind) + ": negative dimension or degree");
    T out(nvars, degree);
    if (!j.contains("terms")) return out;
    if (!j.at("terms").is_object()) bad(std::string(kind) + ": 'terms' must be an object");
    for (const auto& [key, val] : j.at("terms").items()) {
        std::vector<long> one_based = split_ints(key);
        AxisList axes;
        for (std::size_t i = 0; i < one_based.size(); ++i) {
            long a = one_based[i];
            if (a < 1 || a > nvars) bad(std::string(kind) + ": axis out of range in '" + key + "'");
            if (i > 0 && one_based[i - 1] >= a)
                bad(std::string(kind) + ": axes must be strictly increasing in '" + key + "'");
            axes.push_back((int)(a - 1));
        }
        if ((int)axes.size() != degree) bad(std::string(kind) + ": axis count != degree in '" + key + "'");
        out.add_term(axes, poly_from_json(val, nvars));
    }
    return out;
}

template <class T>
nlohmann::json indexed_field_to_json(const T& w) {
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [axes, poly] : w.terms()) {
        if (poly.is_zero()) continue;
        std::vector<long> one_based;
        for (int a : axes) one_based.push_back(a + 1);
        terms[join_ints(one_based)] = poly_to_json(poly);
    }
    return {{"dimension", w.nvars()}, {"degree", w.degree()}, {"terms", terms}};
}

std::array<Poly, 3> vec3_from_json(const nlohmann::json& j, const char* name) {
    if (!j.is_array() || j.size() != 3) bad(std::string(name) + ": expected three components");
    return {poly_from_json(j[0], 3), poly_from_json(j[1], 3), poly_from_json(j[2], 3)};
}

template <class T>
T stress_terms_from_json(const nlohmann::json& j, const char* kind) {
    T out(int_field(j, "dimension"), int_field(j, "velocity_degree"));
    if (!j.contains("terms") || !j.at("terms").is_array())
        bad(std::string(kind) + ": missing 'terms' list");
    for (const auto& t : j.at("terms")) {
        if (!t.contains("field") || !t.contains("form")) bad(std::string(kind) + ": term needs 'field' and 'form'");
        try {
            out.add_term(multivector_from_json(t.at("field")), form_from_json(t.at("form")));
        } catch (const std::invalid_argument& e) {
            bad(std::string(kind) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        bad(path + ": " + e.what());
    }
}

void save_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) bad("cannot write " + path);
    out << j.dump(2) << '\n';
}

ComplexPtr mesh_from_json(const nlohmann::json& j) {
    int dim = int_field(j, "dimension");
    if (!j.contains("vertices") || !j.at("vertices").is_array()) bad("mesh: missing 'vertices'");
    if (!j.contains("simplices") || !j.at("simplices").is_array()) bad("mesh: missing 'simplices'");

    std::vector<std::vector<Rat>> coords;
    for (const auto& row : j.at("vertices")) {
        if (!row.is_array() || (int)row.size() != dim) bad("mesh: vertex width != dimension");
        std::vector<Rat> pt;
        for (const auto& c : row) pt.push_back(rat_field(c, "mesh vertex"));
        coords.push_back(std::move(pt));
    }

    std::vector<VertexList> tops;
    for (const auto& row : j.at("simplices")) {
        if (!row.is_array()) bad("mesh: simplex must be a vertex list");
        VertexList s;
        for (const auto& v : row) {
            if (!v.is_number_integer()) bad("mesh: vertex ids are integers");
            s.push_back(v.get<int>());
        }
        tops.push_back(std::move(s));
    }

    try {
        return SimplicialComplex::build(dim, coords, tops);
    } catch (const std::invalid_argument& e) {
        bad(std::string("mesh: ") + e.what());
    }
}

nlohmann::json mesh_to_json(const ComplexPtr& K) {
    nlohmann::json vertices = nlohmann::json::array();
    for (const auto& pt : K->vertex_coords()) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& c : pt) row.push_back(rat_to_string(c));
        vertices.push_back(std::move(row));
    }
    nlohmann::json simplices = nlohmann::json::array();
    for (const auto& s : K->top_simplices()) simplices.push_back(s.vertices);
    return {{"dimension", K->ambient_dim()}, {"vertices", vertices}, {"simplices", simplices}};
}

Poly poly_from_json(const nlohmann::json& j, int nvars) {
    if (!j.is_object() || !j.contains("monomials") || !j.at("monomials").is_object())
        bad("polynomial: expected {\"monomials\": {...}}");
    Poly p(nvars);
    for (const auto& [key, val] : j.at("monomials").items()) {
        std::vector<long> raw = split_ints(key);
        if ((int)raw.size() != nvars) bad("polynomial: exponent tuple width != dimension in '" + key + "'");
        Exponents e;
        for (long x : raw) {
            if (x < 0) bad("polynomial: negative exponent in '" + key + "'");
            e.push_back((unsigned)x);
        }
        p += Poly::monomial(nvars, e, rat_field(val, "polynomial coefficient"));
    }
    return p;
}

nlohmann::json poly_to_json(const Poly& p) {
    nlohmann::json monomials = nlohmann::json::object();
    for (const auto& [e, c] : p.terms()) {
        std::vector<long> raw(e.begin(), e.end());
        monomials[join_ints(raw)] = rat_to_string(c);
    }
    return {{"monomials", monomials}};
}

PolyForm form_from_json(const nlohmann::json& j) {
    return indexed_field_from_json<PolyForm>(j, "form");
}

nlohmann::json form_to_json(const PolyForm& w) { return indexed_field_to_json(w); }

PolyMultivectorField multivector_from_json(const nlohmann::json& j) {
    return indexed_field_from_json<PolyMultivectorField>(j, "multivector");
}

nlohmann::json multivector_to_json(const PolyMultivectorField& X) {
    return indexed_field_to_json(X);
}

TractionStressField traction_from_json(const nlohmann::json& j) {
    return stress_terms_from_json<TractionStressField>(j, "stress");
}

BodyForceField body_force_from_json(const nlohmann::json& j) {
    return stress_terms_from_json<BodyForceField>(j, "body force");
}

Cochain cochain_from_json(const nlohmann::json& j, const ComplexPtr& K) {
    int degree = int_field(j, "degree");
    if (degree < 0 || degree > K->top_dim()) bad("cochain: degree out of range for the complex");
    Cochain w(K, degree);
    if (!j.contains("values")) return w;
    if (!j.at("values").is_object()) bad("cochain: 'values' must be an object");
    for (const auto& [key, val] : j.at("values").items()) {
        std::vector<long> raw = split_ints(key);
        VertexList s;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] < 0) bad("cochain: negative vertex id in '" + key + "'");
            if (i > 0 && raw[i - 1] >= raw[i]) bad("cochain: vertex list not ascending in '" + key + "'");
            s.push_back((int)raw[i]);
        }
        try {
            w.set(s, rat_field(val, "cochain value"));
        } catch (const std::invalid_argument& e) {
            bad(std::string("cochain: ") + e.what());
        }
    }
    return w;
}

nlohmann::json cochain_to_json(const Cochain& w) {
    nlohmann::json values = nlohmann::json::object();
    for (const auto& [s, v] : w.values()) {
        std::vector<long> raw(s.begin(), s.end());
        values[join_ints(raw)] = rat_to_string(v);
    }
    return {{"degree", w.degree()}, {"values", values}};
}

Scenario scenario_from_file(const std::string& path) {
    return scenario_from_json(load_json_file(path),
                              std::filesystem::path(path).parent_path().string());
}

Scenario scenario_from_json(const nlohmann::json& j, const std::string& base_dir) {
    if (!j.is_object()) bad("scenario: expected an object");
    Scenario s;

    if (j.contains("mode")) {
        if (!j.at("mode").is_string()) bad("scenario: 'mode' must be a string");
        s.mode = j.at("mode").get<std::string>();
    }
    if (s.mode != "smooth" && s.mode != "discrete" && s.mode != "magnetostatics" &&
        s.mode != "crosscheck")
        bad("scenario: unknown mode '" + s.mode + "'");

    if (j.contains("d")) s.d = int_field(j, "d");
    if (j.contains("r")) s.r = int_field(j, "r");
    if (s.d < 1 || s.r < 0 || s.r > s.d - 1) bad("scenario: need d >= 1 and 0 <= r <= d-1");

    if (j.contains("seed")) {
        if (!j.at("seed").is_number_integer() || j.at("seed").get<long long>() < 0)
            bad("scenario: 'seed' must be a non-negative integer");
        s.seed = j.at("seed").get<unsigned long long>();
    }
    if (j.contains("test_degree")) {
        s.test_degree = int_field(j, "test_degree");
        if (s.test_degree < 0 || s.test_degree > 6) bad("scenario: 'test_degree' out of range");
    }
    if (j.contains("inject_sign_error")) {
        if (!j.at("inject_sign_error").is_boolean()) bad("scenario: 'inject_sign_error' must be a boolean");
        s.inject_sign_error = j.at("inject_sign_error").get<bool>();
    }
    if (j.contains("float")) {
        const auto& f = j.at("float");
        if (!f.is_object()) bad("scenario: 'float' must be an object");
        s.float_requested = true;
        if (f.contains("levels")) s.refine_levels = int_field(f, "levels");
        if (f.contains("rule_index")) s.quadrature_index = int_field(f, "rule_index");
        if (s.refine_levels < 2 || s.refine_levels > 6) bad("scenario: refinement levels out of range");
        if (s.quadrature_index < 0 || s.quadrature_index > 4) bad("scenario: rule index out of range");
    }

    if (j.contains("suites")) {
        if (!j.at("suites").is_array()) bad("scenario: 'suites' must be a list");
        if (j.at("suites").empty()) bad("scenario: 'suites' selects nothing");
        std::vector<std::string> names;
        for (const auto& n : j.at("suites")) {
            if (!n.is_string()) bad("scenario: suite names are strings");
            names.push_back(n.get<std::string>());
        }
        s.suites = std::move(names);
    }

    if (j.contains("mesh") && j.contains("mesh_gen")) bad("scenario: give 'mesh' or 'mesh_gen', not both");
    if (j.contains("mesh")) {
        if (!j.at("mesh").is_string()) bad("scenario: 'mesh' is a file path");
        std::filesystem::path p(j.at("mesh").get<std::string>());
        if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
        s.mesh = mesh_from_json(load_json_file(p.string()));
    } else if (j.contains("mesh_gen")) {
        const auto& m = j.at("mesh_gen");
        if (!m.is_object()) bad("scenario: 'mesh_gen' must be an object");
        std::string kind = m.contains("kind") ? m.at("kind").get<std::string>() : "box";
        int dim = m.contains("dim") ? int_field(m, "dim") : s.d;
        if (dim < 2 || dim > 4) bad("scenario: mesh_gen dim must be 2..4");
        if (kind == "box") {
            int sub = m.contains("subdivisions") ? int_field(m, "subdivisions") : 1;
            if (sub < 1 || sub > 16) bad("scenario: subdivisions out of range");
            s.mesh = kuhn_box(dim, sub);
        } else if (kind == "simplex") {
            s.mesh = standard_simplex_mesh(dim);
        } else {
            bad("scenario: unknown mesh kind '" + kind + "'");
        }
    } else {
        s.mesh = kuhn_box(s.d, 1);
    }
    if (s.mesh->ambient_dim() != s.d) bad("scenario: mesh dimension != d");

    const bool discrete = s.mode == "discrete";
    if (j.contains("g")) {
        if (discrete) {
            s.g_cochain = cochain_from_json(j.at("g"), s.mesh);
            if (s.g_cochain->degree() != s.d - s.r - 1) bad("scenario: g cochain degree != d-r-1");
        } else {
            s.g = form_from_json(j.at("g"));
            if (s.g->nvars() != s.d || s.g->degree() != s.d - s.r - 1)
                bad("scenario: g must be a (d-r-1)-form in d variables");
        }
    }
    if (j.contains("alpha")) {
        if (discrete) {
            s.alpha_cochain = cochain_from_json(j.at("alpha"), s.mesh);
            if (s.alpha_cochain->degree() != s.r) bad("scenario: alpha cochain degree != r");
        } else {
            s.alpha = form_from_json(j.at("alpha"));
            if (s.alpha->nvars() != s.d || s.alpha->degree() != s.r)
                bad("scenario: alpha must be an r-form in d variables");
        }
    }
    if (j.contains("g_vec")) s.g_vec = vec3_from_json(j.at("g_vec"), "g_vec");
    if (j.contains("w_vec")) s.w_vec = vec3_from_json(j.at("w_vec"), "w_vec");
    if ((s.mode == "magnetostatics" || s.mode == "crosscheck") && (!s.g_vec || !s.w_vec))
        bad("scenario: " + s.mode + " mode needs 'g_vec' and 'w_vec'");
    if (j.contains("sigma")) {
        s.sigma = traction_from_json(j.at("sigma"));
        if (s.sigma->nvars() != s.d || s.sigma->velocity_degree() != s.r)
            bad("scenario: sigma dimensions do not match (d, r)");
    }
    if (j.contains("b")) {
        s.body = body_force_from_json(j.at("b"));
        if (s.body->nvars() != s.d || s.body->velocity_degree() != s.r)
            bad("scenario: b dimensions do not match (d, r)");
    }
    return s;
}

}  // namespace gec
