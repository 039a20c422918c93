// Command-line front end: mesh generation, identity verification, power
// reports. Exit codes: 0 success, 1 failed checks, 2 bad input.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gec/io.hpp"
#include "gec/meshgen.hpp"
#include "gec/verify.hpp"

namespace {

void emit(const nlohmann::json& doc, const std::string& out_path) {
    std::string text = doc.dump(2);
    text.push_back('\n');
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw gec::InputError("cannot write '" + out_path + "'");
    f << text;
}

int run_mesh(const std::string& kind, int dim, int sub, const std::string& out) {
    gec::ComplexPtr K;
    if (kind == "box")
        K = gec::kuhn_box(dim, sub);
    else if (kind == "simplex")
        K = gec::standard_simplex_mesh(dim);
    else
        throw gec::InputError("unknown mesh kind '" + kind + "'");
    emit(gec::mesh_to_json(K), out);
    return 0;
}

int run_verify(const std::string& scenario_path, const std::string& out,
               std::optional<unsigned long long> seed) {
    gec::Scenario sc = gec::scenario_from_file(scenario_path);
    if (seed) sc.seed = *seed;
    gec::Report rep = gec::run_suites(sc);
    emit(gec::report_to_json(rep), out);
    return rep.all_pass ? 0 : 1;
}

int run_power(const std::string& scenario_path, const std::string& out,
              std::optional<int> refine) {
    gec::Scenario sc = gec::scenario_from_file(scenario_path);
    emit(gec::power_report(sc, refine), out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exterior-calculus stress and electrodynamics toolkit"};
    app.require_subcommand(1);

    auto* mesh = app.add_subcommand("mesh", "generate a simplicial mesh as JSON");
    std::string mesh_kind = "box";
    int mesh_dim = 3;
    int mesh_sub = 1;
    std::string mesh_out;
    mesh->add_option("--kind", mesh_kind, "box or simplex");
    mesh->add_option("--dim", mesh_dim, "ambient dimension")->check(CLI::Range(2, 4));
    mesh->add_option("--sub", mesh_sub, "subdivisions per axis")->check(CLI::Range(1, 16));
    mesh->add_option("--out", mesh_out, "output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "run identity suites from a scenario");
    std::string verify_scenario;
    std::string verify_out;
    std::optional<unsigned long long> verify_seed;
    verify->add_option("--scenario", verify_scenario, "scenario JSON path")->required();
    verify->add_option("--out", verify_out, "report path (default stdout)");
    unsigned long long seed_value = 0;
    auto* seed_opt = verify->add_option("--seed", seed_value, "override the scenario seed");

    auto* power = app.add_subcommand("power", "evaluate power scalars from a scenario");
    std::string power_scenario;
    std::string power_out;
    std::optional<int> power_refine;
    int refine_value = 0;
    power->add_option("--scenario", power_scenario, "scenario JSON path")->required();
    power->add_option("--out", power_out, "report path (default stdout)");
    auto* refine_opt =
        power->add_option("--refine", refine_value, "refinement levels for the float table")
            ->check(CLI::Range(2, 6));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (mesh->parsed()) return run_mesh(mesh_kind, mesh_dim, mesh_sub, mesh_out);
        if (verify->parsed()) {
            if (seed_opt->count() > 0) verify_seed = seed_value;
            return run_verify(verify_scenario, verify_out, verify_seed);
        }
        if (refine_opt->count() > 0) power_refine = refine_value;
        return run_power(power_scenario, power_out, power_refine);
    } catch (const gec::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
