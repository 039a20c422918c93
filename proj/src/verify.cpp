#include "gec/verify.hpp"

#include <functional>
#include <random>

#include "gec/currents.hpp"
#include "gec/magnetostatics.hpp"
#include "gec/meshgen.hpp"
#include "gec/numform.hpp"

namespace gec {

namespace {

class Rng {
  public:
    explicit Rng(unsigned long long seed) : engine_(seed) {}

    // Inclusive bounds.
    int range(int lo, int hi) { return lo + (int)(engine_() % (unsigned long long)(hi - lo + 1)); }

    Rat rat() { return frac(range(-4, 4), range(1, 3)); }

    Rat nonzero_rat() {
        Rat v = rat();
        return v == 0 ? Rat(1) : v;
    }

    Poly poly(int nvars, int max_deg) {
        Poly p(nvars);
        int terms = range(1, 3);
        for (int t = 0; t < terms; ++t) {
            Exponents e(nvars, 0);
            int total = range(0, max_deg);
            for (int i = 0; i < total; ++i) e[range(0, nvars - 1)] += 1;
            p += Poly::monomial(nvars, e, rat());
        }
        return p;
    }

    PolyForm form(int nvars, int degree, int max_deg) {
        PolyForm w(nvars, degree);
        for (const auto& axes : increasing_subsets(nvars, degree)) w.add_term(axes, poly(nvars, max_deg));
        return w;
    }

    // Random sub-selection of a Kuhn box: still closed under faces, possibly
    // with boundary in the interior. Top count stays well under 200.
    ComplexPtr complex(int d) {
        int sub = d == 2 ? range(1, 4) : d == 3 ? range(1, 2) : 1;
        auto box = kuhn_box(d, sub);
        const auto& tops = box->top_simplices();
        std::vector<VertexList> kept;
        for (const auto& s : tops)
            if (range(0, 3) > 0) kept.push_back(s.vertices);
        if (kept.empty()) kept.push_back(tops[0].vertices);
        return SimplicialComplex::build(d, box->vertex_coords(), kept);
    }

    Chain chain(const ComplexPtr& K, int degree) {
        Chain c(K, degree);
        for (const auto& s : K->simplices(degree))
            if (range(0, 1)) c.add_canonical(s, rat());
        return c;
    }

    Cochain cochain(const ComplexPtr& K, int degree) {
        Cochain w(K, degree);
        for (const auto& s : K->simplices(degree))
            if (range(0, 1)) w.set(s, rat());
        return w;
    }

    AffineMap affine(int src, int tgt) {
        AffineMap f;
        f.src_dim = src;
        f.tgt_dim = tgt;
        for (int i = 0; i < tgt; ++i) f.origin.push_back(rat());
        for (int j = 0; j < src; ++j) {
            Point col;
            for (int i = 0; i < tgt; ++i) col.push_back(rat());
            f.dirs.push_back(std::move(col));
        }
        return f;
    }

    AffineMap invertible_affine(int n) {
        while (true) {
            AffineMap f = affine(n, n);
            std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m[i][j] = f.dirs[j][i];
            if (determinant(m) != 0) return f;
        }
    }

  private:
    std::mt19937_64 engine_;
};

std::string shortest(double x) { return nlohmann::json(x).dump(); }

void add_check(SuiteResult& s, std::string id, std::string left, std::string right, bool pass) {
    s.checks.push_back({std::move(id), std::move(left), std::move(right), pass});
    if (pass)
        ++s.passed;
    else
        ++s.failed;
}

void add_value(SuiteResult& s, const std::string& id, const Rat& got, const Rat& want) {
    add_check(s, id, rat_to_string(got), rat_to_string(want), got == want);
}

// Aggregate record for a randomized sweep: left = violations observed.
void add_sweep(SuiteResult& s, const std::string& id, int violations) {
    add_check(s, id, std::to_string(violations), "0", violations == 0);
}

PolyForm worked_g() {
    PolyForm g(3, 1);
    g.add_term({1}, Poly::variable(3, 0));
    return g;
}

PolyForm worked_alpha() {
    PolyForm a(3, 1);
    a.add_term({2}, Poly::variable(3, 1));
    return a;
}

// ---- suites ----------------------------------------------------------

SuiteResult suite_exactness(const Scenario&, Rng& rng) {
    SuiteResult s{"exactness"};
    for (int d = 2; d <= 4; ++d) {
        auto K = rng.complex(d);
        for (int k = 2; k <= K->top_dim(); ++k) {
            int violations = 0;
            for (int trial = 0; trial < 100; ++trial)
                if (!boundary_chain(boundary_chain(rng.chain(K, k))).is_zero()) ++violations;
            add_sweep(s, "boundary_twice/d" + std::to_string(d) + "/deg" + std::to_string(k),
                      violations);
        }
        for (int k = 0; k + 2 <= K->top_dim(); ++k) {
            int violations = 0;
            for (int trial = 0; trial < 100; ++trial)
                if (!coboundary(coboundary(rng.cochain(K, k))).is_zero()) ++violations;
            add_sweep(s, "coboundary_twice/d" + std::to_string(d) + "/deg" + std::to_string(k),
                      violations);
        }
    }
    return s;
}

SuiteResult suite_stokes(const Scenario&, Rng& rng) {
    SuiteResult s{"stokes"};
    int violations = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int d = rng.range(2, 4);
        auto K = rng.complex(d);
        int k = rng.range(0, K->top_dim() - 1);
        Cochain w = rng.cochain(K, k);
        Chain c = rng.chain(K, k + 1);
        if (pair_chain(coboundary(w), c) != pair_chain(w, boundary_chain(c))) ++violations;
    }
    add_sweep(s, "pairing_adjoint/random_200", violations);
    return s;
}

SuiteResult suite_cup_leibniz(const Scenario&, Rng& rng) {
    SuiteResult s{"cup_leibniz"};
    int violations = 0;
    for (int trial = 0; trial < 100; ++trial) {
        int d = rng.range(2, 4);
        auto K = rng.complex(d);
        int p = rng.range(0, K->top_dim() - 1);
        int q = rng.range(0, K->top_dim() - 1 - p);
        Cochain a = rng.cochain(K, p);
        Cochain b = rng.cochain(K, q);
        Cochain rhs = cup(coboundary(a), b);
        Cochain mixed = cup(a, coboundary(b));
        if (p % 2 == 1) mixed *= Rat(-1);
        rhs += mixed;
        if (!(coboundary(cup(a, b)) == rhs)) ++violations;
    }
    add_sweep(s, "coboundary_of_cup/random_100", violations);
    return s;
}

SuiteResult suite_smooth_algebra(const Scenario&, Rng& rng) {
    SuiteResult s{"smooth_algebra"};

    int comm = 0, assoc = 0, leibniz = 0, pull_wedge = 0, pull_d = 0, natural = 0;
    for (int trial = 0; trial < 50; ++trial) {
        int n = rng.range(2, 4);
        int p = rng.range(0, n);
        int q = rng.range(0, n);
        PolyForm a = rng.form(n, p, 3);
        PolyForm b = rng.form(n, q, 3);

        PolyForm flipped = wedge(b, a);
        if ((p * q) % 2 == 1) flipped *= Rat(-1);
        if (!(wedge(a, b) == flipped)) ++comm;

        PolyForm c = rng.form(n, rng.range(0, 2), 2);
        if (!(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)))) ++assoc;

        PolyForm lhs = exterior_derivative(wedge(a, b));
        PolyForm rhs = wedge(exterior_derivative(a), b);
        PolyForm mixed = wedge(a, exterior_derivative(b));
        if (p % 2 == 1) mixed *= Rat(-1);
        rhs += mixed;
        if (!(lhs == rhs)) ++leibniz;

        int k = rng.range(1, n);
        AffineMap f = rng.affine(k, n);
        if (!(pullback(wedge(a, b), f) == wedge(pullback(a, f), pullback(b, f)))) ++pull_wedge;
        if (!(pullback(exterior_derivative(a), f) == exterior_derivative(pullback(a, f)))) ++pull_d;

        int d = rng.range(2, 3);
        auto K = kuhn_box(d, 1);
        int deg = rng.range(0, d - 1);
        PolyForm w = rng.form(d, deg, 3);
        if (!(de_rham(exterior_derivative(w), K) == coboundary(de_rham(w, K)))) ++natural;
    }
    add_sweep(s, "wedge_graded_commutativity/random_50", comm);
    add_sweep(s, "wedge_associativity/random_50", assoc);
    add_sweep(s, "derivative_leibniz/random_50", leibniz);
    add_sweep(s, "pullback_of_wedge/random_50", pull_wedge);
    add_sweep(s, "pullback_of_derivative/random_50", pull_d);
    add_sweep(s, "integration_naturality/random_50", natural);
    return s;
}

SuiteResult suite_em_chain(const Scenario& sc, Rng& rng) {
    SuiteResult s{"em_chain"};
    const bool flip = sc.inject_sign_error;

    ElectroConfig worked{3, 1, flip};
    auto cube = kuhn_box(3, 1);
    auto rec = power_chain_identity(cube, worked_g(), worked_alpha(), worked);
    add_value(s, "worked_example/boundary", rec.boundary_power, frac(1, 2));
    add_value(s, "worked_example/bulk", rec.bulk_power, frac(1, 2));
    add_value(s, "worked_example/split", rec.split_sum, frac(1, 2));
    add_value(s, "worked_example/charge_term", rec.charge_term, frac(1, 2));
    add_value(s, "worked_example/field_term", rec.field_term, Rat(0));

    for (int d = 3; d <= 4; ++d) {
        auto box = kuhn_box(d, 1);
        for (int r = 0; r <= d - 2; ++r) {
            ElectroConfig cfg{d, r, flip};
            int violations = 0;
            for (int trial = 0; trial < 30; ++trial) {
                PolyForm g = rng.form(d, cfg.maxwell_degree(), 2);
                PolyForm alpha = rng.form(d, r, 2);
                auto rc = power_chain_identity(box, g, alpha, cfg);
                if (!rc.consistent) ++violations;
            }
            add_sweep(s, "three_way_equality/d" + std::to_string(d) + "_r" + std::to_string(r),
                      violations);
        }
    }

    {
        ElectroConfig cfg{3, 1, flip};
        int violations = 0;
        for (int trial = 0; trial < 10; ++trial) {
            Cochain g = rng.cochain(cube, 1);
            Cochain alpha = rng.cochain(cube, 1);
            if (!power_chain_identity_discrete(cube, g, alpha, cfg).consistent) ++violations;
        }
        add_sweep(s, "three_way_equality/discrete_cup", violations);
    }

    if (sc.mode == "smooth" && sc.g && sc.alpha) {
        ElectroConfig cfg{sc.d, sc.r, flip};
        auto rc = power_chain_identity(sc.mesh, *sc.g, *sc.alpha, cfg);
        add_value(s, "scenario_fields/boundary_equals_bulk", rc.boundary_power, rc.bulk_power);
        add_value(s, "scenario_fields/bulk_equals_split", rc.bulk_power, rc.split_sum);
    }
    if (sc.mode == "discrete" && sc.g_cochain && sc.alpha_cochain) {
        ElectroConfig cfg{sc.d, sc.r, flip};
        auto rc = power_chain_identity_discrete(sc.mesh, *sc.g_cochain, *sc.alpha_cochain, cfg);
        add_value(s, "scenario_fields/boundary_equals_bulk", rc.boundary_power, rc.bulk_power);
        add_value(s, "scenario_fields/bulk_equals_split", rc.bulk_power, rc.split_sum);
    }
    return s;
}

SuiteResult suite_maxwell_closure(const Scenario&, Rng& rng) {
    SuiteResult s{"maxwell_closure"};
    for (int d = 3; d <= 4; ++d) {
        for (int r = 0; r <= d - 2; ++r) {
            ElectroConfig cfg{d, r};
            int violations = 0;
            for (int trial = 0; trial < 30; ++trial) {
                auto fs = field_strengths(rng.form(d, r, 3), rng.form(d, cfg.maxwell_degree(), 3), cfg);
                if (!fs.faraday_closed || !fs.charge_current_closed) ++violations;
            }
            add_sweep(s, "closed_strengths/d" + std::to_string(d) + "_r" + std::to_string(r),
                      violations);
        }
    }
    return s;
}

SuiteResult suite_decomposition(const Scenario& sc, Rng& rng) {
    SuiteResult s{"decomposition"};
    const bool flip = sc.inject_sign_error;

    ElectroConfig worked{3, 1, flip};
    auto split = variational_split(worked_g(), worked_alpha(), worked);
    PolyForm S0(3, 3);
    S0.add_term({0, 1, 2}, Poly::variable(3, 1));
    add_check(s, "worked_example/value_part", split.value_part == S0 ? "J^alpha" : "mismatch",
              "J^alpha", split.value_part == S0);
    add_check(s, "worked_example/gradient_part",
              split.gradient_part.is_zero() ? "0" : "nonzero", "0", split.gradient_part.is_zero());

    int violations = 0;
    for (int trial = 0; trial < 50; ++trial) {
        int d = rng.range(3, 4);
        int r = rng.range(0, d - 2);
        ElectroConfig cfg{d, r, flip};
        PolyForm g = rng.form(d, cfg.maxwell_degree(), 3);
        PolyForm alpha = rng.form(d, r, 3);
        auto sp = variational_split(g, alpha, cfg);
        PolyForm sum = sp.value_part + sp.gradient_part;
        PolyForm sigma_alpha = apply_traction(maxwell_traction(g, cfg), alpha);
        if (!(sum == exterior_derivative(sigma_alpha))) ++violations;
        if (!(electro_variational_stress(g, cfg).apply(alpha) == sum)) ++violations;
    }
    add_sweep(s, "split_sums_to_differential/random_50", violations);
    return s;
}

SuiteResult suite_currents(const Scenario& sc, Rng& rng) {
    SuiteResult s{"currents"};
    const bool flip = sc.inject_sign_error;

    {
        ElectroConfig cfg{3, 1, flip};
        auto cube = kuhn_box(3, 1);
        auto rep = force_functional_identity(cube, worked_g(), {worked_alpha()}, cfg);
        add_value(s, "worked_example/direct", rep.cases[0].direct_power, frac(1, 2));
        add_value(s, "worked_example/boundary_contract", rep.cases[0].boundary_contract, frac(1, 2));
        add_value(s, "worked_example/split_contract", rep.cases[0].split_contract, frac(1, 2));
    }

    for (int d = 3; d <= 4; ++d) {
        auto box = kuhn_box(d, 1);
        for (int r = 0; r <= d - 2; ++r) {
            ElectroConfig cfg{d, r, flip};
            PolyForm g = rng.form(d, cfg.maxwell_degree(), 2);
            auto basis = monomial_form_basis(d, r, sc.test_degree);
            auto rep = force_functional_identity(box, g, basis, cfg);
            int violations = 0;
            for (const auto& c : rep.cases)
                if (!c.consistent) ++violations;
            add_sweep(s, "three_realizations/d" + std::to_string(d) + "_r" + std::to_string(r) +
                             "_basis" + std::to_string(basis.size()),
                      violations);
        }
    }
    return s;
}

SuiteResult suite_magnetostatics(const Scenario& sc, Rng& rng) {
    SuiteResult s{"magnetostatics"};
    auto cube = kuhn_box(3, 1);

    auto rnd_vec = [&rng] {
        return PolyVectorField({rng.poly(3, 3), rng.poly(3, 3), rng.poly(3, 3)});
    };

    {
        PolyVectorField g({Poly(3), Poly(3), Poly::variable(3, 0)});
        PolyVectorField w({Poly(3), Poly::variable(3, 1), Poly(3)});
        auto rec = power_magneto(cube, g, w);
        add_value(s, "worked_example/surface", rec.surface_power, frac(-1, 2));
        add_value(s, "worked_example/divergence", rec.divergence_power, frac(-1, 2));
        add_value(s, "worked_example/split", rec.split_power, frac(-1, 2));
    }

    int violations = 0;
    for (int trial = 0; trial < 30; ++trial)
        if (!power_magneto(cube, rnd_vec(), rnd_vec()).consistent) ++violations;
    add_sweep(s, "three_expressions/random_30", violations);

    int axial_violations = 0;
    for (int trial = 0; trial < 20; ++trial) {
        auto sigma = SkewStressField::from_upper(rng.poly(3, 3), rng.poly(3, 3), rng.poly(3, 3));
        auto g = axial_vector(sigma);
        PolyVectorField w = rnd_vec();
        auto lhs = transpose_apply(sigma, w);
        auto rhs = cross(g, w);
        for (int i = 0; i < 3; ++i)
            if (!(lhs.comp[i] == rhs.comp[i])) ++axial_violations;
    }
    add_sweep(s, "axial_law/random_20", axial_violations);

    if (sc.mode == "magnetostatics" && sc.g_vec && sc.w_vec) {
        auto rec = power_magneto(sc.mesh, PolyVectorField(*sc.g_vec), PolyVectorField(*sc.w_vec));
        add_value(s, "scenario_fields/surface_equals_divergence", rec.surface_power,
                  rec.divergence_power);
        add_value(s, "scenario_fields/divergence_equals_split", rec.divergence_power,
                  rec.split_power);
    }
    return s;
}

SuiteResult suite_crosscheck(const Scenario& sc, Rng& rng) {
    SuiteResult s{"crosscheck"};
    auto cube = kuhn_box(3, 1);

    auto rnd_vec = [&rng] {
        return PolyVectorField({rng.poly(3, 2), rng.poly(3, 2), rng.poly(3, 2)});
    };

    {
        PolyVectorField g({Poly(3), Poly(3), Poly::variable(3, 0)});
        PolyVectorField w({Poly(3), Poly::variable(3, 1), Poly(3)});
        auto rec = crosscheck_with_forms(cube, g, w);
        add_value(s, "worked_example/pipelines_agree", rec.electro_total,
                  rec.classical.surface_power);
        add_check(s, "worked_example/strengths_match_curls",
                  rec.faraday_matches_curl && rec.charge_matches_curl ? "match" : "mismatch",
                  "match", rec.faraday_matches_curl && rec.charge_matches_curl);
    }

    int violations = 0;
    for (int trial = 0; trial < 30; ++trial) {
        auto rec = crosscheck_with_forms(cube, rnd_vec(), rnd_vec());
        if (!rec.powers_match || !rec.faraday_matches_curl || !rec.charge_matches_curl)
            ++violations;
    }
    add_sweep(s, "classical_vs_exterior/random_30", violations);

    if (sc.mode == "crosscheck" && sc.g_vec && sc.w_vec) {
        auto rec = crosscheck_with_forms(sc.mesh, PolyVectorField(*sc.g_vec),
                                         PolyVectorField(*sc.w_vec));
        add_value(s, "scenario_fields/pipelines_agree", rec.electro_total,
                  rec.classical.surface_power);
    }
    return s;
}

SuiteResult suite_affine_invariance(const Scenario& sc, Rng& rng) {
    SuiteResult s{"affine_invariance"};

    const int d = (sc.mode == "smooth" && sc.g && sc.alpha) ? sc.d : 3;
    const int r = (sc.mode == "smooth" && sc.g && sc.alpha) ? sc.r : 1;
    ElectroConfig cfg{d, r};
    ComplexPtr base = (sc.mode == "smooth" && sc.g && sc.alpha) ? sc.mesh : kuhn_box(3, 1);
    PolyForm g = (sc.mode == "smooth" && sc.g) ? *sc.g : worked_g();
    PolyForm alpha = (sc.mode == "smooth" && sc.alpha) ? *sc.alpha : worked_alpha();

    auto reference = power_chain_identity(base, g, alpha, cfg);

    auto transformed_matches = [&](const AffineMap& map) {
        AffineMap inv = map.inverse();
        std::vector<Point> coords;
        for (const auto& pt : base->vertex_coords()) coords.push_back(map.apply(pt));
        auto moved = SimplicialComplex::build_signed(d, std::move(coords), base->top_simplices(),
                                                     base->top_dim());
        auto rec = power_chain_identity(moved, pullback(g, inv), pullback(alpha, inv), cfg);
        return rec.consistent && rec.boundary_power == reference.boundary_power &&
               rec.bulk_power == reference.bulk_power && rec.split_sum == reference.split_sum &&
               rec.charge_term == reference.charge_term && rec.field_term == reference.field_term;
    };

    int violations = 0;
    for (int trial = 0; trial < 10; ++trial)
        if (!transformed_matches(rng.invertible_affine(d))) ++violations;
    add_sweep(s, "power_scalars_invariant/random_10", violations);

    // Orientation-reversing change: minors and boundary orientations flip
    // together, so the scalars still match.
    AffineMap mirror = AffineMap::identity(d);
    mirror.dirs[0][0] = Rat(-1);
    add_check(s, "power_scalars_invariant/reflection", transformed_matches(mirror) ? "equal" : "drift",
              "equal", transformed_matches(mirror));
    return s;
}

SuiteResult suite_convergence(const Scenario& sc, Rng&) {
    SuiteResult s{"convergence"};
    ElectroConfig cfg{3, 1, sc.inject_sign_error};
    auto report = convergence_study(builtin_trig_bundle(), cfg.boundary_sign(), sc.refine_levels,
                                    sc.quadrature_index);
    for (const auto& row : report.rows)
        add_check(s, "gap/sub" + std::to_string(row.subdivisions), shortest(row.gap), "", true);
    for (std::size_t i = 0; i < report.orders.size(); ++i)
        add_check(s, "order/step" + std::to_string(i + 1), shortest(report.orders[i]), ">=1",
                  report.orders[i] >= 1.0);
    return s;
}

using SuiteFn = std::function<SuiteResult(const Scenario&, Rng&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"exactness", suite_exactness},
        {"stokes", suite_stokes},
        {"cup_leibniz", suite_cup_leibniz},
        {"smooth_algebra", suite_smooth_algebra},
        {"em_chain", suite_em_chain},
        {"maxwell_closure", suite_maxwell_closure},
        {"decomposition", suite_decomposition},
        {"currents", suite_currents},
        {"magnetostatics", suite_magnetostatics},
        {"crosscheck", suite_crosscheck},
        {"affine_invariance", suite_affine_invariance},
        {"convergence", suite_convergence},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& all_suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suite_table()) out.push_back(name);
        return out;
    }();
    return names;
}

Report run_suites(const Scenario& sc) {
    std::vector<std::string> selection = sc.suites ? *sc.suites : all_suite_names();
    if (selection.empty()) throw InputError("scenario selects no suites");

    Report rep;
    rep.seed = sc.seed;
    for (const auto& name : selection) {
        const SuiteFn* fn = nullptr;
        std::size_t index = 0;
        for (std::size_t i = 0; i < suite_table().size(); ++i) {
            if (suite_table()[i].first == name) {
                fn = &suite_table()[i].second;
                index = i;
                break;
            }
        }
        if (!fn) throw InputError("unknown suite '" + name + "'");
        // Per-suite stream, independent of which other suites run.
        Rng rng(sc.seed * 1000003ULL + index);
        SuiteResult result = (*fn)(sc, rng);
        rep.all_pass = rep.all_pass && result.failed == 0;
        rep.suites.push_back(std::move(result));
    }
    return rep;
}

nlohmann::json report_to_json(const Report& r) {
    nlohmann::json suites = nlohmann::json::array();
    int passed = 0, failed = 0;
    for (const auto& s : r.suites) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : s.checks)
            checks.push_back({{"id", c.id}, {"left", c.left}, {"right", c.right}, {"pass", c.pass}});
        suites.push_back(
            {{"name", s.name}, {"checks", checks}, {"passed", s.passed}, {"failed", s.failed}});
        passed += s.passed;
        failed += s.failed;
    }
    return {{"seed", r.seed},
            {"suites", suites},
            {"summary",
             {{"all_pass", r.all_pass}, {"checks_passed", passed}, {"checks_failed", failed}}}};
}

nlohmann::json power_report(const Scenario& sc, std::optional<int> refine_override) {
    nlohmann::json out;
    out["mode"] = sc.mode;
    ElectroConfig cfg{sc.d, sc.r, sc.inject_sign_error};

    if (sc.mode == "smooth") {
        if (!sc.g || !sc.alpha) throw InputError("power: smooth scenario needs 'g' and 'alpha'");
        auto rec = power_chain_identity(sc.mesh, *sc.g, *sc.alpha, cfg);
        out["power"] = {{"boundary", rat_to_string(rec.boundary_power)},
                        {"bulk", rat_to_string(rec.bulk_power)},
                        {"split", rat_to_string(rec.split_sum)},
                        {"charge_term", rat_to_string(rec.charge_term)},
                        {"field_term", rat_to_string(rec.field_term)},
                        {"sign", rec.sign},
                        {"consistent", rec.consistent}};
        Current boundary_form = Current::from_chain(region_chain(sc.mesh)).boundary().contract(*sc.g);
        out["power"]["current_form"] = rat_to_string(boundary_form.evaluate(*sc.alpha));
        if (sc.sigma || sc.body) {
            TractionStressField sigma = sc.sigma ? *sc.sigma : TractionStressField(sc.d, sc.r);
            BodyForceField b = sc.body ? *sc.body : BodyForceField(sc.d, sc.r);
            out["stress_power"] = {
                {"boundary", rat_to_string(power_boundary_form(sc.mesh, b, sigma, *sc.alpha))},
                {"bulk", rat_to_string(power_bulk_form(sc.mesh, b, sigma, *sc.alpha))}};
        }
    } else if (sc.mode == "discrete") {
        if (!sc.g_cochain || !sc.alpha_cochain)
            throw InputError("power: discrete scenario needs 'g' and 'alpha' cochains");
        auto rec = power_chain_identity_discrete(sc.mesh, *sc.g_cochain, *sc.alpha_cochain, cfg);
        out["power"] = {{"boundary", rat_to_string(rec.boundary_power)},
                        {"bulk", rat_to_string(rec.bulk_power)},
                        {"split", rat_to_string(rec.split_sum)},
                        {"sign", rec.sign},
                        {"consistent", rec.consistent}};
    } else if (sc.mode == "magnetostatics") {
        auto rec = power_magneto(sc.mesh, PolyVectorField(*sc.g_vec), PolyVectorField(*sc.w_vec));
        out["power"] = {{"surface", rat_to_string(rec.surface_power)},
                        {"divergence", rat_to_string(rec.divergence_power)},
                        {"split", rat_to_string(rec.split_power)},
                        {"consistent", rec.consistent}};
    } else {
        auto rec = crosscheck_with_forms(sc.mesh, PolyVectorField(*sc.g_vec),
                                         PolyVectorField(*sc.w_vec));
        out["power"] = {{"exterior_total", rat_to_string(rec.electro_total)},
                        {"surface", rat_to_string(rec.classical.surface_power)},
                        {"divergence", rat_to_string(rec.classical.divergence_power)},
                        {"split", rat_to_string(rec.classical.split_power)},
                        {"powers_match", rec.powers_match},
                        {"faraday_matches_curl", rec.faraday_matches_curl},
                        {"charge_matches_curl", rec.charge_matches_curl}};
    }

    if (sc.float_requested || refine_override) {
        int levels = refine_override ? *refine_override : sc.refine_levels;
        if (levels < 2 || levels > 6) throw InputError("power: refinement levels out of range");
        auto study = convergence_study(builtin_trig_bundle(), cfg.boundary_sign(), levels,
                                       sc.quadrature_index);
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : study.rows)
            rows.push_back({{"subdivisions", row.subdivisions},
                            {"boundary", row.boundary},
                            {"bulk", row.bulk},
                            {"gap", row.gap}});
        out["convergence"] = {{"rows", rows}, {"orders", study.orders},
                              {"first_order", study.first_order}};
    }
    return out;
}

}  // namespace gec
