#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gec/electro.hpp"
#include "gec/meshgen.hpp"

using namespace gec;

namespace {

std::mt19937_64 rng(654);

Rat rnd_rat() { return frac((long)(rng() % 9) - 4, 1 + (long)(rng() % 3)); }

Poly rnd_poly(int nvars, int max_deg) {
    Poly p(nvars);
    int terms = 1 + rng() % 3;
    for (int t = 0; t < terms; ++t) {
        Exponents e(nvars, 0);
        int total = rng() % (max_deg + 1);
        for (int i = 0; i < total; ++i) e[rng() % nvars] += 1;
        p += Poly::monomial(nvars, e, rnd_rat());
    }
    return p;
}

PolyForm rnd_form(int nvars, int degree, int max_deg) {
    PolyForm w(nvars, degree);
    for (const auto& axes : increasing_subsets(nvars, degree))
        w.add_term(axes, rnd_poly(nvars, max_deg));
    return w;
}

// g = x dy, alpha = y dz on the unit cube: the worked example threaded
// through every identity below.
PolyForm example_g() {
    PolyForm g(3, 1);
    g.add_term({1}, Poly::variable(3, 0));
    return g;
}

PolyForm example_alpha() {
    PolyForm a(3, 1);
    a.add_term({2}, Poly::variable(3, 1));
    return a;
}

}  // namespace

TEST_CASE("config computes degrees and the boundary parity") {
    ElectroConfig cfg{3, 1};
    CHECK(cfg.maxwell_degree() == 1);
    CHECK(cfg.charge_degree() == 2);
    CHECK(cfg.boundary_sign() == -1);

    ElectroConfig even{4, 1};
    CHECK(even.boundary_sign() == 1);

    ElectroConfig flipped{3, 1, true};
    CHECK(flipped.boundary_sign() == 1);

    ElectroConfig bad{3, 3};
    CHECK_THROWS(bad.validate());
}

TEST_CASE("maxwell traction reproduces the wedge") {
    ElectroConfig cfg{3, 1};
    auto sigma = maxwell_traction(example_g(), cfg);
    PolyForm sv = apply_traction(sigma, example_alpha());
    PolyForm expect(3, 2);
    Exponents xy(3, 0);
    xy[0] = 1;
    xy[1] = 1;
    expect.add_term({1, 2}, Poly::monomial(3, xy, 1));
    CHECK(sv == expect);

    // Degree-0 potentials: plain scalar multiplication.
    ElectroConfig flat{2, 0};
    PolyForm gy(2, 1);
    gy.add_term({1}, Poly::constant(2, 1));
    PolyForm scalar(2, 0);
    scalar.add_term({}, Poly::variable(2, 0));
    PolyForm sv2 = apply_traction(maxwell_traction(gy, flat), scalar);
    PolyForm expect2(2, 1);
    expect2.add_term({1}, Poly::variable(2, 0));
    CHECK(sv2 == expect2);

    // Zero Maxwell form, zero stress.
    PolyForm zg(3, 1);
    CHECK(apply_traction(maxwell_traction(zg, cfg), example_alpha()).is_zero());
}

TEST_CASE("maxwell traction equals the wedge on random fields") {
    for (int trial = 0; trial < 30; ++trial) {
        int d = 3 + (int)(rng() % 2);
        int r = rng() % (d - 1);
        ElectroConfig cfg{d, r};
        PolyForm g = rnd_form(d, cfg.maxwell_degree(), 2);
        PolyForm alpha = rnd_form(d, r, 2);
        CHECK(apply_traction(maxwell_traction(g, cfg), alpha) == wedge(g, alpha));
    }
}

TEST_CASE("field strengths are the exterior derivatives and are closed") {
    ElectroConfig cfg{3, 1};
    auto fs = field_strengths(example_alpha(), example_g(), cfg);

    PolyForm F(3, 2);
    F.add_term({1, 2}, Poly::constant(3, 1));
    PolyForm J(3, 2);
    J.add_term({0, 1}, Poly::constant(3, 1));
    CHECK(fs.faraday == F);
    CHECK(fs.charge_current == J);
    CHECK(fs.faraday_closed);
    CHECK(fs.charge_current_closed);

    // Exact potential: F = d(d(phi)) = 0.
    PolyForm phi(3, 0);
    phi.add_term({}, rnd_poly(3, 3));
    auto fs2 = field_strengths(exterior_derivative(phi), example_g(), cfg);
    CHECK(fs2.faraday.is_zero());

    // Constant-coefficient Maxwell form: no charge-current.
    PolyForm cg(3, 1);
    cg.add_term({1}, Poly::constant(3, frac(5, 3)));
    auto fs3 = field_strengths(example_alpha(), cg, cfg);
    CHECK(fs3.charge_current.is_zero());
    CHECK(fs3.charge_current_closed);
}

TEST_CASE("closure holds for every random pair") {
    for (int trial = 0; trial < 20; ++trial) {
        int d = 3 + (int)(rng() % 2);
        int r = rng() % (d - 1);
        ElectroConfig cfg{d, r};
        auto fs = field_strengths(rnd_form(d, r, 3), rnd_form(d, cfg.maxwell_degree(), 3), cfg);
        CHECK(fs.faraday_closed);
        CHECK(fs.charge_current_closed);
    }
}

TEST_CASE("power chain on the worked example") {
    ElectroConfig cfg{3, 1};
    auto cube = kuhn_box(3, 1);
    auto rec = power_chain_identity(cube, example_g(), example_alpha(), cfg);
    Rat half = frac(1, 2);
    CHECK(rec.boundary_power == half);
    CHECK(rec.bulk_power == half);
    CHECK(rec.split_sum == half);
    CHECK(rec.charge_term == half);
    CHECK(rec.field_term == Rat(0));
    CHECK(rec.sign == -1);
    CHECK(rec.consistent);
}

TEST_CASE("power chain vanishes when either field is zero") {
    ElectroConfig cfg{3, 1};
    auto cube = kuhn_box(3, 1);
    PolyForm zero(3, 1);
    auto rec = power_chain_identity(cube, zero, example_alpha(), cfg);
    CHECK(rec.boundary_power == Rat(0));
    CHECK(rec.bulk_power == Rat(0));
    CHECK(rec.split_sum == Rat(0));
    CHECK(rec.consistent);
}

TEST_CASE("power chain on random fields across dimensions") {
    for (int trial = 0; trial < 12; ++trial) {
        int d = 3 + (int)(rng() % 2);
        int r = rng() % (d - 1);
        ElectroConfig cfg{d, r};
        auto box = kuhn_box(d, 1);
        auto rec = power_chain_identity(box, rnd_form(d, cfg.maxwell_degree(), 2),
                                        rnd_form(d, r, 2), cfg);
        CHECK(rec.consistent);
        CHECK(rec.boundary_power == rec.bulk_power);
        CHECK(rec.bulk_power == rec.split_sum);
    }
}

TEST_CASE("a flipped parity breaks the chain when the field term is live") {
    // alpha = z dx makes g ^ d(alpha) = x dV, so the sign actually matters.
    PolyForm alpha(3, 1);
    alpha.add_term({0}, Poly::variable(3, 2));
    auto cube = kuhn_box(3, 1);

    ElectroConfig honest{3, 1};
    auto good = power_chain_identity(cube, example_g(), alpha, honest);
    CHECK(good.consistent);
    CHECK(good.boundary_power == frac(-1, 2));

    ElectroConfig flipped{3, 1, true};
    auto bad = power_chain_identity(cube, example_g(), alpha, flipped);
    CHECK_FALSE(bad.consistent);
}

TEST_CASE("discrete power chain via the cup product") {
    auto cube = kuhn_box(3, 1);
    ElectroConfig cfg{3, 1};
    for (int trial = 0; trial < 10; ++trial) {
        Cochain g(cube, 1), alpha(cube, 1);
        for (const auto& s : cube->simplices(1)) {
            g.set(s, rnd_rat());
            alpha.set(s, rnd_rat());
        }
        auto rec = power_chain_identity_discrete(cube, g, alpha, cfg);
        CHECK(rec.consistent);
        CHECK(rec.boundary_power == rec.bulk_power);
        CHECK(rec.bulk_power == rec.split_sum);
    }
}

TEST_CASE("variational split on the worked example") {
    ElectroConfig cfg{3, 1};
    auto split = variational_split(example_g(), example_alpha(), cfg);

    PolyForm S0(3, 3);
    S0.add_term({0, 1, 2}, Poly::variable(3, 1));
    CHECK(split.value_part == S0);
    CHECK(split.gradient_part.is_zero());

    PolyForm sum = split.value_part + split.gradient_part;
    CHECK(sum == exterior_derivative(wedge(example_g(), example_alpha())));
}

TEST_CASE("variational split degenerate cases") {
    ElectroConfig cfg{3, 1};
    PolyForm cg(3, 1);
    cg.add_term({1}, Poly::constant(3, 2));
    auto s1 = variational_split(cg, example_alpha(), cfg);
    CHECK(s1.value_part.is_zero());

    PolyForm closed(3, 1);
    closed.add_term({0}, Poly::constant(3, 3));
    auto s2 = variational_split(example_g(), closed, cfg);
    CHECK(s2.gradient_part.is_zero());
}

TEST_CASE("split sums to the exact differential on random fields") {
    for (int trial = 0; trial < 50; ++trial) {
        int d = 3 + (int)(rng() % 2);
        int r = rng() % (d - 1);
        ElectroConfig cfg{d, r};
        PolyForm g = rnd_form(d, cfg.maxwell_degree(), 3);
        PolyForm alpha = rnd_form(d, r, 3);
        auto split = variational_split(g, alpha, cfg);
        CHECK(split.value_part + split.gradient_part ==
              exterior_derivative(wedge(g, alpha)));

        // The term-list operator computes the same density.
        auto S = electro_variational_stress(g, cfg);
        CHECK(S.apply(alpha) == split.value_part + split.gradient_part);
    }
}

TEST_CASE("total power matches the worked example and the stress route") {
    ElectroConfig cfg{3, 1};
    auto cube = kuhn_box(3, 1);
    CHECK(total_power(cube, example_g(), example_alpha(), cfg) == frac(1, 2));

    PolyForm zero(3, 1);
    CHECK(total_power(cube, example_g(), zero, cfg) == Rat(0));

    for (int trial = 0; trial < 30; ++trial) {
        int d = 3 + (int)(rng() % 2);
        int r = rng() % (d - 1);
        ElectroConfig cfg2{d, r};
        auto box = kuhn_box(d, 1);
        PolyForm g = rnd_form(d, cfg2.maxwell_degree(), 2);
        PolyForm alpha = rnd_form(d, r, 2);
        BodyForceField nobody(d, r);
        Rat via_stress = power_boundary_form(box, nobody, maxwell_traction(g, cfg2), alpha);
        CHECK(total_power(box, g, alpha, cfg2) == via_stress);
    }
}
