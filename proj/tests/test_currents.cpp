#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gec/currents.hpp"
#include "gec/meshgen.hpp"

using namespace gec;

namespace {

std::mt19937_64 rng(987);

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

PolyForm basis_form(int nvars, AxisList axes, Poly coeff) {
    PolyForm w(nvars, (int)axes.size());
    w.add_term(std::move(axes), std::move(coeff));
    return w;
}

PolyForm example_g() { return basis_form(3, {1}, Poly::variable(3, 0)); }
PolyForm example_alpha() { return basis_form(3, {2}, Poly::variable(3, 1)); }

}  // namespace

TEST_CASE("a chain current integrates its argument") {
    auto cube = kuhn_box(3, 1);
    Current R = Current::from_chain(region_chain(cube));
    CHECK(R.degree() == 3);

    PolyForm xvol = basis_form(3, {0, 1, 2}, Poly::variable(3, 0));
    CHECK(R.evaluate(xvol) == frac(1, 2));
    CHECK(R.evaluate(xvol) == integrate_over_chain(xvol, region_chain(cube)));

    Chain none(cube, 3);
    CHECK(Current::from_chain(none).evaluate(xvol) == Rat(0));
}

TEST_CASE("evaluation is linear in the argument") {
    auto cube = kuhn_box(3, 1);
    Current R = Current::from_chain(region_chain(cube));
    for (int trial = 0; trial < 20; ++trial) {
        PolyForm a = rnd_form(3, 3, 3);
        PolyForm b = rnd_form(3, 3, 3);
        Rat s = rnd_rat();
        PolyForm combo = a;
        combo *= s;
        combo += b;
        CHECK(R.evaluate(combo) == s * R.evaluate(a) + R.evaluate(b));
    }
}

TEST_CASE("boundary current pairs with the boundary chain") {
    auto cube = kuhn_box(3, 1);
    Chain region = region_chain(cube);
    Current dR = Current::from_chain(region).boundary();
    CHECK(dR.degree() == 2);
    for (int trial = 0; trial < 10; ++trial) {
        PolyForm psi = rnd_form(3, 2, 3);
        CHECK(dR.evaluate(psi) == integrate_over_chain(psi, boundary_chain(region)));
        // Definition: dT(psi) = T(d psi).
        CHECK(dR.evaluate(psi) == Current::from_chain(region).evaluate(exterior_derivative(psi)));
    }
}

TEST_CASE("the boundary of a boundary is the zero functional") {
    auto cube = kuhn_box(3, 1);
    Current ddR = Current::from_chain(region_chain(cube)).boundary().boundary();
    for (int trial = 0; trial < 10; ++trial)
        CHECK(ddR.evaluate(rnd_form(3, 1, 3)) == Rat(0));

    // Same after a contraction, where the boundary differentiates the
    // argument instead of folding into the chain.
    Current T = Current::from_chain(region_chain(cube)).contract(rnd_form(3, 1, 2));
    Current ddT = T.boundary().boundary();
    for (int trial = 0; trial < 10; ++trial)
        CHECK(ddT.evaluate(rnd_form(3, 0, 3)) == Rat(0));
}

TEST_CASE("boundary relates the wedge to its differential") {
    auto cube = kuhn_box(3, 1);
    Chain region = region_chain(cube);
    Current R = Current::from_chain(region);
    Current dR = R.boundary();
    for (int trial = 0; trial < 10; ++trial) {
        PolyForm g = rnd_form(3, 1, 3);
        PolyForm alpha = rnd_form(3, 1, 3);
        CHECK(dR.evaluate(wedge(g, alpha)) == R.evaluate(exterior_derivative(wedge(g, alpha))));
    }
}

TEST_CASE("contraction wedges from the left") {
    auto cube = kuhn_box(3, 1);
    Current R = Current::from_chain(region_chain(cube));

    PolyForm dxdy = basis_form(3, {0, 1}, Poly::constant(3, 1));
    PolyForm dz = basis_form(3, {2}, Poly::constant(3, 1));
    CHECK(R.contract(dxdy).degree() == 1);
    CHECK(R.contract(dxdy).evaluate(dz) == Rat(1));

    // Contraction by the constant function is the identity.
    PolyForm one = basis_form(3, {}, Poly::constant(3, 1));
    for (int trial = 0; trial < 5; ++trial) {
        PolyForm w = rnd_form(3, 3, 2);
        CHECK(R.contract(one).evaluate(w) == R.evaluate(w));
    }
}

TEST_CASE("contractions compose through the wedge") {
    auto cube = kuhn_box(3, 1);
    Current R = Current::from_chain(region_chain(cube));
    for (int trial = 0; trial < 10; ++trial) {
        PolyForm phi = rnd_form(3, 1, 2);
        PolyForm psi = rnd_form(3, 1, 2);
        PolyForm w = rnd_form(3, 1, 2);
        Rat stacked = R.contract(phi).contract(psi).evaluate(w);
        Rat fused = R.contract(wedge(phi, psi)).evaluate(w);
        CHECK(stacked == fused);
    }
}

TEST_CASE("ill-formed current operations are rejected") {
    auto cube = kuhn_box(3, 1);
    Current R = Current::from_chain(region_chain(cube));

    // Degree underflow.
    PolyForm top = basis_form(3, {0, 1, 2}, Poly::constant(3, 1));
    CHECK_THROWS(R.contract(top).contract(top));

    // A contraction cannot move inside an already-applied boundary.
    Current dT = R.contract(basis_form(3, {0}, Poly::constant(3, 1))).boundary();
    CHECK_THROWS(dT.contract(basis_form(3, {}, Poly::constant(3, 1))));

    // No boundary below degree zero.
    Current flat = R.contract(top);
    CHECK(flat.degree() == 0);
    CHECK_THROWS(flat.boundary());
}

TEST_CASE("monomial basis enumerates every coefficient and axis set") {
    // degree <= 1 in 3 variables: 4 monomials x 3 axis choices.
    CHECK(monomial_form_basis(3, 1, 1).size() == 12);
    // degree <= 2 in 3 variables: 10 monomials x 3 axis pairs.
    CHECK(monomial_form_basis(3, 2, 2).size() == 30);
    CHECK(monomial_form_basis(2, 1, 0).size() == 2);
    for (const auto& w : monomial_form_basis(3, 1, 1)) CHECK_FALSE(w.is_zero());
}

TEST_CASE("force functional realizations agree on the worked example") {
    auto cube = kuhn_box(3, 1);
    ElectroConfig cfg{3, 1};
    auto report = force_functional_identity(cube, example_g(), {example_alpha()}, cfg);
    REQUIRE(report.cases.size() == 1);
    CHECK(report.all_consistent);
    CHECK(report.cases[0].direct_power == frac(1, 2));
    CHECK(report.cases[0].boundary_contract == frac(1, 2));
    CHECK(report.cases[0].split_contract == frac(1, 2));
}

TEST_CASE("force functional vanishes for zero sources") {
    auto cube = kuhn_box(3, 1);
    ElectroConfig cfg{3, 1};
    PolyForm zero(3, 1);
    auto report = force_functional_identity(cube, zero, monomial_form_basis(3, 1, 1), cfg);
    CHECK(report.all_consistent);
    for (const auto& c : report.cases) {
        CHECK(c.direct_power == Rat(0));
        CHECK(c.boundary_contract == Rat(0));
        CHECK(c.split_contract == Rat(0));
    }
}

TEST_CASE("force functional agrees on the full monomial family") {
    auto cube = kuhn_box(3, 1);
    for (int trial = 0; trial < 4; ++trial) {
        int r = rng() % 2;
        ElectroConfig cfg{3, r};
        PolyForm g = rnd_form(3, cfg.maxwell_degree(), 2);
        auto report = force_functional_identity(cube, g, monomial_form_basis(3, r, 2), cfg);
        CHECK(report.all_consistent);
    }
}

TEST_CASE("a flipped parity is caught by the identity check") {
    auto cube = kuhn_box(3, 1);
    ElectroConfig flipped{3, 1, true};
    auto report =
        force_functional_identity(cube, example_g(), monomial_form_basis(3, 1, 1), flipped);
    CHECK_FALSE(report.all_consistent);
}
