#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gec/meshgen.hpp"
#include "gec/numform.hpp"
#include "gec/polynomial.hpp"

using namespace gec;

namespace {

std::mt19937_64 rng(555);

double monomial_at(const Exponents& e, const std::vector<double>& x) {
    double v = 1.0;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) v *= x[i];
    return v;
}

// Wrap an exact polynomial form as a numeric one.
NumForm lift(const PolyForm& w) {
    NumForm out(w.nvars(), w.degree());
    for (const auto& [axes, poly] : w.terms())
        out.add_term(axes, [poly](const std::vector<double>& x) { return poly.eval_double(x); });
    return out;
}

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

}  // namespace

TEST_CASE("quadrature weights sum to the simplex volume") {
    for (int dim = 1; dim <= 4; ++dim) {
        for (int s = 0; s <= 3; ++s) {
            auto rule = grundmann_moller(dim, s);
            CHECK(rule.exact_degree == 2 * s + 1);
            double total = 0.0;
            for (const auto& qp : rule.points) {
                total += qp.weight;
                for (double c : qp.coords) CHECK(c > 0.0);
            }
            double volume = rat_to_double(Rat(1) / rat_factorial(dim));
            CHECK(std::abs(total - volume) < 1e-12);
        }
    }
}

TEST_CASE("quadrature integrates monomials exactly up to its degree") {
    for (int dim = 1; dim <= 3; ++dim) {
        for (int s = 0; s <= 3; ++s) {
            auto rule = grundmann_moller(dim, s);
            for (int trial = 0; trial < 20; ++trial) {
                Exponents e(dim, 0);
                int total = rng() % (rule.exact_degree + 1);
                for (int i = 0; i < total; ++i) e[rng() % dim] += 1;
                double got = 0.0;
                for (const auto& qp : rule.points) got += qp.weight * monomial_at(e, qp.coords);
                double exact = rat_to_double(monomial_simplex_integral(dim, e));
                CHECK(std::abs(got - exact) < 1e-13);
            }
        }
    }
}

TEST_CASE("numeric terms fold the axis permutation into the sign") {
    NumForm w(3, 2);
    w.add_term({1, 0}, [](const std::vector<double>&) { return 4.0; });
    w.add_term({0, 0}, [](const std::vector<double>&) { return 9.0; });
    CHECK(w.coefficient_at({0, 1}, {0, 0, 0}) == -4.0);
    CHECK(w.terms().size() == 1);
}

TEST_CASE("numeric wedge matches the exact wedge on polynomials") {
    for (int trial = 0; trial < 10; ++trial) {
        PolyForm a = rnd_form(3, 1, 2);
        PolyForm b = rnd_form(3, 1, 2);
        NumForm prod = wedge(lift(a), lift(b));
        PolyForm exact = wedge(a, b);
        std::vector<double> x = {0.3, 0.7, 0.2};
        for (const auto& axes : increasing_subsets(3, 2)) {
            double want = exact.coefficient(axes).eval_double(x);
            CHECK(std::abs(prod.coefficient_at(axes, x) - want) < 1e-12);
        }
    }
}

TEST_CASE("numeric chain integration agrees with exact integration") {
    auto cube = kuhn_box(3, 1);
    Chain region = region_chain(cube);
    Chain bdry = boundary_chain(region);
    auto cell_rule = grundmann_moller(3, 2);
    auto face_rule = grundmann_moller(2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        PolyForm vol = rnd_form(3, 3, 3);
        double got = integrate_over_chain_num(lift(vol), region, cell_rule);
        double want = rat_to_double(integrate_over_chain(vol, region));
        CHECK(std::abs(got - want) < 1e-10);

        PolyForm surf = rnd_form(3, 2, 3);
        double got2 = integrate_over_chain_num(lift(surf), bdry, face_rule);
        double want2 = rat_to_double(integrate_over_chain(surf, bdry));
        CHECK(std::abs(got2 - want2) < 1e-10);
    }
}

TEST_CASE("builtin bundle derivatives match finite differences") {
    auto fd_partial = [](const NumForm& w, const AxisList& axes, int axis,
                         std::vector<double> x) {
        const double h = 1e-5;
        x[axis] += h;
        double up = w.coefficient_at(axes, x);
        x[axis] -= 2 * h;
        double dn = w.coefficient_at(axes, x);
        return (up - dn) / (2 * h);
    };
    auto f = builtin_trig_bundle();
    std::vector<std::vector<double>> samples = {{0.2, 0.4, 0.7}, {0.9, 0.1, 0.5}};
    for (const auto& x : samples) {
        for (const auto& axes : increasing_subsets(3, 2)) {
            int i = axes[0], j = axes[1];
            double want_dg = fd_partial(f.g, {j}, i, x) - fd_partial(f.g, {i}, j, x);
            CHECK(std::abs(f.dg.coefficient_at(axes, x) - want_dg) < 1e-8);
            double want_da = fd_partial(f.alpha, {j}, i, x) - fd_partial(f.alpha, {i}, j, x);
            CHECK(std::abs(f.dalpha.coefficient_at(axes, x) - want_da) < 1e-8);
        }
    }
}

TEST_CASE("boundary and bulk powers converge together") {
    auto f = builtin_trig_bundle();
    auto report = convergence_study(f, -1, 3, 1);
    REQUIRE(report.rows.size() == 3);
    CHECK(report.rows[0].subdivisions == 1);
    CHECK(report.rows[2].subdivisions == 4);
    // The integrals themselves stay O(1); the gap has to shrink.
    for (const auto& row : report.rows) CHECK(std::abs(row.boundary) < 10.0);
    CHECK(report.rows[1].gap < report.rows[0].gap);
    CHECK(report.rows[2].gap < report.rows[1].gap);
    REQUIRE(report.orders.size() == 2);
    for (double order : report.orders) CHECK(order >= 1.0);
    CHECK(report.first_order);
}
