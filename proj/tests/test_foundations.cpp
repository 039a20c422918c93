#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "gec/polynomial.hpp"
#include "gec/rational.hpp"

using namespace gec;

namespace {

// Independent check of the factorial formula for monomial integrals over the
// standard simplex: map the unit cube onto the simplex by
//   u_i = t_i * prod_{j<i} (1 - t_j),   Jacobian = prod_j (1 - t_j)^(n-1-j),
// and integrate with iterated composite Simpson. The integrand is polynomial
// in t, so Simpson at this resolution is far more accurate than the tolerance.
double simpson_simplex_monomial(const std::vector<unsigned>& e) {
    const int n = static_cast<int>(e.size());
    const int N = 64;  // intervals per axis, even
    const double h = 1.0 / N;
    auto weight = [&](int i) { return i == 0 || i == N ? 1.0 : (i % 2 ? 4.0 : 2.0); };

    std::vector<int> idx(n, 0);
    double total = 0.0;
    while (true) {
        double w = 1.0, jac = 1.0, rem = 1.0;
        std::vector<double> u(n);
        for (int a = 0; a < n; ++a) {
            double t = idx[a] * h;
            w *= weight(idx[a]);
            u[a] = t * rem;
            if (a < n - 1) jac *= std::pow(1.0 - t, n - 1 - a);
            rem *= 1.0 - t;
        }
        double f = jac;
        for (int a = 0; a < n; ++a) f *= std::pow(u[a], static_cast<double>(e[a]));
        total += w * f;

        int a = 0;
        while (a < n && ++idx[a] > N) idx[a++] = 0;
        if (a == n) break;
    }
    return total * std::pow(h / 3.0, n);
}

}  // namespace

TEST_CASE("monomial simplex integral matches brute-force quadrature") {
    // 10 random monomials across 1 to 3 variables; fixed seed, frozen run.
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        std::vector<unsigned> e(n);
        for (auto& x : e) x = static_cast<unsigned>(rng() % 4);
        const double exact = rat_to_double(monomial_simplex_integral(n, e));
        const double approx = simpson_simplex_monomial(e);
        CHECK(std::abs(exact - approx) < 1e-7 * std::max(1.0, std::abs(exact)));
    }
}

TEST_CASE("monomial simplex integral handpicked values") {
    CHECK(monomial_simplex_integral(2, {0, 0}) == Rat(1, 2));
    CHECK(monomial_simplex_integral(2, {1, 0}) == Rat(1, 6));
    CHECK(monomial_simplex_integral(2, {1, 1}) == Rat(1, 24));
    CHECK(monomial_simplex_integral(3, {0, 0, 0}) == Rat(1, 6));
    CHECK(monomial_simplex_integral(3, {2, 0, 0}) == Rat(1, 60));
    CHECK(monomial_simplex_integral(1, {3}) == Rat(1, 4));
}

TEST_CASE("rational parsing and canonical printing") {
    CHECK(rat_to_string(rat_from_string("3/6")) == "1/2");
    CHECK(rat_to_string(rat_from_string("-4/8")) == "-1/2");
    CHECK(rat_to_string(rat_from_string("4/-8")) == "-1/2");
    CHECK(rat_to_string(rat_from_string("0.25")) == "1/4");
    CHECK(rat_to_string(rat_from_string("-1.5")) == "-3/2");
    CHECK(rat_to_string(rat_from_string("7")) == "7");
    CHECK(rat_to_string(rat_from_string(" 10/5 ")) == "2");
    CHECK(rat_to_string(Rat(0)) == "0");
    CHECK(rat_from_string("1/3") == Rat(1, 3));
    CHECK_THROWS(rat_from_string("1/0"));
    CHECK_THROWS(rat_from_string("abc"));
    CHECK_THROWS(rat_from_string(""));
    CHECK(rat_factorial(0) == 1);
    CHECK(rat_factorial(5) == 120);
}

TEST_CASE("polynomial arithmetic") {
    const int n = 2;
    Poly x = Poly::variable(n, 0);
    Poly y = Poly::variable(n, 1);
    Poly p = x * x + Rat(3) * y;            // x^2 + 3y
    Poly q = x * y - Poly::constant(n, 1);  // xy - 1

    CHECK(p.eval({Rat(2), Rat(1, 3)}) == Rat(5));
    CHECK((p * q).eval({Rat(2), Rat(1, 3)}) == Rat(5) * Rat(-1, 3));
    CHECK(p.derivative(0) == Rat(2) * x);
    CHECK(p.derivative(1) == Poly::constant(n, Rat(3)));
    CHECK((p - p).is_zero());
    CHECK(p.total_degree() == 2);

    // Substitution is evaluation when the replacements are constants.
    Poly c0 = Poly::constant(0, Rat(2));
    Poly c1 = Poly::constant(0, Rat(1, 3));
    CHECK(p.compose({c0, c1}) == Poly::constant(0, Rat(5)));

    // (x)(y) composed with x -> x + y, y -> x - y gives x^2 - y^2.
    Poly sub = (x * y).compose({x + y, x - y});
    CHECK(sub == x * x - y * y);
}

TEST_CASE("polynomial simplex integral is linear in the coefficients") {
    Poly x = Poly::variable(2, 0);
    Poly y = Poly::variable(2, 1);
    Poly p = Rat(6) * (x * y) + Rat(2) * x - Poly::constant(2, Rat(1));
    // 6/24 + 2/6 - 1/2
    CHECK(poly_simplex_integral(p) == Rat(1, 4) + Rat(1, 3) - Rat(1, 2));
}
