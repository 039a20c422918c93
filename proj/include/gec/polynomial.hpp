#pragma once

#include <map>
#include <vector>

#include "gec/rational.hpp"

namespace gec {

// Exponent vector, one entry per variable.
using Exponents = std::vector<unsigned>;

// Multivariate polynomial over Q. Zero coefficients are never stored.
class Poly {
  public:
    explicit Poly(int nvars = 0) : nvars_(nvars) {}

    static Poly constant(int nvars, const Rat& c);
    static Poly variable(int nvars, int axis);
    static Poly monomial(int nvars, Exponents e, const Rat& c);

    int nvars() const { return nvars_; }
    const std::map<Exponents, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;

    void add_term(const Exponents& e, const Rat& c);

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Rat& scale);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Rat& s, Poly p) { return p *= s; }
    Poly operator*(const Poly& other) const;
    Poly operator-() const;
    bool operator==(const Poly& other) const;

    Poly derivative(int axis) const;

    // Substitutes subst[i] for variable i; all subst share a variable count.
    Poly compose(const std::vector<Poly>& subst) const;

    Rat eval(const std::vector<Rat>& point) const;
    double eval_double(const std::vector<double>& point) const;

  private:
    int nvars_;
    std::map<Exponents, Rat> terms_;
};

// Integral of the monomial u^e over the standard simplex
// {u_i >= 0, sum u_i <= 1} in `nvars` variables:
//   prod_i e_i! / (nvars + sum_i e_i)!
Rat monomial_simplex_integral(int nvars, const Exponents& e);

// Integral of a polynomial over the standard simplex of its variable count.
Rat poly_simplex_integral(const Poly& p);

}  // namespace gec
