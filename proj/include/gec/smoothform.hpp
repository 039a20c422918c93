#pragma once

#include <map>
#include <vector>

#include "gec/cochain.hpp"
#include "gec/complex.hpp"
#include "gec/polynomial.hpp"

namespace gec {

// Strictly increasing 0-based axis indices; the empty list indexes a 0-form.
using AxisList = std::vector<int>;

// Affine map u -> origin + sum_i u_i * dirs[i] from R^src to R^tgt.
struct AffineMap {
    int src_dim = 0;
    int tgt_dim = 0;
    Point origin;              // size tgt_dim
    std::vector<Point> dirs;   // src_dim columns, each of size tgt_dim

    static AffineMap identity(int n);
    // Chart of a k-simplex: origin = first point, columns = edge vectors from
    // it, in the given vertex order. Standard k-simplex maps onto the simplex.
    static AffineMap from_simplex(const std::vector<Point>& pts);

    Point apply(const Point& u) const;
    // Target coordinates as polynomials in the source variables.
    std::vector<Poly> coordinate_polys() const;
    // Exact inverse; requires src_dim == tgt_dim and an invertible matrix.
    AffineMap inverse() const;
};

// Exact determinant by Gaussian elimination with row pivoting.
Rat determinant(std::vector<std::vector<Rat>> m);

// All increasing k-element subsets of {0..n-1}, lexicographic.
std::vector<AxisList> increasing_subsets(int n, int k);

// Differential form of fixed degree with polynomial coefficients on R^nvars.
// Terms are keyed by increasing axis lists; a degree above nvars is allowed
// and is identically zero (no valid basis covector exists).
class PolyForm {
  public:
    PolyForm(int nvars, int degree);
    static PolyForm from_poly(const Poly& p);  // 0-form

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    const std::map<AxisList, Poly>& terms() const { return terms_; }

    // Axes in any order; sorted here with the permutation sign folded into the
    // coefficient. A repeated axis makes the term vanish.
    void add_term(AxisList axes, const Poly& coeff);
    Poly coefficient(const AxisList& increasing_axes) const;
    bool is_zero() const { return terms_.empty(); }

    PolyForm& operator+=(const PolyForm& other);
    PolyForm& operator-=(const PolyForm& other);
    PolyForm& operator*=(const Rat& s);
    friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
    friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
    PolyForm operator-() const;
    bool operator==(const PolyForm& other) const;

  private:
    int nvars_;
    int degree_;
    std::map<AxisList, Poly> terms_;
};

// Coefficient-wise product with a scalar field.
PolyForm operator*(const Poly& s, const PolyForm& w);
PolyForm operator*(const Rat& s, PolyForm w);

PolyForm wedge(const PolyForm& a, const PolyForm& b);
PolyForm exterior_derivative(const PolyForm& w);

// Pullback along an affine map: substitutes coordinates into coefficients and
// expands each dx_A into source covectors via k x k minors of the direction
// matrix. A dg-algebra morphism: commutes with wedge and with d.
PolyForm pullback(const PolyForm& w, const AffineMap& f);

// Multivector field of fixed degree with polynomial coefficients, stored on
// the increasing wedge basis e_A.
class PolyMultivectorField {
  public:
    PolyMultivectorField(int nvars, int degree);

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    const std::map<AxisList, Poly>& terms() const { return terms_; }

    void add_term(AxisList axes, const Poly& coeff);
    Poly coefficient(const AxisList& increasing_axes) const;
    bool is_zero() const { return terms_.empty(); }

  private:
    int nvars_;
    int degree_;
    std::map<AxisList, Poly> terms_;
};

// <w, v> = sum_A w_A * v_A on the increasing basis, where <dx_A, e_B> = d_AB.
Poly duality_pair(const PolyForm& w, const PolyMultivectorField& v);

// Exact integral of a degree-k form over an embedded k-simplex given by k+1
// points in vertex order: pull back along the simplex chart, then integrate
// the resulting top coefficient over the standard simplex. A 0-form on a
// point evaluates there. A degenerate simplex integrates to zero; the flag
// reports it when requested.
Rat integrate_simplex(const PolyForm& w, const std::vector<Point>& pts,
                      bool* degenerate = nullptr);

Rat integrate_over_chain(const PolyForm& w, const Chain& c);

// Discretization: the cochain whose value on each canonical simplex is the
// exact integral of w over it. Intertwines exterior derivative and coboundary.
Cochain de_rham(const PolyForm& w, const ComplexPtr& K);

}  // namespace gec
