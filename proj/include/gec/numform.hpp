#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "gec/complex.hpp"
#include "gec/quadrature.hpp"
#include "gec/smoothform.hpp"

namespace gec {

// Differential form with floating-point coefficient functions.  Used by the
// convergence checks, where the fields are transcendental and exact
// integration is off the table.  Terms are kept as a flat list; repeated
// axis sets simply contribute additively at evaluation time.
class NumForm {
public:
    using Coeff = std::function<double(const std::vector<double>&)>;

    NumForm(int nvars, int degree);

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }

    // Axes may arrive in any order; the permutation sign is folded into the
    // coefficient and a repeated axis drops the term.
    void add_term(AxisList axes, Coeff coeff);

    const std::vector<std::pair<AxisList, Coeff>>& terms() const { return terms_; }

    // Sum of the coefficients attached to one increasing axis set, evaluated
    // at a point.
    double coefficient_at(const AxisList& axes, const std::vector<double>& x) const;

private:
    int nvars_;
    int degree_;
    std::vector<std::pair<AxisList, Coeff>> terms_;
};

NumForm wedge(const NumForm& a, const NumForm& b);

// Integral over one embedded simplex: pull back through the affine chart and
// apply a quadrature rule on the standard simplex.  The rule's accuracy only
// limits polynomial exactness; smooth integrands converge with refinement.
double integrate_simplex_num(const NumForm& w,
                             const std::vector<std::vector<Rat>>& pts,
                             const QuadratureRule& rule);

double integrate_over_chain_num(const NumForm& w, const Chain& c,
                                const QuadratureRule& rule);

// Field bundle for the floating-point power check.  Derivatives are supplied
// analytically alongside the fields; nothing is differentiated numerically.
struct NumFieldBundle {
    NumForm g;       // charge-current potential, degree r
    NumForm dg;      // its exterior derivative
    NumForm alpha;   // test potential, degree d - r - 2
    NumForm dalpha;  // its exterior derivative
};

// Built-in bundle for d = 3, r = 1 with trigonometric coefficients chosen so
// every product in the power identity is nonzero.
NumFieldBundle builtin_trig_bundle();

// Boundary and bulk sides of the power identity, evaluated numerically:
//   boundary = integral of g ^ alpha over the boundary of R,
//   bulk     = integral of dg ^ alpha + sign * g ^ dalpha over R.
double power_boundary_num(const NumFieldBundle& f, const ComplexPtr& K,
                          const QuadratureRule& rule);
double power_bulk_num(const NumFieldBundle& f, int sign,
                      const ComplexPtr& K, const QuadratureRule& rule);

struct ConvergenceRow {
    int subdivisions;
    double boundary;
    double bulk;
    double gap;
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    std::vector<double> orders;  // log2(gap[i] / gap[i+1])
    bool first_order;            // every observed order >= 1
};

// Mesh the unit cube at subdivision levels 2^0 .. 2^(levels-1) and track how
// fast the boundary/bulk gap closes. One quadrature index serves both sides;
// the boundary rule lives one dimension down.
ConvergenceReport convergence_study(const NumFieldBundle& f, int sign,
                                    int levels, int rule_index);

}  // namespace gec
