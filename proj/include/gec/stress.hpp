#pragma once

#include <vector>

#include "gec/smoothform.hpp"

namespace gec {

// One constitutive term: velocity v |-> <v, field> * form.
struct StressTerm {
    PolyMultivectorField field;
    PolyForm form;
};

// Traction stress: linear map from degree-r generalized velocities to the
// (d-1)-forms whose boundary integrals give surface power. Stored as a finite
// term list, so linearity in v is structural.
class TractionStressField {
  public:
    TractionStressField(int nvars, int velocity_degree);

    int nvars() const { return nvars_; }
    int velocity_degree() const { return velocity_degree_; }
    int output_degree() const { return nvars_ - 1; }
    const std::vector<StressTerm>& terms() const { return terms_; }

    void add_term(PolyMultivectorField field, PolyForm form);

  private:
    int nvars_;
    int velocity_degree_;
    std::vector<StressTerm> terms_;
};

// Body force: linear map from degree-r velocities to d-form power densities.
class BodyForceField {
  public:
    BodyForceField(int nvars, int velocity_degree);

    int nvars() const { return nvars_; }
    int velocity_degree() const { return velocity_degree_; }
    int output_degree() const { return nvars_; }
    const std::vector<StressTerm>& terms() const { return terms_; }

    void add_term(PolyMultivectorField field, PolyForm form);

  private:
    int nvars_;
    int velocity_degree_;
    std::vector<StressTerm> terms_;
};

PolyForm apply_traction(const TractionStressField& sigma, const PolyForm& v);
PolyForm apply_body(const BodyForceField& b, const PolyForm& v);

// Surface traction induced on one boundary face: the stress output pulled
// back along the face chart (ascending vertex order), with the induced
// orientation folded into the form.
struct FaceTraction {
    VertexList face;
    int sign = 1;        // induced boundary orientation vs ascending order
    AffineMap chart;     // standard (d-1)-simplex onto the face
    PolyForm traction;   // sign * pullback(sigma(v), chart)
};

std::vector<FaceTraction> cauchy_traction(const TractionStressField& sigma,
                                          const BoundaryComplex& D, const PolyForm& v);

// Total power as bulk source plus surface traction:
//   sum_R int b(v)  +  sum_{boundary faces} int (pulled-back sigma(v)).
Rat power_boundary_form(const ComplexPtr& region, const BodyForceField& b,
                        const TractionStressField& sigma, const PolyForm& v);

// The same functional pushed through Stokes: int_R [ b(v) + d(sigma(v)) ].
// Agrees with power_boundary_form exactly on every polynomial input.
Rat power_bulk_form(const ComplexPtr& region, const BodyForceField& b,
                    const TractionStressField& sigma, const PolyForm& v);

// Bulk power density split against the first jet of the velocity:
//   S(j1 v) = S0(v) + S1(dv), both d-forms.
class VariationalStress {
  public:
    VariationalStress(int nvars, int velocity_degree);

    int nvars() const { return nvars_; }
    int velocity_degree() const { return velocity_degree_; }
    const std::vector<StressTerm>& value_terms() const { return value_terms_; }
    const std::vector<StressTerm>& gradient_terms() const { return gradient_terms_; }

    void add_value_term(PolyMultivectorField field, PolyForm form);
    void add_gradient_term(PolyMultivectorField field, PolyForm form);

    PolyForm apply_value(const PolyForm& v) const;       // S0(v)
    PolyForm apply_gradient(const PolyForm& dv) const;   // S1(dv), takes the gradient form
    PolyForm apply(const PolyForm& v) const;             // S0(v) + S1(dv)

  private:
    int nvars_;
    int velocity_degree_;
    std::vector<StressTerm> value_terms_;
    std::vector<StressTerm> gradient_terms_;
};

}  // namespace gec
