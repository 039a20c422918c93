#include "gec/stress.hpp"

#include <numeric>
#include <stdexcept>

namespace gec {

namespace {

void check_term(int nvars, int velocity_degree, int output_degree,
                const PolyMultivectorField& field, const PolyForm& form) {
    if (field.nvars() != nvars || form.nvars() != nvars)
        throw std::invalid_argument("stress term dimension mismatch");
    if (field.degree() != velocity_degree)
        throw std::invalid_argument("stress term field degree must match the velocity degree");
    if (form.degree() != output_degree)
        throw std::invalid_argument("stress term form degree mismatch");
}

PolyForm apply_terms(const std::vector<StressTerm>& terms, int nvars, int velocity_degree,
                     int output_degree, const PolyForm& v) {
    if (v.nvars() != nvars) throw std::invalid_argument("velocity dimension mismatch");
    if (v.degree() != velocity_degree)
        throw std::invalid_argument("velocity degree mismatch");
    PolyForm out(nvars, output_degree);
    for (const auto& t : terms) out += duality_pair(v, t.field) * t.form;
    return out;
}

// Integral of a (d-1)-form living on a face chart's own coordinates.
Rat chart_form_integral(const PolyForm& w) {
    AxisList full(w.degree());
    std::iota(full.begin(), full.end(), 0);
    return poly_simplex_integral(w.coefficient(full));
}

}  // namespace

TractionStressField::TractionStressField(int nvars, int velocity_degree)
    : nvars_(nvars), velocity_degree_(velocity_degree) {
    if (nvars < 1 || velocity_degree < 0 || velocity_degree > nvars)
        throw std::invalid_argument("invalid traction stress parameters");
}

void TractionStressField::add_term(PolyMultivectorField field, PolyForm form) {
    check_term(nvars_, velocity_degree_, output_degree(), field, form);
    terms_.push_back({std::move(field), std::move(form)});
}

BodyForceField::BodyForceField(int nvars, int velocity_degree)
    : nvars_(nvars), velocity_degree_(velocity_degree) {
    if (nvars < 1 || velocity_degree < 0 || velocity_degree > nvars)
        throw std::invalid_argument("invalid body force parameters");
}

void BodyForceField::add_term(PolyMultivectorField field, PolyForm form) {
    check_term(nvars_, velocity_degree_, output_degree(), field, form);
    terms_.push_back({std::move(field), std::move(form)});
}

PolyForm apply_traction(const TractionStressField& sigma, const PolyForm& v) {
    return apply_terms(sigma.terms(), sigma.nvars(), sigma.velocity_degree(),
                       sigma.output_degree(), v);
}

PolyForm apply_body(const BodyForceField& b, const PolyForm& v) {
    return apply_terms(b.terms(), b.nvars(), b.velocity_degree(), b.output_degree(), v);
}

std::vector<FaceTraction> cauchy_traction(const TractionStressField& sigma,
                                          const BoundaryComplex& D, const PolyForm& v) {
    if (D.surface->top_dim() != sigma.nvars() - 1)
        throw std::invalid_argument("boundary dimension mismatch");
    PolyForm sv = apply_traction(sigma, v);
    std::vector<FaceTraction> out;
    out.reserve(D.surface->top_simplices().size());
    for (const auto& f : D.surface->top_simplices()) {
        AffineMap chart = AffineMap::from_simplex(D.surface->points_of(f.vertices));
        PolyForm traction = pullback(sv, chart);
        if (f.sign < 0) traction *= Rat(-1);
        out.push_back({f.vertices, f.sign, std::move(chart), std::move(traction)});
    }
    return out;
}

Rat power_boundary_form(const ComplexPtr& region, const BodyForceField& b,
                        const TractionStressField& sigma, const PolyForm& v) {
    if (region->ambient_dim() != sigma.nvars() || region->top_dim() != sigma.nvars())
        throw std::invalid_argument("region dimension mismatch");
    Rat power = integrate_over_chain(apply_body(b, v), region_chain(region));
    for (const auto& t : cauchy_traction(sigma, boundary_subcomplex(region), v))
        power += chart_form_integral(t.traction);
    return power;
}

Rat power_bulk_form(const ComplexPtr& region, const BodyForceField& b,
                    const TractionStressField& sigma, const PolyForm& v) {
    if (region->ambient_dim() != sigma.nvars() || region->top_dim() != sigma.nvars())
        throw std::invalid_argument("region dimension mismatch");
    PolyForm density = apply_body(b, v) + exterior_derivative(apply_traction(sigma, v));
    return integrate_over_chain(density, region_chain(region));
}

VariationalStress::VariationalStress(int nvars, int velocity_degree)
    : nvars_(nvars), velocity_degree_(velocity_degree) {
    if (nvars < 1 || velocity_degree < 0 || velocity_degree > nvars)
        throw std::invalid_argument("invalid variational stress parameters");
}

void VariationalStress::add_value_term(PolyMultivectorField field, PolyForm form) {
    check_term(nvars_, velocity_degree_, nvars_, field, form);
    value_terms_.push_back({std::move(field), std::move(form)});
}

void VariationalStress::add_gradient_term(PolyMultivectorField field, PolyForm form) {
    check_term(nvars_, velocity_degree_ + 1, nvars_, field, form);
    gradient_terms_.push_back({std::move(field), std::move(form)});
}

PolyForm VariationalStress::apply_value(const PolyForm& v) const {
    return apply_terms(value_terms_, nvars_, velocity_degree_, nvars_, v);
}

PolyForm VariationalStress::apply_gradient(const PolyForm& dv) const {
    return apply_terms(gradient_terms_, nvars_, velocity_degree_ + 1, nvars_, dv);
}

PolyForm VariationalStress::apply(const PolyForm& v) const {
    return apply_value(v) + apply_gradient(exterior_derivative(v));
}

}  // namespace gec
