#include "gec/electro.hpp"

#include <stdexcept>

namespace gec {

void ElectroConfig::validate() const {
    if (spacetime_dim < 1) throw std::invalid_argument("spacetime dimension must be positive");
    if (potential_degree < 0 || potential_degree > spacetime_dim - 1)
        throw std::invalid_argument("potential degree must lie in [0, d-1]");
}

namespace {

void check_fields(const PolyForm& g, const PolyForm& alpha, const ElectroConfig& cfg) {
    cfg.validate();
    if (g.nvars() != cfg.spacetime_dim || alpha.nvars() != cfg.spacetime_dim)
        throw std::invalid_argument("field dimension does not match the configuration");
    if (g.degree() != cfg.maxwell_degree())
        throw std::invalid_argument("Maxwell form degree must be d-r-1");
    if (alpha.degree() != cfg.potential_degree)
        throw std::invalid_argument("potential degree mismatch");
}

void check_region(const ComplexPtr& region, const ElectroConfig& cfg) {
    if (region->ambient_dim() != cfg.spacetime_dim ||
        region->top_dim() != cfg.spacetime_dim)
        throw std::invalid_argument("region dimension does not match the configuration");
}

}  // namespace

TractionStressField maxwell_traction(const PolyForm& g, const ElectroConfig& cfg) {
    cfg.validate();
    if (g.nvars() != cfg.spacetime_dim || g.degree() != cfg.maxwell_degree())
        throw std::invalid_argument("Maxwell form degree must be d-r-1");
    const int d = cfg.spacetime_dim;
    const int r = cfg.potential_degree;
    TractionStressField sigma(d, r);
    Poly one = Poly::constant(d, Rat(1));
    for (const auto& axes : increasing_subsets(d, r)) {
        PolyMultivectorField basis(d, r);
        basis.add_term(axes, one);
        PolyForm dx(d, r);
        dx.add_term(axes, one);
        PolyForm w = wedge(g, dx);
        if (w.is_zero()) continue;
        sigma.add_term(std::move(basis), std::move(w));
    }
    return sigma;
}

FieldStrengths field_strengths(const PolyForm& alpha, const PolyForm& g,
                               const ElectroConfig& cfg) {
    check_fields(g, alpha, cfg);
    FieldStrengths out{exterior_derivative(alpha), exterior_derivative(g)};
    out.faraday_closed = exterior_derivative(out.faraday).is_zero();
    out.charge_current_closed = exterior_derivative(out.charge_current).is_zero();
    return out;
}

PowerChainRecord power_chain_identity(const ComplexPtr& region, const PolyForm& g,
                                      const PolyForm& alpha, const ElectroConfig& cfg) {
    check_fields(g, alpha, cfg);
    check_region(region, cfg);
    PowerChainRecord rec;
    rec.sign = cfg.boundary_sign();
    Chain R = region_chain(region);
    PolyForm ga = wedge(g, alpha);
    rec.boundary_power = integrate_over_chain(ga, boundary_chain(R));
    rec.bulk_power = integrate_over_chain(exterior_derivative(ga), R);
    rec.charge_term = integrate_over_chain(wedge(exterior_derivative(g), alpha), R);
    rec.field_term = integrate_over_chain(wedge(g, exterior_derivative(alpha)), R);
    rec.split_sum = rec.charge_term + Rat(rec.sign) * rec.field_term;
    rec.consistent =
        rec.boundary_power == rec.bulk_power && rec.bulk_power == rec.split_sum;
    return rec;
}

PowerChainRecord power_chain_identity_discrete(const ComplexPtr& region, const Cochain& g,
                                               const Cochain& alpha,
                                               const ElectroConfig& cfg) {
    cfg.validate();
    check_region(region, cfg);
    if (g.complex() != region || alpha.complex() != region)
        throw std::invalid_argument("cochains must live on the region complex");
    if (g.degree() != cfg.maxwell_degree() || alpha.degree() != cfg.potential_degree)
        throw std::invalid_argument("cochain degree mismatch");
    PowerChainRecord rec;
    rec.sign = cfg.boundary_sign();
    Chain R = region_chain(region);
    Cochain ga = cup(g, alpha);
    rec.boundary_power = pair_chain(ga, boundary_chain(R));
    rec.bulk_power = pair_chain(coboundary(ga), R);
    rec.charge_term = pair_chain(cup(coboundary(g), alpha), R);
    rec.field_term = pair_chain(cup(g, coboundary(alpha)), R);
    rec.split_sum = rec.charge_term + Rat(rec.sign) * rec.field_term;
    rec.consistent =
        rec.boundary_power == rec.bulk_power && rec.bulk_power == rec.split_sum;
    return rec;
}

VariationalSplit variational_split(const PolyForm& g, const PolyForm& alpha,
                                   const ElectroConfig& cfg) {
    check_fields(g, alpha, cfg);
    VariationalSplit out{wedge(exterior_derivative(g), alpha),
                         Rat(cfg.boundary_sign()) *
                             wedge(g, exterior_derivative(alpha))};
    return out;
}

VariationalStress electro_variational_stress(const PolyForm& g, const ElectroConfig& cfg) {
    cfg.validate();
    if (g.nvars() != cfg.spacetime_dim || g.degree() != cfg.maxwell_degree())
        throw std::invalid_argument("Maxwell form degree must be d-r-1");
    const int d = cfg.spacetime_dim;
    const int r = cfg.potential_degree;
    const Rat sign(cfg.boundary_sign());
    VariationalStress S(d, r);
    Poly one = Poly::constant(d, Rat(1));
    PolyForm J = exterior_derivative(g);
    for (const auto& axes : increasing_subsets(d, r)) {
        PolyMultivectorField basis(d, r);
        basis.add_term(axes, one);
        PolyForm dx(d, r);
        dx.add_term(axes, one);
        PolyForm w = wedge(J, dx);
        if (!w.is_zero()) S.add_value_term(std::move(basis), std::move(w));
    }
    for (const auto& axes : increasing_subsets(d, r + 1)) {
        PolyMultivectorField basis(d, r + 1);
        basis.add_term(axes, one);
        PolyForm dx(d, r + 1);
        dx.add_term(axes, one);
        PolyForm w = sign * wedge(g, dx);
        if (!w.is_zero()) S.add_gradient_term(std::move(basis), std::move(w));
    }
    return S;
}

Rat total_power(const ComplexPtr& region, const PolyForm& g, const PolyForm& alpha,
                const ElectroConfig& cfg) {
    check_fields(g, alpha, cfg);
    check_region(region, cfg);
    Chain R = region_chain(region);
    FieldStrengths fs{exterior_derivative(alpha), exterior_derivative(g)};
    return integrate_over_chain(wedge(fs.charge_current, alpha), R) +
           Rat(cfg.boundary_sign()) * integrate_over_chain(wedge(g, fs.faraday), R);
}

}  // namespace gec
