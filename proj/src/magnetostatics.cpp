#include "gec/magnetostatics.hpp"

#include <stdexcept>

namespace gec {

namespace {

void check_three_vars(const Poly& p) {
    if (p.nvars() != 3)
        throw std::invalid_argument("Cartesian fields need exactly three variables");
}

}  // namespace

PolyVectorField::PolyVectorField() : comp{Poly(3), Poly(3), Poly(3)} {}

PolyVectorField::PolyVectorField(std::array<Poly, 3> components) : comp(std::move(components)) {
    for (const auto& p : comp) check_three_vars(p);
}

SkewStressField SkewStressField::from_matrix(std::array<std::array<Poly, 3>, 3> entries) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            check_three_vars(entries[i][j]);
            if (!(entries[i][j] == -entries[j][i]))
                throw std::invalid_argument("stress matrix is not skew-symmetric");
        }
    SkewStressField s;
    s.entries_ = std::move(entries);
    return s;
}

SkewStressField SkewStressField::from_upper(Poly s01, Poly s02, Poly s12) {
    std::array<std::array<Poly, 3>, 3> m{
        {{Poly(3), s01, s02}, {-s01, Poly(3), s12}, {-s02, -s12, Poly(3)}}};
    return from_matrix(std::move(m));
}

PolyVectorField axial_vector(const SkewStressField& sigma) {
    return PolyVectorField({sigma.entry(1, 2), sigma.entry(2, 0), sigma.entry(0, 1)});
}

PolyVectorField transpose_apply(const SkewStressField& sigma, const PolyVectorField& w) {
    PolyVectorField out;
    for (int i = 0; i < 3; ++i) {
        Poly acc(3);
        for (int j = 0; j < 3; ++j) acc += sigma.entry(j, i) * w.comp[j];
        out.comp[i] = std::move(acc);
    }
    return out;
}

PolyVectorField curl(const PolyVectorField& v) {
    return PolyVectorField({v.comp[2].derivative(1) - v.comp[1].derivative(2),
                            v.comp[0].derivative(2) - v.comp[2].derivative(0),
                            v.comp[1].derivative(0) - v.comp[0].derivative(1)});
}

Poly divergence(const PolyVectorField& v) {
    return v.comp[0].derivative(0) + v.comp[1].derivative(1) + v.comp[2].derivative(2);
}

PolyVectorField cross(const PolyVectorField& a, const PolyVectorField& b) {
    return PolyVectorField({a.comp[1] * b.comp[2] - a.comp[2] * b.comp[1],
                            a.comp[2] * b.comp[0] - a.comp[0] * b.comp[2],
                            a.comp[0] * b.comp[1] - a.comp[1] * b.comp[0]});
}

Poly dot(const PolyVectorField& a, const PolyVectorField& b) {
    return a.comp[0] * b.comp[0] + a.comp[1] * b.comp[1] + a.comp[2] * b.comp[2];
}

PolyForm one_form(const PolyVectorField& v) {
    PolyForm w(3, 1);
    for (int i = 0; i < 3; ++i) w.add_term({i}, v.comp[i]);
    return w;
}

PolyForm flux_form(const PolyVectorField& v) {
    PolyForm w(3, 2);
    w.add_term({1, 2}, v.comp[0]);
    w.add_term({2, 0}, v.comp[1]);  // dz^dx carries the middle component
    w.add_term({0, 1}, v.comp[2]);
    return w;
}

PolyForm volume_form(const Poly& p) {
    check_three_vars(p);
    PolyForm w(3, 3);
    w.add_term({0, 1, 2}, p);
    return w;
}

MagnetoPowerRecord power_magneto(const ComplexPtr& region, const PolyVectorField& g,
                                 const PolyVectorField& w) {
    if (region->ambient_dim() != 3 || region->top_dim() != 3)
        throw std::invalid_argument("classical power needs a three-dimensional region");
    MagnetoPowerRecord rec;
    Chain R = region_chain(region);
    PolyVectorField gxw = cross(g, w);
    rec.surface_power = integrate_over_chain(flux_form(gxw), boundary_chain(R));
    rec.divergence_power = integrate_over_chain(volume_form(divergence(gxw)), R);
    rec.split_power =
        integrate_over_chain(volume_form(dot(curl(g), w) - dot(g, curl(w))), R);
    rec.consistent = rec.surface_power == rec.divergence_power &&
                     rec.divergence_power == rec.split_power;
    return rec;
}

CrosscheckRecord crosscheck_with_forms(const ComplexPtr& region, const PolyVectorField& g,
                                       const PolyVectorField& w) {
    CrosscheckRecord rec;
    rec.classical = power_magneto(region, g, w);

    ElectroConfig cfg;
    cfg.spacetime_dim = 3;
    cfg.potential_degree = 1;
    PolyForm gform = one_form(g);
    PolyForm alpha = one_form(w);
    rec.electro_total = total_power(region, gform, alpha, cfg);
    rec.powers_match = rec.classical.consistent &&
                       rec.electro_total == rec.classical.surface_power;

    FieldStrengths fs = field_strengths(alpha, gform, cfg);
    rec.faraday_matches_curl = fs.faraday == flux_form(curl(w));
    rec.charge_matches_curl = fs.charge_current == flux_form(curl(g));
    return rec;
}

}  // namespace gec
