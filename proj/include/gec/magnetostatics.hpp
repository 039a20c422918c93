#pragma once

#include <array>

#include "gec/electro.hpp"

namespace gec {

// Polynomial vector field on Cartesian R^3. This module is the only place
// the standard basis identification (dot products, cross products, flux
// through surfaces) is used; everything else stays metric-free.
struct PolyVectorField {
    std::array<Poly, 3> comp;

    PolyVectorField();
    explicit PolyVectorField(std::array<Poly, 3> components);
};

// 3x3 skew-symmetric polynomial matrix.
class SkewStressField {
  public:
    static SkewStressField from_matrix(std::array<std::array<Poly, 3>, 3> entries);
    // Upper-triangle entries s01, s02, s12; the rest follows by skewness.
    static SkewStressField from_upper(Poly s01, Poly s02, Poly s12);

    const Poly& entry(int row, int col) const { return entries_[row][col]; }

  private:
    SkewStressField() = default;
    std::array<std::array<Poly, 3>, 3> entries_;
};

// The vector g with sigma^T(w) = g x w: picks the three independent skew
// entries with Levi-Civita signs.
PolyVectorField axial_vector(const SkewStressField& sigma);

// (sigma^T w)_i = sum_j sigma_ji w_j.
PolyVectorField transpose_apply(const SkewStressField& sigma, const PolyVectorField& w);

PolyVectorField curl(const PolyVectorField& v);
Poly divergence(const PolyVectorField& v);
PolyVectorField cross(const PolyVectorField& a, const PolyVectorField& b);
Poly dot(const PolyVectorField& a, const PolyVectorField& b);

// v1 dx + v2 dy + v3 dz: the circulation 1-form of v.
PolyForm one_form(const PolyVectorField& v);
// v1 dy^dz + v2 dz^dx + v3 dx^dy: the flux 2-form of v, so surface integrals
// of v . n dA never need a normal vector.
PolyForm flux_form(const PolyVectorField& v);
// p dx^dy^dz.
PolyForm volume_form(const Poly& p);

// The three classical expressions for the power of the skew stress g against
// the virtual velocity w on a region:
//   surface:    int_dR (g x w) . n dA      (as the flux 2-form)
//   divergence: int_R  div(g x w) dV
//   split:      int_R  [(curl g) . w - g . (curl w)] dV
struct MagnetoPowerRecord {
    Rat surface_power;
    Rat divergence_power;
    Rat split_power;
    bool consistent = false;
};

MagnetoPowerRecord power_magneto(const ComplexPtr& region, const PolyVectorField& g,
                                 const PolyVectorField& w);

// Drives the d=3, r=1 exterior-calculus pipeline on alpha = one_form(w) and
// the Maxwell form one_form(g), and checks it against the classical vector
// expressions: equal powers, d(alpha) = flux of curl w, d(g-form) = flux of
// curl g.
struct CrosscheckRecord {
    Rat electro_total;
    MagnetoPowerRecord classical;
    bool faraday_matches_curl = false;
    bool charge_matches_curl = false;
    bool powers_match = false;
};

CrosscheckRecord crosscheck_with_forms(const ComplexPtr& region, const PolyVectorField& g,
                                       const PolyVectorField& w);

}  // namespace gec
