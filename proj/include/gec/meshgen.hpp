#pragma once

#include "gec/complex.hpp"

namespace gec {

// Triangulation of the unit box [0,1]^dim into sub^dim cells of d! path
// simplices each (vertex walks along one axis at a time, one order per
// permutation). Every top simplex is positively oriented, and faces of
// neighboring cells match, so interior faces cancel in the boundary.
ComplexPtr kuhn_box(int dim, int subdivisions);

// The standard simplex spanned by the origin and the basis points.
ComplexPtr standard_simplex_mesh(int dim);

}  // namespace gec
