#pragma once

#include <vector>

namespace gec {

struct QuadraturePoint {
    double weight = 0.0;
    std::vector<double> coords;  // point inside the standard simplex
};

// Interpolatory rule on the standard simplex in R^dim; weights sum to the
// simplex volume 1/dim!.
struct QuadratureRule {
    int dim = 0;
    int index = 0;         // rule index s
    int exact_degree = 0;  // 2s+1
    std::vector<QuadraturePoint> points;
};

// Simplex rule of index s, exact for polynomials of total degree 2s+1:
// for i = 0..s and every exponent tuple beta with |beta| <= s-i, the node
// (2*beta+1)/(2s+1+dim-2i) carries weight
//   (-1)^i 2^(-2s) (2s+1+dim-2i)^(2s+1) / (i! (2s+1+dim-i)!).
QuadratureRule grundmann_moller(int dim, int index);

}  // namespace gec
