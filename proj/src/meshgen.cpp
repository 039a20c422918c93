#include "gec/meshgen.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gec {

namespace {

int perm_sign(const std::vector<int>& perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

}  // namespace

ComplexPtr kuhn_box(int dim, int subdivisions) {
    if (dim < 1) throw std::invalid_argument("box dimension must be positive");
    if (subdivisions < 1) throw std::invalid_argument("subdivision count must be positive");
    const int n = subdivisions + 1;

    // Lattice points i/sub per axis, mixed-radix vertex ids.
    std::vector<Point> coords;
    std::vector<int> idx(dim, 0);
    while (true) {
        Point p(dim);
        for (int a = 0; a < dim; ++a) p[a] = frac(idx[a], subdivisions);
        coords.push_back(std::move(p));
        int a = 0;
        while (a < dim && ++idx[a] == n) idx[a++] = 0;
        if (a == dim) break;
    }
    auto vertex_id = [&](const std::vector<int>& v) {
        int id = 0;
        for (int a = dim - 1; a >= 0; --a) id = id * n + v[a];
        return id;
    };

    std::vector<VertexList> tops;
    std::vector<int> base(dim, 0);
    std::vector<int> perm(dim);
    while (true) {
        std::iota(perm.begin(), perm.end(), 0);
        do {
            VertexList simplex;
            simplex.reserve(dim + 1);
            std::vector<int> walk = base;
            simplex.push_back(vertex_id(walk));
            for (int step = 0; step < dim; ++step) {
                ++walk[perm[step]];
                simplex.push_back(vertex_id(walk));
            }
            // Edge-vector determinant carries the permutation sign; swap the
            // last two vertices when negative so every top chart is positive.
            if (perm_sign(perm) < 0) std::swap(simplex[dim], simplex[dim - 1]);
            tops.push_back(std::move(simplex));
        } while (std::next_permutation(perm.begin(), perm.end()));

        int a = 0;
        while (a < dim && ++base[a] == subdivisions) base[a++] = 0;
        if (a == dim) break;
    }
    return SimplicialComplex::build(dim, std::move(coords), tops);
}

ComplexPtr standard_simplex_mesh(int dim) {
    if (dim < 1) throw std::invalid_argument("simplex dimension must be positive");
    std::vector<Point> coords(dim + 1, Point(dim, Rat(0)));
    for (int a = 0; a < dim; ++a) coords[a + 1][a] = 1;
    VertexList top(dim + 1);
    std::iota(top.begin(), top.end(), 0);
    return SimplicialComplex::build(dim, std::move(coords), {top});
}

}  // namespace gec
