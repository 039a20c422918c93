#pragma once

#include <map>
#include <memory>
#include <set>
#include <vector>

#include "gec/rational.hpp"

namespace gec {

// Canonical simplex key: strictly ascending vertex indices.
using VertexList = std::vector<int>;
using Point = std::vector<Rat>;

// Oriented simplex. Storage is canonical (ascending vertices) with the
// permutation parity of the given ordering folded into `sign`.
struct Simplex {
    VertexList vertices;
    int sign = 1;

    Simplex() = default;
    // From an arbitrary vertex ordering; throws on duplicate vertices.
    explicit Simplex(const VertexList& ordered);
    Simplex(VertexList canonical_vertices, int orientation_sign);

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
};

class SimplicialComplex;
using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

// Embedded simplicial complex: vertices in Q^n, simplices closed under faces.
// Top simplices have dimension `top_dim` (== ambient_dim for regions; one less
// for boundary subcomplexes) and must be affinely non-degenerate.
class SimplicialComplex {
  public:
    static ComplexPtr build(int ambient_dim, std::vector<Point> vertex_coords,
                            const std::vector<VertexList>& top_simplices, int top_dim = -1);
    // Variant taking already-canonical simplices with explicit orientation signs.
    static ComplexPtr build_signed(int ambient_dim, std::vector<Point> vertex_coords,
                                   const std::vector<Simplex>& top_simplices, int top_dim);

    int ambient_dim() const { return ambient_dim_; }
    int top_dim() const { return top_dim_; }
    const std::vector<Point>& vertex_coords() const { return vertex_coords_; }

    // Canonical k-simplices, k = 0 .. top_dim.
    const std::set<VertexList>& simplices(int k) const;
    const std::vector<Simplex>& top_simplices() const { return top_; }

    bool has_simplex(const VertexList& canonical) const;
    std::size_t count(int k) const { return simplices(k).size(); }

    // Coordinates of a simplex's vertices, in the order given.
    std::vector<Point> points_of(const VertexList& vertices) const;

  private:
    SimplicialComplex() = default;

    int ambient_dim_ = 0;
    int top_dim_ = 0;
    std::vector<Point> vertex_coords_;
    std::vector<std::set<VertexList>> skeleton_;  // skeleton_[k]
    std::vector<Simplex> top_;
};

// Formal linear combination of canonical k-simplices with exact coefficients.
class Chain {
  public:
    Chain(ComplexPtr complex, int degree);

    int degree() const { return degree_; }
    const ComplexPtr& complex() const { return complex_; }
    const std::map<VertexList, Rat>& coefficients() const { return coeffs_; }

    // Adds c times the oriented simplex (folds the orientation sign).
    void add(const Simplex& s, const Rat& c);
    void add_canonical(const VertexList& canonical, const Rat& c);
    Rat coefficient(const VertexList& canonical) const;

    bool is_zero() const;
    Chain& operator+=(const Chain& other);
    Chain& operator*=(const Rat& scale);
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator*(const Rat& s, Chain c) { return c *= s; }
    bool operator==(const Chain& other) const;

  private:
    int degree_;
    std::map<VertexList, Rat> coeffs_;
    ComplexPtr complex_;
};

// d[v0..vk] = sum_i (-1)^i [v0..^vi..vk], extended linearly. Exact.
Chain boundary_chain(const Chain& c);

// Sum of all top simplices with their stored orientations.
Chain region_chain(const ComplexPtr& complex);

// The (d-1)-faces of the region boundary with induced orientations. Vertex
// indices and coordinates are shared with the parent complex, so the inclusion
// map on vertices is the identity. Faces appearing in the boundary chain with
// |coefficient| > 1 (non-manifold gluings) take orientation sign(coefficient).
struct BoundaryComplex {
    ComplexPtr surface;
    ComplexPtr parent;
};

BoundaryComplex boundary_subcomplex(const ComplexPtr& complex);

// Rank of the affine hull direction space of a point tuple; exact.
int affine_rank(const std::vector<Point>& points);

}  // namespace gec
