#include "gec/complex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gec {

namespace {

std::string vertices_to_string(const VertexList& v) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << "]";
    return out.str();
}

// Sorts ascending and returns the permutation parity (+1/-1).
int sort_with_parity(VertexList& v) {
    int sign = 1;
    for (std::size_t i = 1; i < v.size(); ++i)
        for (std::size_t j = i; j > 0 && v[j] < v[j - 1]; --j) {
            std::swap(v[j], v[j - 1]);
            sign = -sign;
        }
    return sign;
}

}  // namespace

Simplex::Simplex(const VertexList& ordered) : vertices(ordered) {
    sign = sort_with_parity(vertices);
    for (std::size_t i = 1; i < vertices.size(); ++i)
        if (vertices[i] == vertices[i - 1])
            throw std::invalid_argument("simplex has duplicate vertex " +
                                        std::to_string(vertices[i]) + " in " +
                                        vertices_to_string(ordered));
}

Simplex::Simplex(VertexList canonical_vertices, int orientation_sign)
    : vertices(std::move(canonical_vertices)), sign(orientation_sign) {
    if (!std::is_sorted(vertices.begin(), vertices.end()) ||
        std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw std::invalid_argument("not a canonical vertex list: " + vertices_to_string(vertices));
    if (sign != 1 && sign != -1) throw std::invalid_argument("orientation sign must be +1 or -1");
}

int affine_rank(const std::vector<Point>& points) {
    if (points.empty()) return -1;
    const std::size_t n = points[0].size();
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 1; i < points.size(); ++i) {
        std::vector<Rat> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = points[i][j] - points[0][j];
        rows.push_back(std::move(row));
    }
    // Gaussian elimination over Q.
    int rank = 0;
    std::size_t col = 0;
    while (rank < static_cast<int>(rows.size()) && col < n) {
        std::size_t pivot = rows.size();
        for (std::size_t i = rank; i < rows.size(); ++i)
            if (rows[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot == rows.size()) {
            ++col;
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            Rat f = rows[i][col] / rows[rank][col];
            for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
        ++col;
    }
    return rank;
}

ComplexPtr SimplicialComplex::build(int ambient_dim, std::vector<Point> vertex_coords,
                                    const std::vector<VertexList>& top_simplices, int top_dim) {
    std::vector<Simplex> tops;
    tops.reserve(top_simplices.size());
    for (const auto& t : top_simplices) tops.emplace_back(t);
    return build_signed(ambient_dim, std::move(vertex_coords), tops,
                        top_dim < 0 ? ambient_dim : top_dim);
}

ComplexPtr SimplicialComplex::build_signed(int ambient_dim, std::vector<Point> vertex_coords,
                                           const std::vector<Simplex>& top_simplices, int top_dim) {
    if (ambient_dim < 1) throw std::invalid_argument("ambient dimension must be >= 1");
    if (top_dim < 0 || top_dim > ambient_dim)
        throw std::invalid_argument("top dimension out of range");
    for (const auto& p : vertex_coords)
        if (static_cast<int>(p.size()) != ambient_dim)
            throw std::invalid_argument("vertex coordinate arity mismatch");

    auto K = std::shared_ptr<SimplicialComplex>(new SimplicialComplex());
    K->ambient_dim_ = ambient_dim;
    K->top_dim_ = top_dim;
    K->vertex_coords_ = std::move(vertex_coords);
    K->skeleton_.assign(top_dim + 1, {});

    const int nverts = static_cast<int>(K->vertex_coords_.size());
    for (const auto& s : top_simplices) {
        if (s.dim() != top_dim)
            throw std::invalid_argument("top simplex " + vertices_to_string(s.vertices) +
                                        " has dimension " + std::to_string(s.dim()) +
                                        ", expected " + std::to_string(top_dim));
        for (int v : s.vertices)
            if (v < 0 || v >= nverts)
                throw std::invalid_argument("vertex index " + std::to_string(v) +
                                            " out of range in " + vertices_to_string(s.vertices));
        if (!K->skeleton_[top_dim].insert(s.vertices).second)
            throw std::invalid_argument("duplicate top simplex " + vertices_to_string(s.vertices));
        if (affine_rank(K->points_of(s.vertices)) != top_dim)
            throw std::invalid_argument("degenerate embedded simplex " +
                                        vertices_to_string(s.vertices) +
                                        " (affine volume is zero)");
        K->top_.push_back(s);

        // Face closure: every nonempty proper subset, canonical by construction.
        const std::size_t m = s.vertices.size();
        for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << m); ++mask) {
            VertexList face;
            for (std::size_t i = 0; i < m; ++i)
                if (mask & (std::size_t(1) << i)) face.push_back(s.vertices[i]);
            K->skeleton_[face.size() - 1].insert(std::move(face));
        }
    }
    return K;
}

const std::set<VertexList>& SimplicialComplex::simplices(int k) const {
    if (k < 0 || k > top_dim_) throw std::out_of_range("simplex dimension out of range");
    return skeleton_[k];
}

bool SimplicialComplex::has_simplex(const VertexList& canonical) const {
    int k = static_cast<int>(canonical.size()) - 1;
    if (k < 0 || k > top_dim_) return false;
    return skeleton_[k].count(canonical) > 0;
}

std::vector<Point> SimplicialComplex::points_of(const VertexList& vertices) const {
    std::vector<Point> pts;
    pts.reserve(vertices.size());
    for (int v : vertices) pts.push_back(vertex_coords_.at(v));
    return pts;
}

Chain::Chain(ComplexPtr complex, int degree) : degree_(degree), complex_(std::move(complex)) {
    if (!complex_) throw std::invalid_argument("chain requires a complex");
    if (degree_ < 0 || degree_ > complex_->top_dim())
        throw std::invalid_argument("chain degree out of range");
}

void Chain::add(const Simplex& s, const Rat& c) { add_canonical(s.vertices, Rat(s.sign) * c); }

void Chain::add_canonical(const VertexList& canonical, const Rat& c) {
    if (static_cast<int>(canonical.size()) != degree_ + 1)
        throw std::invalid_argument("simplex dimension does not match chain degree");
    if (!complex_->has_simplex(canonical))
        throw std::invalid_argument("simplex " + vertices_to_string(canonical) +
                                    " does not belong to the complex");
    Rat& slot = coeffs_[canonical];
    slot += c;
    if (slot == 0) coeffs_.erase(canonical);
}

Rat Chain::coefficient(const VertexList& canonical) const {
    auto it = coeffs_.find(canonical);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

bool Chain::is_zero() const {
    for (const auto& [s, c] : coeffs_)
        if (c != 0) return false;
    return true;
}

Chain& Chain::operator+=(const Chain& other) {
    if (other.degree_ != degree_ || other.complex_ != complex_)
        throw std::invalid_argument("chain sum requires matching degree and complex");
    for (const auto& [s, c] : other.coeffs_) add_canonical(s, c);
    return *this;
}

Chain& Chain::operator*=(const Rat& scale) {
    if (scale == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [s, c] : coeffs_) c *= scale;
    return *this;
}

bool Chain::operator==(const Chain& other) const {
    if (degree_ != other.degree_ || complex_ != other.complex_) return false;
    Chain diff = *this;
    for (const auto& [s, c] : other.coeffs_) diff.add_canonical(s, -c);
    return diff.is_zero();
}

Chain boundary_chain(const Chain& c) {
    if (c.degree() < 1) throw std::invalid_argument("boundary of a 0-chain is undefined");
    Chain out(c.complex(), c.degree() - 1);
    for (const auto& [s, coeff] : c.coefficients()) {
        int sign = 1;
        for (std::size_t i = 0; i < s.size(); ++i) {
            VertexList face;
            face.reserve(s.size() - 1);
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != i) face.push_back(s[j]);
            out.add_canonical(face, Rat(sign) * coeff);
            sign = -sign;
        }
    }
    return out;
}

Chain region_chain(const ComplexPtr& complex) {
    if (!complex) throw std::invalid_argument("region_chain requires a complex");
    Chain out(complex, complex->top_dim());
    for (const auto& s : complex->top_simplices()) out.add(s, Rat(1));
    return out;
}

BoundaryComplex boundary_subcomplex(const ComplexPtr& complex) {
    Chain b = boundary_chain(region_chain(complex));
    std::vector<Simplex> faces;
    for (const auto& [verts, coeff] : b.coefficients()) {
        if (coeff == 0) continue;
        faces.emplace_back(verts, coeff > 0 ? 1 : -1);
    }
    BoundaryComplex out;
    out.parent = complex;
    out.surface = SimplicialComplex::build_signed(complex->ambient_dim(),
                                                  complex->vertex_coords(), faces,
                                                  complex->top_dim() - 1);
    return out;
}

}  // namespace gec
