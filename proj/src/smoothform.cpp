#include "gec/smoothform.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace gec {

namespace {

// Sorts axes ascending, returning the permutation sign; 0 on a repeated axis.
int sort_axes(AxisList& axes) {
    int sign = 1;
    for (std::size_t i = 1; i < axes.size(); ++i) {
        int v = axes[i];
        std::size_t j = i;
        while (j > 0 && axes[j - 1] > v) {
            axes[j] = axes[j - 1];
            --j;
            sign = -sign;
        }
        axes[j] = v;
    }
    for (std::size_t i = 1; i < axes.size(); ++i)
        if (axes[i] == axes[i - 1]) return 0;
    return sign;
}

// Merge of two increasing disjoint axis lists; sign counts the transpositions
// moving B's entries past A's larger ones. Returns nullopt on a shared axis.
std::optional<AxisList> merge_axes(const AxisList& a, const AxisList& b, int& sign) {
    sign = 1;
    for (int x : b) {
        std::size_t greater = 0;
        for (int y : a) {
            if (y == x) return std::nullopt;
            if (y > x) ++greater;
        }
        if (greater % 2 == 1) sign = -sign;
    }
    AxisList out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void check_axes_range(const AxisList& axes, int nvars) {
    for (int a : axes)
        if (a < 0 || a >= nvars) throw std::invalid_argument("axis index out of range");
}

}  // namespace

std::vector<AxisList> increasing_subsets(int n, int k) {
    std::vector<AxisList> out;
    if (k < 0 || k > n) return out;
    AxisList cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

AffineMap AffineMap::identity(int n) {
    AffineMap f;
    f.src_dim = n;
    f.tgt_dim = n;
    f.origin.assign(n, Rat(0));
    f.dirs.assign(n, Point(n, Rat(0)));
    for (int i = 0; i < n; ++i) f.dirs[i][i] = 1;
    return f;
}

AffineMap AffineMap::from_simplex(const std::vector<Point>& pts) {
    if (pts.empty()) throw std::invalid_argument("chart needs at least one point");
    const int n = static_cast<int>(pts[0].size());
    for (const auto& p : pts)
        if (static_cast<int>(p.size()) != n)
            throw std::invalid_argument("chart points disagree in dimension");
    AffineMap f;
    f.src_dim = static_cast<int>(pts.size()) - 1;
    f.tgt_dim = n;
    f.origin = pts[0];
    f.dirs.resize(f.src_dim);
    for (int i = 0; i < f.src_dim; ++i) {
        f.dirs[i].resize(n);
        for (int j = 0; j < n; ++j) f.dirs[i][j] = pts[i + 1][j] - pts[0][j];
    }
    return f;
}

Point AffineMap::apply(const Point& u) const {
    if (static_cast<int>(u.size()) != src_dim)
        throw std::invalid_argument("affine map argument has wrong dimension");
    Point out = origin;
    for (int i = 0; i < src_dim; ++i)
        for (int j = 0; j < tgt_dim; ++j) out[j] += dirs[i][j] * u[i];
    return out;
}

std::vector<Poly> AffineMap::coordinate_polys() const {
    std::vector<Poly> out;
    out.reserve(tgt_dim);
    for (int j = 0; j < tgt_dim; ++j) {
        Poly p = Poly::constant(src_dim, origin[j]);
        for (int i = 0; i < src_dim; ++i) {
            Exponents e(src_dim, 0);
            e[i] = 1;
            p.add_term(e, dirs[i][j]);
        }
        out.push_back(std::move(p));
    }
    return out;
}

AffineMap AffineMap::inverse() const {
    if (src_dim != tgt_dim) throw std::invalid_argument("only square affine maps invert");
    const int n = src_dim;
    // Gauss-Jordan on [D | I], rows indexed by target axis.
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) m[j][i] = dirs[i][j];
        m[j][n + j] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::invalid_argument("affine map is not invertible");
        std::swap(m[col], m[piv]);
        Rat d = m[col][col];
        for (auto& x : m[col]) x /= d;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat factor = m[r][col];
            for (int c = 0; c < 2 * n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    AffineMap inv;
    inv.src_dim = n;
    inv.tgt_dim = n;
    inv.dirs.assign(n, Point(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.dirs[i][j] = m[j][n + i];
    // inverse(x) = D^{-1} (x - origin)
    inv.origin.assign(n, Rat(0));
    for (int j = 0; j < n; ++j)
        for (int c = 0; c < n; ++c) inv.origin[j] -= m[j][n + c] * origin[c];
    return inv;
}

Rat determinant(std::vector<std::vector<Rat>> m) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("determinant needs a square matrix");
    Rat det(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            std::swap(m[col], m[piv]);
            det = -det;
        }
        det *= m[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat factor = m[r][col] / m[col][col];
            for (int c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

PolyForm::PolyForm(int nvars, int degree) : nvars_(nvars), degree_(degree) {
    if (nvars < 0 || degree < 0) throw std::invalid_argument("negative form parameters");
}

PolyForm PolyForm::from_poly(const Poly& p) {
    PolyForm w(p.nvars(), 0);
    if (!p.is_zero()) w.add_term({}, p);
    return w;
}

void PolyForm::add_term(AxisList axes, const Poly& coeff) {
    if (static_cast<int>(axes.size()) != degree_)
        throw std::invalid_argument("axis count does not match form degree");
    check_axes_range(axes, nvars_);
    if (coeff.nvars() != nvars_)
        throw std::invalid_argument("coefficient variable count does not match the form");
    int sign = sort_axes(axes);
    if (sign == 0 || coeff.is_zero()) return;
    auto it = terms_.find(axes);
    if (it == terms_.end()) {
        terms_.emplace(std::move(axes), sign > 0 ? coeff : -coeff);
    } else {
        if (sign > 0)
            it->second += coeff;
        else
            it->second -= coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly PolyForm::coefficient(const AxisList& increasing_axes) const {
    auto it = terms_.find(increasing_axes);
    return it == terms_.end() ? Poly(nvars_) : it->second;
}

PolyForm& PolyForm::operator+=(const PolyForm& other) {
    if (other.nvars_ != nvars_ || other.degree_ != degree_)
        throw std::invalid_argument("form sum requires matching dimension and degree");
    for (const auto& [axes, c] : other.terms_) add_term(axes, c);
    return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& other) {
    if (other.nvars_ != nvars_ || other.degree_ != degree_)
        throw std::invalid_argument("form sum requires matching dimension and degree");
    for (const auto& [axes, c] : other.terms_) add_term(axes, -c);
    return *this;
}

PolyForm& PolyForm::operator*=(const Rat& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [axes, c] : terms_) c *= s;
    return *this;
}

PolyForm PolyForm::operator-() const {
    PolyForm out(nvars_, degree_);
    for (const auto& [axes, c] : terms_) out.terms_.emplace(axes, -c);
    return out;
}

bool PolyForm::operator==(const PolyForm& other) const {
    return nvars_ == other.nvars_ && degree_ == other.degree_ && terms_ == other.terms_;
}

PolyForm operator*(const Poly& s, const PolyForm& w) {
    PolyForm out(w.nvars(), w.degree());
    if (s.is_zero()) return out;
    for (const auto& [axes, c] : w.terms()) out.add_term(axes, s * c);
    return out;
}

PolyForm operator*(const Rat& s, PolyForm w) { return w *= s; }

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("wedge requires a shared variable space");
    PolyForm out(a.nvars(), a.degree() + b.degree());
    for (const auto& [axA, cA] : a.terms()) {
        for (const auto& [axB, cB] : b.terms()) {
            int sign = 1;
            auto merged = merge_axes(axA, axB, sign);
            if (!merged) continue;
            Poly c = cA * cB;
            if (sign < 0) c = -c;
            out.add_term(std::move(*merged), c);
        }
    }
    return out;
}

PolyForm exterior_derivative(const PolyForm& w) {
    PolyForm out(w.nvars(), w.degree() + 1);
    for (const auto& [axes, c] : w.terms()) {
        for (int j = 0; j < w.nvars(); ++j) {
            if (std::binary_search(axes.begin(), axes.end(), j)) continue;
            Poly dc = c.derivative(j);
            if (dc.is_zero()) continue;
            AxisList ext;
            ext.reserve(axes.size() + 1);
            ext.push_back(j);
            ext.insert(ext.end(), axes.begin(), axes.end());
            out.add_term(std::move(ext), dc);  // parity folded by add_term
        }
    }
    return out;
}

PolyForm pullback(const PolyForm& w, const AffineMap& f) {
    if (w.nvars() != f.tgt_dim)
        throw std::invalid_argument("pullback requires a form on the map's target");
    const int k = w.degree();
    PolyForm out(f.src_dim, k);
    if (w.is_zero() || k > f.src_dim) return out;
    const std::vector<Poly> coords = f.coordinate_polys();
    const std::vector<AxisList> subsets = increasing_subsets(f.src_dim, k);
    for (const auto& [axes, c] : w.terms()) {
        Poly composed = c.compose(coords);
        if (composed.is_zero()) continue;
        // dx_A pulls back to sum_B det(D[A,B]) du_B over increasing k-subsets.
        for (const auto& cols : subsets) {
            std::vector<std::vector<Rat>> minor(k, std::vector<Rat>(k));
            for (int p = 0; p < k; ++p)
                for (int q = 0; q < k; ++q) minor[p][q] = f.dirs[cols[q]][axes[p]];
            Rat det = determinant(std::move(minor));
            if (det == 0) continue;
            out.add_term(cols, det * composed);
        }
    }
    return out;
}

PolyMultivectorField::PolyMultivectorField(int nvars, int degree)
    : nvars_(nvars), degree_(degree) {
    if (nvars < 0 || degree < 0) throw std::invalid_argument("negative field parameters");
}

void PolyMultivectorField::add_term(AxisList axes, const Poly& coeff) {
    if (static_cast<int>(axes.size()) != degree_)
        throw std::invalid_argument("axis count does not match field degree");
    check_axes_range(axes, nvars_);
    if (coeff.nvars() != nvars_)
        throw std::invalid_argument("coefficient variable count does not match the field");
    int sign = sort_axes(axes);
    if (sign == 0 || coeff.is_zero()) return;
    auto it = terms_.find(axes);
    if (it == terms_.end()) {
        terms_.emplace(std::move(axes), sign > 0 ? coeff : -coeff);
    } else {
        if (sign > 0)
            it->second += coeff;
        else
            it->second -= coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly PolyMultivectorField::coefficient(const AxisList& increasing_axes) const {
    auto it = terms_.find(increasing_axes);
    return it == terms_.end() ? Poly(nvars_) : it->second;
}

Poly duality_pair(const PolyForm& w, const PolyMultivectorField& v) {
    if (w.nvars() != v.nvars())
        throw std::invalid_argument("pairing requires a shared variable space");
    if (w.degree() != v.degree())
        throw std::invalid_argument("pairing requires matching degrees");
    Poly out(w.nvars());
    for (const auto& [axes, c] : w.terms()) {
        Poly vc = v.coefficient(axes);
        if (!vc.is_zero()) out += c * vc;
    }
    return out;
}

Rat integrate_simplex(const PolyForm& w, const std::vector<Point>& pts, bool* degenerate) {
    const int k = static_cast<int>(pts.size()) - 1;
    if (k < 0) throw std::invalid_argument("integration needs at least one point");
    if (w.degree() != k)
        throw std::invalid_argument("form degree must match the simplex dimension");
    for (const auto& p : pts)
        if (static_cast<int>(p.size()) != w.nvars())
            throw std::invalid_argument("point dimension does not match the form");
    if (degenerate) *degenerate = k > 0 && affine_rank(pts) < k;
    if (k == 0) return w.coefficient({}).eval(pts[0]);
    // Rank-deficient charts kill every k x k minor, so this is 0 for
    // degenerate simplices without a special case.
    PolyForm pulled = pullback(w, AffineMap::from_simplex(pts));
    AxisList full(k);
    std::iota(full.begin(), full.end(), 0);
    return poly_simplex_integral(pulled.coefficient(full));
}

Rat integrate_over_chain(const PolyForm& w, const Chain& c) {
    if (w.degree() != c.degree())
        throw std::invalid_argument("form degree must match the chain degree");
    const auto& K = c.complex();
    if (w.nvars() != K->ambient_dim())
        throw std::invalid_argument("form dimension must match the ambient space");
    Rat out(0);
    for (const auto& [s, coeff] : c.coefficients())
        out += coeff * integrate_simplex(w, K->points_of(s));
    return out;
}

Cochain de_rham(const PolyForm& w, const ComplexPtr& K) {
    if (w.nvars() != K->ambient_dim())
        throw std::invalid_argument("form dimension must match the ambient space");
    if (w.degree() > K->top_dim())
        throw std::invalid_argument("form degree exceeds the complex dimension");
    Cochain out(K, w.degree());
    for (const auto& s : K->simplices(w.degree()))
        out.set(s, integrate_simplex(w, K->points_of(s)));
    return out;
}

}  // namespace gec
