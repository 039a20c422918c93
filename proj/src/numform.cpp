#include "gec/numform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gec/meshgen.hpp"

namespace gec {

namespace {

// Insertion sort returning the permutation sign, 0 if an axis repeats.
int sort_axes_num(AxisList& axes) {
    int sign = 1;
    for (std::size_t i = 1; i < axes.size(); ++i) {
        std::size_t j = i;
        while (j > 0 && axes[j] < axes[j - 1]) {
            std::swap(axes[j], axes[j - 1]);
            sign = -sign;
            --j;
        }
        if (j > 0 && axes[j] == axes[j - 1]) return 0;
    }
    return sign;
}


double det(std::vector<std::vector<double>> m) {
    const std::size_t n = m.size();
    double result = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        if (m[pivot][col] == 0.0) return 0.0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            result = -result;
        }
        result *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            double f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return result;
}

}  // namespace

NumForm::NumForm(int nvars, int degree) : nvars_(nvars), degree_(degree) {
    if (nvars < 0 || degree < 0) throw std::invalid_argument("NumForm: negative nvars or degree");
}

void NumForm::add_term(AxisList axes, Coeff coeff) {
    if ((int)axes.size() != degree_) throw std::invalid_argument("NumForm::add_term: axis count != degree");
    for (int a : axes)
        if (a < 0 || a >= nvars_) throw std::invalid_argument("NumForm::add_term: axis out of range");
    int sign = sort_axes_num(axes);
    if (sign == 0) return;
    if (sign < 0) {
        Coeff inner = std::move(coeff);
        coeff = [inner](const std::vector<double>& x) { return -inner(x); };
    }
    terms_.emplace_back(std::move(axes), std::move(coeff));
}

double NumForm::coefficient_at(const AxisList& axes, const std::vector<double>& x) const {
    double total = 0.0;
    for (const auto& [a, c] : terms_)
        if (a == axes) total += c(x);
    return total;
}

NumForm wedge(const NumForm& a, const NumForm& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("wedge: variable count mismatch");
    NumForm out(a.nvars(), a.degree() + b.degree());
    for (const auto& [aa, ac] : a.terms()) {
        for (const auto& [ba, bc] : b.terms()) {
            // add_term folds the sorting sign of the concatenation, which is
            // exactly the wedge's merge sign; duplicates drop there too.
            AxisList merged = aa;
            merged.insert(merged.end(), ba.begin(), ba.end());
            NumForm::Coeff af = ac, bf = bc;
            out.add_term(std::move(merged), [af, bf](const std::vector<double>& x) {
                return af(x) * bf(x);
            });
        }
    }
    return out;
}

double integrate_simplex_num(const NumForm& w,
                             const std::vector<std::vector<Rat>>& pts,
                             const QuadratureRule& rule) {
    const int k = w.degree();
    if ((int)pts.size() != k + 1) throw std::invalid_argument("integrate_simplex_num: vertex count != degree + 1");
    const int ambient = (int)pts[0].size();
    if (ambient != w.nvars()) throw std::invalid_argument("integrate_simplex_num: ambient dimension mismatch");
    if (rule.dim != k) throw std::invalid_argument("integrate_simplex_num: rule dimension mismatch");

    std::vector<double> origin(ambient);
    for (int i = 0; i < ambient; ++i) origin[i] = rat_to_double(pts[0][i]);
    // dirs[j][i]: component i of edge vector j.
    std::vector<std::vector<double>> dirs(k, std::vector<double>(ambient));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < ambient; ++i)
            dirs[j][i] = rat_to_double(pts[j + 1][i]) - rat_to_double(pts[0][i]);

    if (k == 0) {
        return w.coefficient_at({}, origin);
    }

    // Jacobian minor for one increasing axis set, constant over the simplex.
    auto minor_det = [&](const AxisList& axes) {
        std::vector<std::vector<double>> m(k, std::vector<double>(k));
        for (int p = 0; p < k; ++p)
            for (int q = 0; q < k; ++q)
                m[p][q] = dirs[q][axes[p]];
        return det(m);
    };

    std::vector<AxisList> sets;
    std::vector<double> minors;
    for (const auto& axes : increasing_subsets(ambient, k)) {
        double d = minor_det(axes);
        if (d != 0.0) {
            sets.push_back(axes);
            minors.push_back(d);
        }
    }
    if (sets.empty()) return 0.0;

    // Quadrature weights carry the reference simplex volume, so the sum of
    // weighted samples of the pulled-back density is already the integral.
    double total = 0.0;
    std::vector<double> x(ambient);
    for (const auto& qp : rule.points) {
        for (int i = 0; i < ambient; ++i) {
            double xi = origin[i];
            for (int j = 0; j < k; ++j) xi += dirs[j][i] * qp.coords[j];
            x[i] = xi;
        }
        double density = 0.0;
        for (std::size_t t = 0; t < sets.size(); ++t)
            density += w.coefficient_at(sets[t], x) * minors[t];
        total += qp.weight * density;
    }
    return total;
}

double integrate_over_chain_num(const NumForm& w, const Chain& c,
                                const QuadratureRule& rule) {
    if (c.degree() != w.degree()) throw std::invalid_argument("integrate_over_chain_num: degree mismatch");
    double total = 0.0;
    for (const auto& [verts, coeff] : c.coefficients()) {
        double piece = integrate_simplex_num(w, c.complex()->points_of(verts), rule);
        total += rat_to_double(coeff) * piece;
    }
    return total;
}

NumFieldBundle builtin_trig_bundle() {
    using V = std::vector<double>;
    NumForm g(3, 1), dg(3, 2), alpha(3, 1), dalpha(3, 2);

    // g = sin(x) dy + cos(y) dz
    g.add_term({1}, [](const V& x) { return std::sin(x[0]); });
    g.add_term({2}, [](const V& x) { return std::cos(x[1]); });
    // dg = cos(x) dx^dy - sin(y) dy^dz
    dg.add_term({0, 1}, [](const V& x) { return std::cos(x[0]); });
    dg.add_term({1, 2}, [](const V& x) { return -std::sin(x[1]); });

    // alpha = sin(z) dx + sin(y) dz
    alpha.add_term({0}, [](const V& x) { return std::sin(x[2]); });
    alpha.add_term({2}, [](const V& x) { return std::sin(x[1]); });
    // dalpha = cos(z) dz^dx + cos(y) dy^dz
    dalpha.add_term({2, 0}, [](const V& x) { return std::cos(x[2]); });
    dalpha.add_term({1, 2}, [](const V& x) { return std::cos(x[1]); });

    return {std::move(g), std::move(dg), std::move(alpha), std::move(dalpha)};
}

double power_boundary_num(const NumFieldBundle& f, const ComplexPtr& K,
                          const QuadratureRule& rule) {
    Chain region = region_chain(K);
    Chain bdry = boundary_chain(region);
    NumForm w = wedge(f.g, f.alpha);
    return integrate_over_chain_num(w, bdry, rule);
}

double power_bulk_num(const NumFieldBundle& f, int sign,
                      const ComplexPtr& K, const QuadratureRule& rule) {
    Chain region = region_chain(K);
    NumForm first = wedge(f.dg, f.alpha);
    NumForm second = wedge(f.g, f.dalpha);
    double total = integrate_over_chain_num(first, region, rule);
    total += sign * integrate_over_chain_num(second, region, rule);
    return total;
}

ConvergenceReport convergence_study(const NumFieldBundle& f, int sign,
                                    int levels, int rule_index) {
    const int dim = f.g.nvars();
    QuadratureRule face_rule = grundmann_moller(dim - 1, rule_index);
    QuadratureRule cell_rule = grundmann_moller(dim, rule_index);
    ConvergenceReport report;
    int sub = 1;
    for (int level = 0; level < levels; ++level, sub *= 2) {
        ComplexPtr K = kuhn_box(dim, sub);
        double boundary = power_boundary_num(f, K, face_rule);
        double bulk = power_bulk_num(f, sign, K, cell_rule);
        report.rows.push_back({sub, boundary, bulk, std::abs(boundary - bulk)});
    }
    report.first_order = true;
    for (std::size_t i = 0; i + 1 < report.rows.size(); ++i) {
        double a = report.rows[i].gap;
        double b = report.rows[i + 1].gap;
        if (b == 0.0) {
            // Gap already at machine level; treat as converged.
            report.orders.push_back(std::numeric_limits<double>::infinity());
            continue;
        }
        double order = std::log2(a / b);
        report.orders.push_back(order);
        if (order < 1.0) report.first_order = false;
    }
    return report;
}

}  // namespace gec
