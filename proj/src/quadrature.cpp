#include "gec/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace gec {

QuadratureRule grundmann_moller(int dim, int index) {
    if (dim < 1) throw std::invalid_argument("quadrature dimension must be positive");
    if (index < 0) throw std::invalid_argument("quadrature index must be non-negative");
    const int s = index;
    const int degree = 2 * s + 1;

    std::vector<double> factorial(degree + dim + 1, 1.0);
    for (std::size_t i = 1; i < factorial.size(); ++i)
        factorial[i] = factorial[i - 1] * static_cast<double>(i);

    QuadratureRule rule;
    rule.dim = dim;
    rule.index = s;
    rule.exact_degree = degree;

    for (int i = 0; i <= s; ++i) {
        const int denom = degree + dim - 2 * i;
        double weight = std::pow(2.0, -2.0 * s) *
                        std::pow(static_cast<double>(denom), degree) /
                        (factorial[i] * factorial[degree + dim - i]);
        if (i % 2 == 1) weight = -weight;

        // All exponent tuples with |beta| <= s - i.
        const int cap = s - i;
        std::vector<int> beta(dim, 0);
        while (true) {
            QuadraturePoint q;
            q.weight = weight;
            q.coords.resize(dim);
            for (int a = 0; a < dim; ++a)
                q.coords[a] = static_cast<double>(2 * beta[a] + 1) / denom;
            rule.points.push_back(std::move(q));

            int a = 0;
            while (a < dim) {
                ++beta[a];
                int total = 0;
                for (int b : beta) total += b;
                if (total <= cap) break;
                beta[a] = 0;
                ++a;
            }
            if (a == dim) break;
        }
    }
    return rule;
}

}  // namespace gec
