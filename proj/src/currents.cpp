#include "gec/currents.hpp"

#include <stdexcept>

namespace gec {

Current Current::from_chain(Chain base) { return Current(std::move(base)); }

Current Current::contract(const PolyForm& phi) const {
    if (boundary_count_ > 0)
        throw std::invalid_argument(
            "contraction after a boundary is not representable in this form");
    if (phi.nvars() != base_.complex()->ambient_dim())
        throw std::invalid_argument("contraction form dimension mismatch");
    if (phi.degree() > degree_)
        throw std::invalid_argument("contraction degree exceeds the current degree");
    Current t = *this;
    t.degree_ -= phi.degree();
    t.contractions_.push_back(phi);
    return t;
}

Current Current::boundary() const {
    if (degree_ < 1) throw std::invalid_argument("boundary of a degree-0 current");
    Current t = *this;
    t.degree_ -= 1;
    if (contractions_.empty() && boundary_count_ == 0) {
        t.base_ = boundary_chain(base_);
    } else {
        ++t.boundary_count_;
    }
    return t;
}

Rat Current::evaluate(const PolyForm& w) const {
    if (w.degree() != degree_)
        throw std::invalid_argument("argument degree does not match the current");
    if (w.nvars() != base_.complex()->ambient_dim())
        throw std::invalid_argument("argument dimension mismatch");
    PolyForm arg = w;
    for (int i = 0; i < boundary_count_; ++i) arg = exterior_derivative(arg);
    PolyForm integrand = arg;
    for (auto it = contractions_.rbegin(); it != contractions_.rend(); ++it)
        integrand = wedge(*it, integrand);
    return integrate_over_chain(integrand, base_);
}

std::vector<PolyForm> monomial_form_basis(int nvars, int degree, int max_total_degree) {
    if (degree > nvars) return {};
    // Exponent vectors grouped by total degree, lexicographic within a group.
    std::vector<Exponents> exps;
    for (int total = 0; total <= max_total_degree; ++total) {
        Exponents e(nvars, 0);
        while (true) {
            int sum = 0;
            for (unsigned v : e) sum += static_cast<int>(v);
            if (sum == total) exps.push_back(e);
            int a = nvars - 1;
            while (a >= 0 && static_cast<int>(++e[a]) > total) e[a--] = 0;
            if (a < 0) break;
        }
    }

    std::vector<PolyForm> out;
    for (const auto& axes : increasing_subsets(nvars, degree)) {
        for (const auto& e : exps) {
            PolyForm w(nvars, degree);
            w.add_term(axes, Poly::monomial(nvars, e, Rat(1)));
            out.push_back(std::move(w));
        }
    }
    return out;
}

CurrentIdentityReport force_functional_identity(const ComplexPtr& region, const PolyForm& g,
                                                const std::vector<PolyForm>& potentials,
                                                const ElectroConfig& cfg) {
    cfg.validate();
    const Rat sign(cfg.boundary_sign());
    Current R = Current::from_chain(region_chain(region));
    Current boundary_form = R.boundary().contract(g);
    Current charge_form = R.contract(exterior_derivative(g));
    Current gradient_form = R.contract(g).boundary();

    CurrentIdentityReport report;
    report.all_consistent = true;
    for (const auto& alpha : potentials) {
        CurrentIdentityCase c;
        c.direct_power = total_power(region, g, alpha, cfg);
        c.boundary_contract = boundary_form.evaluate(alpha);
        c.split_contract = charge_form.evaluate(alpha) + sign * gradient_form.evaluate(alpha);
        c.consistent = c.direct_power == c.boundary_contract &&
                       c.boundary_contract == c.split_contract;
        report.all_consistent = report.all_consistent && c.consistent;
        report.cases.push_back(std::move(c));
    }
    return report;
}

}  // namespace gec
