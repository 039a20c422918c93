#include "gec/polynomial.hpp"

#include <stdexcept>

namespace gec {

Poly Poly::constant(int nvars, const Rat& c) {
    Poly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Poly Poly::variable(int nvars, int axis) {
    if (axis < 0 || axis >= nvars) throw std::invalid_argument("variable axis out of range");
    Exponents e(nvars, 0);
    e[axis] = 1;
    return monomial(nvars, std::move(e), Rat(1));
}

Poly Poly::monomial(int nvars, Exponents e, const Rat& c) {
    if (static_cast<int>(e.size()) != nvars)
        throw std::invalid_argument("exponent arity does not match variable count");
    Poly p(nvars);
    p.add_term(e, c);
    return p;
}

int Poly::total_degree() const {
    int deg = 0;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (unsigned k : e) d += static_cast<int>(k);
        deg = std::max(deg, d);
    }
    return deg;
}

void Poly::add_term(const Exponents& e, const Rat& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("exponent arity does not match variable count");
    if (c == 0) return;
    Rat& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
}

Poly& Poly::operator+=(const Poly& other) {
    if (other.nvars_ != nvars_) throw std::invalid_argument("polynomial variable count mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    if (other.nvars_ != nvars_) throw std::invalid_argument("polynomial variable count mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Rat& scale) {
    if (scale == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scale;
    return *this;
}

Poly Poly::operator*(const Poly& other) const {
    if (other.nvars_ != nvars_) throw std::invalid_argument("polynomial variable count mismatch");
    Poly out(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) {
            Exponents e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

Poly Poly::operator-() const {
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

bool Poly::operator==(const Poly& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
}

Poly Poly::derivative(int axis) const {
    if (axis < 0 || axis >= nvars_) throw std::invalid_argument("derivative axis out of range");
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[axis] == 0) continue;
        Exponents d = e;
        d[axis] -= 1;
        out.add_term(d, Rat(static_cast<long>(e[axis])) * c);
    }
    return out;
}

Poly Poly::compose(const std::vector<Poly>& subst) const {
    if (static_cast<int>(subst.size()) != nvars_)
        throw std::invalid_argument("substitution arity mismatch");
    const int out_vars = nvars_ == 0 ? 0 : subst[0].nvars();
    for (const auto& s : subst)
        if (s.nvars() != out_vars) throw std::invalid_argument("substitution variable count mismatch");

    // Power tables per input variable, built lazily up to the needed exponent.
    std::vector<std::vector<Poly>> pows(nvars_);
    auto power_of = [&](int axis, unsigned e) -> const Poly& {
        auto& table = pows[axis];
        if (table.empty()) table.push_back(Poly::constant(out_vars, Rat(1)));
        while (table.size() <= e) table.push_back(table.back() * subst[axis]);
        return table[e];
    };

    Poly out(out_vars);
    for (const auto& [e, c] : terms_) {
        Poly term = Poly::constant(out_vars, c);
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) term = term * power_of(i, e[i]);
        out += term;
    }
    return out;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("evaluation point arity mismatch");
    Rat out(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
        out += t;
    }
    return out;
}

double Poly::eval_double(const std::vector<double>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("evaluation point arity mismatch");
    double out = 0;
    for (const auto& [e, c] : terms_) {
        double t = rat_to_double(c);
        for (int i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
        out += t;
    }
    return out;
}

Rat monomial_simplex_integral(int nvars, const Exponents& e) {
    if (static_cast<int>(e.size()) != nvars)
        throw std::invalid_argument("exponent arity does not match variable count");
    unsigned long total = 0;
    Rat num(1);
    for (unsigned k : e) {
        num *= rat_factorial(k);
        total += k;
    }
    return num / rat_factorial(static_cast<unsigned long>(nvars) + total);
}

Rat poly_simplex_integral(const Poly& p) {
    Rat out(0);
    for (const auto& [e, c] : p.terms()) out += c * monomial_simplex_integral(p.nvars(), e);
    return out;
}

}  // namespace gec
