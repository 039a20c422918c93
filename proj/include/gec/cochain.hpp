#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "gec/complex.hpp"

namespace gec {

// Discrete degree-r form: a value per canonical r-simplex, missing = 0.
// S is the scalar mode: Rat (exact, the default for every identity suite) or
// double (float mode, convergence studies only).
template <class S>
class BasicCochain {
  public:
    BasicCochain(ComplexPtr complex, int degree) : degree_(degree), complex_(std::move(complex)) {
        if (!complex_) throw std::invalid_argument("cochain requires a complex");
        if (degree_ < 0 || degree_ > complex_->top_dim())
            throw std::invalid_argument("cochain degree out of range");
    }

    static constexpr bool exact_mode = !std::is_floating_point_v<S>;

    int degree() const { return degree_; }
    const ComplexPtr& complex() const { return complex_; }
    const std::map<VertexList, S>& values() const { return values_; }

    void set(const VertexList& canonical, const S& v) {
        if (static_cast<int>(canonical.size()) != degree_ + 1)
            throw std::invalid_argument("simplex dimension does not match cochain degree");
        if (!complex_->has_simplex(canonical))
            throw std::invalid_argument("cochain value on a simplex outside the complex");
        if (v == S(0))
            values_.erase(canonical);
        else
            values_[canonical] = v;
    }

    S value(const VertexList& canonical) const {
        auto it = values_.find(canonical);
        return it == values_.end() ? S(0) : it->second;
    }

    bool is_zero() const { return values_.empty();  }

    BasicCochain& operator+=(const BasicCochain& other) {
        if (other.degree_ != degree_ || other.complex_ != complex_)
            throw std::invalid_argument("cochain sum requires matching degree and complex");
        for (const auto& [s, v] : other.values_) set(s, value(s) + v);
        return *this;
    }
    BasicCochain& operator*=(const S& scale) {
        if (scale == S(0)) {
            values_.clear();
            return *this;
        }
        for (auto& [s, v] : values_) v *= scale;
        return *this;
    }
    friend BasicCochain operator+(BasicCochain a, const BasicCochain& b) { return a += b; }
    bool operator==(const BasicCochain& other) const {
        if (degree_ != other.degree_ || complex_ != other.complex_) return false;
        for (const auto& [s, v] : values_)
            if (other.value(s) != v) return false;
        for (const auto& [s, v] : other.values_)
            if (value(s) != v) return false;
        return true;
    }

  private:
    int degree_;
    std::map<VertexList, S> values_;
    ComplexPtr complex_;
};

using Cochain = BasicCochain<Rat>;
using CochainF = BasicCochain<double>;

namespace detail {
inline Rat chain_scalar(const Rat& c, const Rat&) { return c; }
inline double chain_scalar(const Rat& c, const double&) { return rat_to_double(c); }
}  // namespace detail

// <omega, c> = sum_s c(s) * omega(s). Bilinear; the discrete integral.
template <class S>
S pair_chain(const BasicCochain<S>& omega, const Chain& c) {
    if (omega.degree() != c.degree())
        throw std::invalid_argument("pairing requires matching degrees");
    if (omega.complex() != c.complex())
        throw std::invalid_argument("pairing requires a shared complex");
    S out(0);
    for (const auto& [s, coeff] : c.coefficients())
        out += detail::chain_scalar(coeff, S(0)) * omega.value(s);
    return out;
}

// (d omega)(s) = omega(ds). Defined so the discrete Stokes identity is exact.
template <class S>
BasicCochain<S> coboundary(const BasicCochain<S>& omega) {
    const auto& K = omega.complex();
    if (omega.degree() >= K->top_dim())
        throw std::invalid_argument("coboundary of a top-degree cochain is undefined");
    BasicCochain<S> out(K, omega.degree() + 1);
    for (const auto& t : K->simplices(omega.degree() + 1)) {
        S v(0);
        int sign = 1;
        for (std::size_t i = 0; i < t.size(); ++i) {
            VertexList face;
            face.reserve(t.size() - 1);
            for (std::size_t j = 0; j < t.size(); ++j)
                if (j != i) face.push_back(t[j]);
            v += S(sign) * omega.value(face);
            sign = -sign;
        }
        out.set(t, v);
    }
    return out;
}

// Simplicial cup product on ascending-ordered simplices:
//   (a cup b)[v0..v_{p+q}] = a[v0..v_p] * b[v_p..v_{p+q}].
// Satisfies the Leibniz rule exactly; graded commutativity does NOT hold at
// the cochain level and must not be assumed.
template <class S>
BasicCochain<S> cup(const BasicCochain<S>& a, const BasicCochain<S>& b) {
    const auto& K = a.complex();
    if (b.complex() != K) throw std::invalid_argument("cup requires a shared complex");
    const int p = a.degree(), q = b.degree();
    if (p + q > K->top_dim()) throw std::invalid_argument("cup degree overflow");
    BasicCochain<S> out(K, p + q);
    for (const auto& s : K->simplices(p + q)) {
        VertexList front(s.begin(), s.begin() + p + 1);
        VertexList back(s.begin() + p, s.end());
        S v = a.value(front) * b.value(back);
        if (v != S(0)) out.set(s, v);
    }
    return out;
}

// Discrete pullback along the inclusion of a boundary subcomplex: keeps the
// values of omega on the simplices of D. Induced orientations live in D's
// region chain, not in the copied values.
template <class S>
BasicCochain<S> restrict_to(const BasicCochain<S>& omega, const BoundaryComplex& D) {
    if (omega.complex() != D.parent)
        throw std::invalid_argument("restriction requires a cochain on the parent complex");
    if (omega.degree() > D.surface->top_dim())
        throw std::invalid_argument("cochain degree exceeds the subcomplex dimension");
    BasicCochain<S> out(D.surface, omega.degree());
    for (const auto& s : D.surface->simplices(omega.degree())) {
        if (!omega.complex()->has_simplex(s))
            throw std::invalid_argument("subcomplex simplex missing from the parent complex");
        S v = omega.value(s);
        if (v != S(0)) out.set(s, v);
    }
    return out;
}

}  // namespace gec
