#pragma once

#include <vector>

#include "gec/electro.hpp"

namespace gec {

// Linear functional on smooth forms, built from a chain by integration and
// transformed by contraction and boundary:
//   T(w) = integral over base of phi_1 ^ ... ^ phi_m ^ d^b(w)
// where the phi_i are the accumulated contraction forms and b counts the
// boundary applications (each one differentiates the argument). Degree k is
// the argument degree: base degree - sum deg(phi_i) - b.
class Current {
  public:
    static Current from_chain(Chain base);

    int degree() const { return degree_; }
    const Chain& base() const { return base_; }
    const std::vector<PolyForm>& contractions() const { return contractions_; }
    int boundary_applications() const { return boundary_count_; }

    // T contracted by phi: (T . phi)(w) = T(phi ^ w). Contractions compose
    // through the wedge, so they stack left to right. Not representable once
    // a boundary has been applied (the contraction would have to move inside
    // the derivative), so that order is rejected.
    Current contract(const PolyForm& phi) const;

    // dT(w) = T(dw). With no contractions this folds into the chain boundary;
    // afterwards it differentiates the argument at evaluation time.
    Current boundary() const;

    Rat evaluate(const PolyForm& w) const;

  private:
    explicit Current(Chain base) : degree_(base.degree()), base_(std::move(base)) {}

    int degree_ = 0;
    int boundary_count_ = 0;
    Chain base_;
    std::vector<PolyForm> contractions_;
};

// Every degree-`degree` form x^e dx_A with |e| <= max_total_degree, in a
// deterministic order. The spanning family for extensional identity checks.
std::vector<PolyForm> monomial_form_basis(int nvars, int degree, int max_total_degree);

// One test potential evaluated three ways:
//   direct        = total field power F_R(alpha),
//   boundary_form = (dR . g)(alpha),
//   split_form    = (R . J)(alpha) + sign * d(R . g)(alpha).
struct CurrentIdentityCase {
    Rat direct_power;
    Rat boundary_contract;
    Rat split_contract;
    bool consistent = false;
};

struct CurrentIdentityReport {
    std::vector<CurrentIdentityCase> cases;
    bool all_consistent = false;
};

// Verifies the force functional's three current realizations extensionally on
// the supplied family of test potentials.
CurrentIdentityReport force_functional_identity(const ComplexPtr& region, const PolyForm& g,
                                                const std::vector<PolyForm>& potentials,
                                                const ElectroConfig& cfg);

}  // namespace gec
