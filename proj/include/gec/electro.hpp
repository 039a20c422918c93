#pragma once

#include "gec/cochain.hpp"
#include "gec/stress.hpp"

namespace gec {

// Dimension/degree bookkeeping for the electrodynamic specialization: a
// potential variation is an r-form on d-dimensional spacetime, the Maxwell
// form g has degree d-r-1, and the parity (-1)^(d-r-1) is computed here and
// nowhere else.
struct ElectroConfig {
    int spacetime_dim = 3;
    int potential_degree = 1;
    // Negative control for the verification suites: deliberately flips the
    // parity below so every identity that consumes it must fail.
    bool flip_sign_for_testing = false;

    int maxwell_degree() const { return spacetime_dim - potential_degree - 1; }
    int charge_degree() const { return spacetime_dim - potential_degree; }
    int boundary_sign() const {
        int s = maxwell_degree() % 2 == 0 ? 1 : -1;
        return flip_sign_for_testing ? -s : s;
    }
    void validate() const;  // 0 <= r <= d-1, d >= 1
};

// F = d(alpha) generalizes the field strength; J = d(g) generalizes the
// charge-current density. Both are closed by construction; the flags record
// the explicit check.
struct FieldStrengths {
    PolyForm faraday;        // degree r+1
    PolyForm charge_current; // degree d-r
    bool faraday_closed = false;
    bool charge_current_closed = false;
};

// The constitutive stress alpha |-> g ^ alpha, expanded into duality terms:
// one (e_A, g ^ dx_A) pair per increasing r-subset A.
TractionStressField maxwell_traction(const PolyForm& g, const ElectroConfig& cfg);

FieldStrengths field_strengths(const PolyForm& alpha, const PolyForm& g,
                               const ElectroConfig& cfg);

// The four scalars of the boundary-to-bulk power chain over a region R:
//   int_dR g^alpha  =  int_R d(g^alpha)  =  int_R dg^alpha + s * int_R g^d(alpha)
// with s = (-1)^(d-r-1). `consistent` records exact three-way equality.
struct PowerChainRecord {
    Rat boundary_power;
    Rat bulk_power;
    Rat split_sum;
    Rat charge_term;  // int_R dg ^ alpha
    Rat field_term;   // int_R g ^ d(alpha)
    int sign = 1;
    bool consistent = false;
};

PowerChainRecord power_chain_identity(const ComplexPtr& region, const PolyForm& g,
                                      const PolyForm& alpha, const ElectroConfig& cfg);

// Discrete counterpart on cochains, with the cup product in place of the
// wedge: pair(g cup alpha, dR) = pair(d(g cup alpha), R) = split.
PowerChainRecord power_chain_identity_discrete(const ComplexPtr& region, const Cochain& g,
                                               const Cochain& alpha, const ElectroConfig& cfg);

// The invariant decomposition of the bulk power density: value part
// S0(alpha) = J ^ alpha and gradient part S1(d alpha) = s * g ^ d(alpha).
// Their sum is d(g ^ alpha) exactly.
struct VariationalSplit {
    PolyForm value_part;     // degree d
    PolyForm gradient_part;  // degree d
};

VariationalSplit variational_split(const PolyForm& g, const PolyForm& alpha,
                                   const ElectroConfig& cfg);

// The same decomposition packaged as a term-list operator on potentials.
VariationalStress electro_variational_stress(const PolyForm& g, const ElectroConfig& cfg);

// F_R(alpha) = int_R J ^ alpha + s * int_R g ^ F.
Rat total_power(const ComplexPtr& region, const PolyForm& g, const PolyForm& alpha,
                const ElectroConfig& cfg);

}  // namespace gec
