#pragma once

#include "oneloop/graph.hpp"
#include "oneloop/poly.hpp"

#include <map>
#include <set>
#include <vector>

namespace oneloop {

struct SymanzikPair {
    KPoly psi;
    KPoly phi;
    KPoly xi;
    // Leg sets (1-based, never containing the last leg) of the 2-forest cut for each phi monomial.
    std::map<KPoly::Exponents, std::vector<std::set<int>>> phi_cuts;
};

SymanzikPair symanzik(const FeynmanGraph& g);

// Xi_G with the alpha's of the listed edges set to zero, arity compacted.
KPoly xi_restrict(const FeynmanGraph& g, const std::set<std::string>& contracted);

// Omega_G = sum_i (-1)^i alpha_i dalpha_1..^i..dalpha_N (i 1-based), as (sign, omitted index) pairs.
// For the bubble this is a2 da1 - a1 da2.
struct OmegaTerm {
    int sign;
    int omitted;  // 0-based index of the alpha multiplying the term
};
std::vector<OmegaTerm> omega_terms(int n);

struct ParametricIntegrand {
    FeynmanGraph graph;
    int dimension = 4;
    int psi_power = 0;  // exponent of Psi in the numerator (may be negative)
    int xi_power = 0;   // exponent of Xi in the denominator
    KPoly psi;
    KPoly xi;
    std::vector<OmegaTerm> omega;
    bool divergent = false;
    std::string note;
    std::string to_string() const;
};

// omega_G = Psi^{N - (h+1) d/2} / Xi^{N - h d/2} Omega_G.
ParametricIntegrand build_integrand(const FeynmanGraph& g, int d);

// Display with momentum-square aliases (q_i^2, (q_i+q_j)^2) for phi coefficients.
std::string render_xi(const FeynmanGraph& g, const SymanzikPair& sp);

}  // namespace oneloop
