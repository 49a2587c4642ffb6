#pragma once

#include "oneloop/forms.hpp"
#include "oneloop/graph.hpp"
#include "oneloop/linalg.hpp"
#include "oneloop/quadrature.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace oneloop {

// A_i with sum_i A_i dXi/da_i = numerator.  Both inputs must have rational coefficients.
std::vector<KPoly> jacobian_decompose(const KPoly& numerator, const KPoly& xi,
                                      const std::vector<int>& pivot_order = {});
// Symbolic inputs specialized at a kinematic point first.
std::vector<KPoly> jacobian_decompose(const KPoly& numerator, const KPoly& xi, const std::map<int, Rational>& values,
                                      const std::vector<int>& pivot_order = {});

// Numerator (n-2)-form sum_{i<j} (-1)^{i+j} (a_j A_i - a_i A_j) da_{[n] minus {i,j}}.
PolyForm griffiths_beta(const std::vector<KPoly>& A);

// d(beta/Xi^k) = sign * [ -k sum A_i dXi/Xi^{k+1} + sum dA_i/da_i / Xi^k ] Omega.
// Returns +1 or -1 for whichever sign holds exactly, 0 if neither.
int griffiths_exterior_sign(const std::vector<KPoly>& A, const KPoly& xi, int k);

// Resolve a derivative parameter name: "q1" -> s[1,1], "m1" -> m1^2, otherwise the symbol itself.
std::string resolve_parameter(const FeynmanGraph& g, const std::string& param);

struct PicardFuchsData {
    std::string param;        // resolved kinematic symbol
    KPoly xi;                 // Xi at the point
    KPoly numerator;          // -2 dXi/dparam at the point
    std::vector<KPoly> A;
    Rational B;               // (1/2) sum dA_i/da_i
    PolyForm beta;            // numerator of beta, over Xi^2
    bool decomposition_exact = false;
    int exterior_sign = 0;    // +1: identity as printed, -1: holds with global sign flipped
    bool exterior_literal = false;
};

PicardFuchsData picard_fuchs_B(const FeynmanGraph& g, const std::string& param, const KinematicPoint& p,
                               const std::vector<int>& pivot_order = {});

// Coefficients a_{jk} of theta^1 on the edge lines alpha_j = alpha_k = 0 (0-based j<k), obtained by
// restricting beta/Xi^2 to the two adjacent faces, taking Griffiths primitives there and applying
// Stokes with the canonical simplex orientation.  Then  int_sigma d(beta/Xi^2) = sum a_jk per_jk
// with per_jk the positive integral of theta^1 over the edge.
std::map<std::pair<int, int>, Rational> beta_edge_coefficients(const PicardFuchsData& pf);

struct ReductionResult {
    std::map<std::set<std::string>, Rational> coefficients;
    // Terms of pole order >= 3 with constant numerator on faces of dimension >= 5, which
    // admit no further reduction (weight-6 classes); keyed like coefficients.
    std::map<std::set<std::string>, Rational> remainder;
    std::map<std::set<std::string>, int> remainder_pole_order;
    bool residual_computed = false;
    double lhs = 0, rhs = 0;
    double residual = 0;  // relative
    double quadrature_error = 0;
    std::string note;
};

ReductionResult reduce_to_boxes(const FeynmanGraph& g, const KinematicPoint& p, bool compute_residual = true,
                                const QuadratureOptions& opt = {});

}  // namespace oneloop
