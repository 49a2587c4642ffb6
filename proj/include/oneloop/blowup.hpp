#pragma once

#include "oneloop/graph.hpp"
#include "oneloop/poly.hpp"

#include <string>
#include <vector>

namespace oneloop {

// Charts on the blow-up of P^2 at the vertex where only alpha_i is non-zero (0-based i), with
// (j, k) the other two coordinates in increasing order and alpha_i = 1:
//   Exceptional1: alpha_j = b1 b2, alpha_k = b2   (exceptional divisor b2 = 0)
//   Exceptional2: alpha_j = b1,    alpha_k = b1 b2 (exceptional divisor b1 = 0)
//   Away:         alpha_j = 1, (b1, b2) = (alpha_i, alpha_k); misses the exceptional divisor
enum class ChartKind { Exceptional1, Exceptional2, Away };

struct BlowupChart {
    int vertex = 0;
    ChartKind kind = ChartKind::Exceptional1;
    std::string name() const;
};

struct PullbackReport {
    BlowupChart chart;
    KPoly psi;        // pi^* Psi in (b1, b2)
    KPoly xi;         // pi^* Xi
    KPoly jacobian;   // pi^* Omega = jacobian db1 db2
    int exceptional_var = -1;  // 0 or 1, -1 for the away chart
    int psi_order = 0, xi_order = 0, jacobian_order = 0;
    KPoly xi_strict;  // xi divided by b^xi_order
    int net_order = 0;  // jacobian_order - psi_order - xi_order; >= 0 means no pole
    bool pole_free = false;
    bool division_exact = false;
    std::string render() const;
};

// The triangle's integrand Omega / (Psi Xi) pulled back to the chart.  The vertex must be one
// whose mass vanishes (the quadric passes through it); Away charts are accepted for any vertex.
PullbackReport blowup_pullback(const FeynmanGraph& g, const BlowupChart& chart);

// All charts over every vanishing-mass vertex.
std::vector<BlowupChart> admissible_charts(const FeynmanGraph& g);

// The chart written out in the pullback lemma (alpha3 = 1, alpha1 = b1 b2, alpha2 = b2) against
// the printed factorization b2 (q1^2 + q2^2 b1 + q3^2 b1 b2 + m2^2 b2 Psi23).
struct PrintedChartCheck {
    KPoly computed_xi;
    KPoly printed_xi;
    KPoly computed_psi;
    KPoly printed_psi;     // b1 b2 + b2 + 1
    bool psi_matches = false;
    bool momentum_part_matches = false;  // masses set to zero on both sides
    bool full_match = false;
    KPoly difference;      // computed - printed
    std::string render() const;
};
PrintedChartCheck printed_chart_check(const FeynmanGraph& triangle_with_m3_zero);

}  // namespace oneloop
