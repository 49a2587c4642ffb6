#pragma once

#include "oneloop/graph.hpp"
#include "oneloop/linalg.hpp"
#include "oneloop/sqrtexpr.hpp"

#include <optional>
#include <string>
#include <vector>

namespace oneloop {

// A point on the projective line; nullopt is the point at infinity.
using LinePoint = std::optional<SqrtExpr>;

// [p0 p1 | p2 p3] = (p2-p0)(p3-p1) / ((p2-p1)(p3-p0)), factors through infinity dropped.
SqrtExpr cross_ratio(const LinePoint& p0, const LinePoint& p1, const LinePoint& p2, const LinePoint& p3);

// Roots of a t^2 + 2 b t + c (the second is the "+sqrt" root).  Throws on a double root or a = 0.
std::pair<SqrtExpr, SqrtExpr> quadric_roots(const Poly& a, const Poly& b, const Poly& c);

enum class BubbleVariant { TwoMass, OneMass };

struct BubblePeriod {
    SqrtExpr prefactor;
    SqrtExpr argument;  // period = prefactor * log(argument)
    // roots x, y used by the printed simplification (1/(x-y)) log(y/x), chart alpha_2 = 1
    SqrtExpr x, y;
    std::string note;
};

// Period of theta^1 (two masses) or theta^2 (one vanishing mass) over the bubble simplex.
BubblePeriod bubble_period(const FeynmanGraph& g, BubbleVariant variant);

struct LogPiece {
    SqrtExpr coefficient{1};
    std::string marker;            // undetermined constant, e.g. "a1"
    std::string function = "log";  // log, Li1, Li2, ...
    SqrtExpr argument{1};
};

struct CoactionFactor {
    enum class Kind { Amplitude, Unit, LefschetzSquared, Logs, Label };
    Kind kind = Kind::Unit;
    std::vector<LogPiece> pieces;  // Logs: sum of pieces
    bool times_lefschetz = false;  // trailing L factor
    std::string label;             // Amplitude / Label text
    std::string render(const std::string& side) const;
};

struct CoactionTerm {
    CoactionFactor motivic;
    CoactionFactor derham;
    int motivic_weight = 0;
    int derham_weight = 0;  // complementary weight, the pair sums to 4
    std::string provenance;
    bool divergent = false;
    std::string note;
    std::string render() const;
};

struct Coaction {
    std::string graph;
    std::vector<CoactionTerm> terms;
    std::vector<std::string> notes;
    std::vector<std::string> undetermined;
    std::string render() const;
};

// U = C^{-1} symbolically, entries cofactor/det.
std::vector<std::vector<SqrtExpr>> inverse_expr(const PolyMatrix& c);
SqrtExpr f_jk_expr(const std::vector<std::vector<SqrtExpr>>& u, int j, int k);
// sqrt|det D_jk| / (8 sqrt|det C|)
SqrtExpr p_jk_expr(const Poly& det_d, const Poly& det_c);

struct BoxPairData {
    int j = 0, k = 0;  // 0-based contracted edges
    int a = 0, b = 0;  // remaining edges
    Poly det_d;
    SqrtExpr motivic_prefactor;  // 1/sqrt(4|det D|)
    SqrtExpr motivic_argument;   // [p0 p1 | u0 u1]
    SqrtExpr p;                  // P_jk
    SqrtExpr f;                  // f_jk
};

struct BoxCoactionData {
    PolyMatrix c;
    Poly det_c;
    std::vector<std::vector<SqrtExpr>> u;
    std::vector<BoxPairData> pairs;
};

// Symbolic when values is empty; otherwise built directly from the specialized quadric.
BoxCoactionData box_coaction_data(const FeynmanGraph& g, const std::map<int, Rational>& values = {});
Coaction box_coaction(const FeynmanGraph& g, const std::map<int, Rational>& values = {});

// Massless triangle: printed and geometric cross-ratios.
struct MasslessTriangleGeometry {
    SqrtExpr printed_radicand;       // q1^4+q2^4+q3^4-2q1^2q3^2-2q2^2q3^2
    SqrtExpr kallen;                 // full Kallen function
    SqrtExpr printed_f1;             // printed [f0f1|d1d2]
    SqrtExpr printed_f2_correction;  // printed second factor of [f0f1|d1d3]
    SqrtExpr geometric_d1d2;         // from Q~ cap L~ and D_i cap L~
    SqrtExpr geometric_d1d3;
    SqrtExpr geometric_f2_correction;  // geometric_d1d3 / geometric_d1d2
    std::vector<SqrtExpr> printed_motivic;    // q2^2/q3^2, q1^2/q3^2
    std::vector<SqrtExpr> geometric_motivic;  // [g_i u_i | p0^i p1^i], i = 1, 2
    std::vector<SqrtExpr> line_points;        // f0, f1, d1, d3 in the chart alpha2 = 1 on L (d2 = infinity)
};
MasslessTriangleGeometry massless_triangle_geometry(const FeynmanGraph& g);

Coaction triangle_coaction(const FeynmanGraph& g);

std::vector<CoactionTerm> dilog_coaction(const SqrtExpr& x);
// Im Li2(z) for unimodular z: Li1(z) - Li1(1/z) combined into log((1-z)^2/z).
std::vector<CoactionTerm> dilog_coaction_im_unit(const SqrtExpr& z);

std::vector<long> weight_graded_dims(int n);
std::vector<long> triangle_graded_dims(int v);

}  // namespace oneloop
