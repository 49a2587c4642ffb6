#include "oneloop/blowup.hpp"

#include "oneloop/symanzik.hpp"

#include <sstream>

namespace oneloop {

std::string BlowupChart::name() const {
    std::string v = std::to_string(vertex + 1);
    switch (kind) {
        case ChartKind::Exceptional1: return "vertex " + v + " chart 1";
        case ChartKind::Exceptional2: return "vertex " + v + " chart 2";
        case ChartKind::Away: return "vertex " + v + " away chart";
    }
    return "?";
}

namespace {

std::pair<int, int> others(int i) {
    if (i == 0) return {1, 2};
    if (i == 1) return {0, 2};
    return {0, 1};
}

// Images of (alpha_1, alpha_2, alpha_3) as polynomials in (b1, b2).
std::vector<KPoly> chart_map(const BlowupChart& ch) {
    auto [j, k] = others(ch.vertex);
    KPoly b1 = KPoly::alpha(2, 0), b2 = KPoly::alpha(2, 1), one = KPoly::constant(2, Poly(1));
    std::vector<KPoly> img(3, KPoly(2));
    switch (ch.kind) {
        case ChartKind::Exceptional1:
            img[ch.vertex] = one;
            img[j] = b1 * b2;
            img[k] = b2;
            break;
        case ChartKind::Exceptional2:
            img[ch.vertex] = one;
            img[j] = b1;
            img[k] = b1 * b2;
            break;
        case ChartKind::Away:
            img[j] = one;
            img[ch.vertex] = b1;
            img[k] = b2;
            break;
    }
    return img;
}

// Omega restricted to the affine chart alpha_c = 1 equals sign * d alpha_x d alpha_y (x < y the others).
int omega_chart_sign(int c) { return (c % 2 == 0) ? -1 : 1; }

}  // namespace

PullbackReport blowup_pullback(const FeynmanGraph& g, const BlowupChart& chart) {
    if (!g.is_one_loop_cycle() || g.num_edges() != 3) throw std::invalid_argument("blow-up charts are defined for the triangle");
    if (chart.vertex < 0 || chart.vertex > 2) throw std::invalid_argument("vertex index out of range");
    bool massless = g.edges[chart.vertex].massless();
    if (chart.kind != ChartKind::Away && !massless)
        throw std::invalid_argument("chart not adjacent to a blown-up point: m" + std::to_string(chart.vertex + 1) +
                                    " does not vanish");
    auto sp = symanzik(g);
    auto img = chart_map(chart);
    PullbackReport r;
    r.chart = chart;
    r.psi = sp.psi.compose(img);
    r.xi = sp.xi.compose(img);
    // Jacobian of (alpha_x, alpha_y) w.r.t. (b1, b2), where alpha_c = 1 is the chart's affine coordinate
    int c = chart.kind == ChartKind::Away ? others(chart.vertex).first : chart.vertex;
    std::vector<int> xy;
    for (int i = 0; i < 3; ++i)
        if (i != c) xy.push_back(i);
    KPoly jac = img[xy[0]].partial(0) * img[xy[1]].partial(1) - img[xy[0]].partial(1) * img[xy[1]].partial(0);
    r.jacobian = KPoly::constant(2, Poly(omega_chart_sign(c))) * jac;
    if (chart.kind == ChartKind::Away) {
        r.exceptional_var = -1;
        r.xi_strict = r.xi;
        r.pole_free = true;
        r.division_exact = true;
        return r;
    }
    int e = chart.kind == ChartKind::Exceptional1 ? 1 : 0;
    r.exceptional_var = e;
    r.psi_order = r.psi.min_alpha_degree(e);
    r.xi_order = r.xi.min_alpha_degree(e);
    r.jacobian_order = r.jacobian.min_alpha_degree(e);
    // certify by exact division
    try {
        r.xi_strict = r.xi.divide_alpha(e, r.xi_order);
        KPoly back = r.xi_strict * KPoly::alpha(2, e).pow(r.xi_order);
        KPoly jac_rest = r.jacobian.divide_alpha(e, r.jacobian_order);
        r.division_exact = back == r.xi && jac_rest * KPoly::alpha(2, e).pow(r.jacobian_order) == r.jacobian;
    } catch (const std::exception&) {
        r.division_exact = false;
    }
    r.net_order = r.jacobian_order - r.psi_order - r.xi_order;
    r.pole_free = r.division_exact && r.net_order >= 0;
    return r;
}

std::vector<BlowupChart> admissible_charts(const FeynmanGraph& g) {
    std::vector<BlowupChart> out;
    for (int i = 0; i < g.num_edges(); ++i)
        if (g.edges[i].massless()) {
            out.push_back({i, ChartKind::Exceptional1});
            out.push_back({i, ChartKind::Exceptional2});
        }
    return out;
}

std::string PullbackReport::render() const {
    std::vector<std::string> names{"b1", "b2"};
    std::ostringstream os;
    os << chart.name() << "\n";
    os << "  pi^*Psi   = " << psi.to_string(names) << "\n";
    os << "  pi^*Xi    = " << xi.to_string(names) << "\n";
    os << "  pi^*Omega = (" << jacobian.to_string(names) << ") db1 db2\n";
    if (exceptional_var >= 0) {
        os << "  exceptional coordinate " << names[exceptional_var] << ": order in numerator " << jacobian_order
           << ", in Psi " << psi_order << ", in Xi " << xi_order << "\n";
        os << "  strict transform Xi~ = " << xi_strict.to_string(names) << "\n";
        os << "  net order " << net_order << (pole_free ? " (no pole)" : " (POLE)") << "\n";
    }
    return os.str();
}

PrintedChartCheck printed_chart_check(const FeynmanGraph& g) {
    if (!g.is_one_loop_cycle() || g.num_edges() != 3) throw std::invalid_argument("expects a triangle");
    if (!g.edges[2].massless()) throw std::invalid_argument("the printed chart sits over the vertex alpha3 = 1; it needs m3 = 0");
    auto sp = symanzik(g);
    KPoly b1 = KPoly::alpha(2, 0), b2 = KPoly::alpha(2, 1), one = KPoly::constant(2, Poly(1));
    std::vector<KPoly> img{b1 * b2, b2, one};
    PrintedChartCheck c;
    c.computed_psi = sp.psi.compose(img);
    c.computed_xi = sp.xi.compose(img);
    c.printed_psi = b1 * b2 + b2 + one;
    auto coeff2 = [&](int j, int k) {
        KPoly::Exponents e(3, 0);
        e[j] += 1;
        e[k] += 1;
        return sp.phi.coefficient(e);
    };
    Poly q1 = coeff2(1, 2), q2 = coeff2(0, 2), q3 = coeff2(0, 1);
    Poly m2 = mass_square(g.edges[1]);
    KPoly inner = KPoly::constant(2, q1) + KPoly::constant(2, q2) * b1 + KPoly::constant(2, q3) * b1 * b2 +
                  KPoly::constant(2, m2) * b2 * c.printed_psi;
    c.printed_xi = b2 * inner;
    c.psi_matches = c.computed_psi == c.printed_psi;
    KPoly phi_pull = sp.phi.compose(img);
    KPoly printed_phi = b2 * (KPoly::constant(2, q1) + KPoly::constant(2, q2) * b1 + KPoly::constant(2, q3) * b1 * b2);
    c.momentum_part_matches = phi_pull == printed_phi;
    c.difference = c.computed_xi - c.printed_xi;
    c.full_match = c.difference.is_zero();
    return c;
}

std::string PrintedChartCheck::render() const {
    std::vector<std::string> names{"b1", "b2"};
    std::ostringstream os;
    os << "printed chart alpha3 = 1, alpha1 = b1 b2, alpha2 = b2\n";
    os << "  pi^*Psi computed = " << computed_psi.to_string(names) << (psi_matches ? "  (matches b1 b2 + b2 + 1)" : "  (differs)") << "\n";
    os << "  pi^*Xi computed  = " << computed_xi.to_string(names) << "\n";
    os << "  pi^*Xi printed   = " << printed_xi.to_string(names) << "\n";
    os << "  momentum part " << (momentum_part_matches ? "matches" : "differs") << "; full expression "
       << (full_match ? "matches" : "differs by " + difference.to_string(names)) << "\n";
    return os.str();
}

}  // namespace oneloop
