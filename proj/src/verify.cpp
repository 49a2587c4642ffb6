#include "oneloop/verify.hpp"

#include "oneloop/blowup.hpp"
#include "oneloop/coaction.hpp"
#include "oneloop/griffiths.hpp"
#include "oneloop/linalg.hpp"
#include "oneloop/realnum.hpp"
#include "oneloop/sqrtexpr.hpp"
#include "oneloop/symanzik.hpp"

#include <regex>
#include <sstream>

namespace oneloop {

namespace bmp = boost::multiprecision;

namespace {

std::string sci(const Real& x) { return to_decimal(x, 3); }

Real det_c_at(const FeynmanGraph& g, const KinematicPoint& p) {
    auto vals = symbol_values(g, p);
    QMatrix c = quadratic_form_matrix(symanzik(g).xi).specialize(vals);
    return to_real(det_bareiss(c));
}

}  // namespace

KinematicPoint random_euclidean_point(const FeynmanGraph& g, std::mt19937_64& rng) {
    int f = g.num_legs() - 1;
    std::uniform_int_distribution<int> diag(10, 30), off(-6, 6), mass(10, 40);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::vector<Rational>> l(f, std::vector<Rational>(f, Rational(0)));
        for (int i = 0; i < f; ++i)
            for (int j = 0; j <= i; ++j) {
                l[i][j] = Rational(i == j ? diag(rng) : off(rng), 20);
                l[i][j].canonicalize();
            }
        KinematicPoint p;
        for (int i = 0; i < f; ++i)
            for (int j = i; j < f; ++j) {
                Rational s = 0;
                for (int k = 0; k < f; ++k) s += l[i][k] * l[j][k];
                p.s[{i + 1, j + 1}] = s;
            }
        for (const auto& e : g.edges)
            if (!e.massless() && !p.msq.count(e.mass)) {
                Rational m(mass(rng), 20);
                m.canonicalize();
                p.msq[e.mass] = m;
            }
        auto rep = validate_generic(g, p);
        if (!rep.generic || !rep.euclidean) continue;
        if (g.is_one_loop_cycle() && det_bareiss(quadratic_form_matrix(symanzik(g).xi).specialize(symbol_values(g, p))) == 0)
            continue;
        return p;
    }
    throw std::runtime_error("could not draw a generic Euclidean point");
}

KinematicPoint perturb(const FeynmanGraph& g, const KinematicPoint& p, const std::string& symbol, const Rational& eps) {
    static const std::regex s_re("s\\[([0-9]+),([0-9]+)\\]");
    static const std::regex m_re("(.+)\\^2");
    KinematicPoint out = p;
    std::smatch m;
    if (std::regex_match(symbol, m, s_re)) {
        std::pair<int, int> key{std::stoi(m[1]), std::stoi(m[2])};
        if (key.second >= g.num_legs()) throw std::invalid_argument("cannot vary the dependent leg: " + symbol);
        out.s[key] += eps;
    } else if (std::regex_match(symbol, m, m_re) && p.msq.count(m[1])) {
        out.msq[m[1]] += eps;
    } else {
        throw std::invalid_argument("unknown kinematic symbol " + symbol);
    }
    return out;
}

Check check_prefactor_identity(const FeynmanGraph& box, const std::vector<KinematicPoint>& pts, double tol) {
    Check c;
    c.name = "prefactor identity (1/(2 sqrt|det D_jk|)) P_jk = 1/(16 sqrt|det C|)";
    auto sym = box_coaction_data(box);
    SqrtExpr target = SqrtExpr(1) / (SqrtExpr(16) * SqrtExpr::sqrt(SqrtExpr::abs(SqrtExpr(sym.det_c))));
    std::vector<SqrtExpr> diffs;
    bool symbolic = true;
    for (const auto& pr : sym.pairs) {
        SqrtExpr lhs = SqrtExpr(1) / (SqrtExpr(2) * SqrtExpr::sqrt(SqrtExpr::abs(SqrtExpr(pr.det_d)))) * pr.p;
        diffs.push_back(lhs - target);
        if (!is_zero_symbolic(diffs.back())) symbolic = false;
    }
    PrecisionGuard guard(30);
    Real worst = 0;
    for (const auto& p : pts) {
        auto vals = symbol_values(box, p);
        for (const auto& d : diffs) worst = bmp::max(worst, abs(eval_expr(d, vals).value));
    }
    c.passed = symbolic && worst <= tol;
    c.measured = std::string(symbolic ? "symbolic zero" : "symbolic NONZERO") + ", max numeric " + sci(worst);
    c.detail = std::to_string(pts.size()) + " points, 6 pairs";
    return c;
}

std::vector<Check> check_picard_fuchs(const FeynmanGraph& g, const std::string& param, const std::vector<KinematicPoint>& pts,
                                      double tol, const Rational& step) {
    Check dec{"Jacobian decomposition of -2 dXi/d" + param + " has zero residual", true, "", ""};
    Check ext{"exterior-derivative identity for beta (exact polynomial identity)", true, "", ""};
    Check lit{"B h + dh/d" + param + " = 0, B as printed", true, "", ""};
    Check res{"sign-resolved (-B) h + dh/d" + param + " = 0", true, "", ""};
    std::string sym = resolve_parameter(g, param);
    PrecisionGuard guard(40);
    Real worst_lit = 0, worst_res = 0;
    std::set<int> signs;
    for (const auto& p : pts) {
        auto pf = picard_fuchs_B(g, param, p);
        if (!pf.decomposition_exact) dec.passed = false;
        signs.insert(pf.exterior_sign);
        if (pf.exterior_sign == 0) ext.passed = false;
        auto h = [&](const KinematicPoint& q) -> Real { return 1 / bmp::sqrt(bmp::abs(det_c_at(g, q))); };
        Real h0 = h(p);
        Real dh = (h(perturb(g, p, sym, step)) - h(perturb(g, p, sym, -step))) / (2 * to_real(step));
        Real b = to_real(pf.B);
        Real scale = bmp::max(Real(bmp::abs(dh)), Real(bmp::abs(b * h0)));
        worst_lit = bmp::max(worst_lit, Real(bmp::abs(b * h0 + dh) / scale));
        worst_res = bmp::max(worst_res, Real(bmp::abs(-b * h0 + dh) / scale));
    }
    dec.measured = dec.passed ? "exact" : "residual nonzero";
    std::ostringstream os;
    for (int s : signs) os << (os.tellp() ? "," : "") << (s > 0 ? "+1" : s < 0 ? "-1" : "none");
    ext.measured = "holds with global sign " + os.str();
    ext.detail = "sign +1 is the printed form";
    lit.measured = "max relative residual " + sci(worst_lit);
    lit.passed = worst_lit <= tol;
    res.measured = "max relative residual " + sci(worst_res);
    res.passed = worst_res <= tol;
    res.detail = lit.detail = std::to_string(pts.size()) + " points, step " + step.get_str();
    return {dec, ext, lit, res};
}

std::vector<Check> check_ajk(const FeynmanGraph& box, const std::string& param, const std::vector<KinematicPoint>& pts,
                             double tol) {
    Check lit{"a_jk = (sqrt|det D_jk|/(4 sqrt|det C|)) (1/f_jk) df_jk/d" + param, true, "", ""};
    Check res{"a_jk = r * printed expression with one constant r for all pairs and points", true, "", ""};
    std::string sym = resolve_parameter(box, param);
    PrecisionGuard guard(50);
    Rational eps(1, 1000000000);
    eps /= 1000;  // 1e-12
    Real worst_lit = 0, worst_res = 0;
    std::vector<Complex> ratios;
    for (const auto& p : pts) {
        auto pf = picard_fuchs_B(box, param, p);
        auto a = beta_edge_coefficients(pf);
        auto vals = symbol_values(box, p);
        auto d0 = box_coaction_data(box, vals);
        auto dp = box_coaction_data(box, symbol_values(box, perturb(box, p, sym, eps)));
        auto dm = box_coaction_data(box, symbol_values(box, perturb(box, p, sym, -eps)));
        Real sdc = bmp::sqrt(bmp::abs(to_real(d0.det_c.constant_value())));
        for (size_t i = 0; i < d0.pairs.size(); ++i) {
            const auto& pr = d0.pairs[i];
            Complex f0 = eval_expr(pr.f, {}).value;
            Complex fp = eval_expr(dp.pairs[i].f, {}).value, fm = eval_expr(dm.pairs[i].f, {}).value;
            Complex dlog = (fp - fm) / (f0 * Complex(2 * to_real(eps)));
            Real pref = bmp::sqrt(bmp::abs(to_real(pr.det_d.constant_value()))) / (4 * sdc);
            Complex printed = Complex(pref) * dlog;
            Complex ai(to_real(a.at({pr.j, pr.k})));
            Real scale = bmp::max(abs(ai), abs(printed));
            if (scale == 0) continue;
            worst_lit = bmp::max(worst_lit, Real(abs(ai - printed) / scale));
            if (abs(printed) > 0) ratios.push_back(ai / printed);
        }
    }
    lit.passed = worst_lit <= tol;
    lit.measured = "max relative deviation " + sci(worst_lit);
    if (ratios.empty()) {
        res.passed = false;
        res.measured = "no non-zero pair";
    } else {
        Complex r = ratios.front();
        for (const auto& x : ratios) worst_res = bmp::max(worst_res, Real(abs(x - r) / abs(r)));
        res.passed = worst_res <= tol;
        res.measured = "r = " + to_decimal(r, 12) + ", spread " + sci(worst_res);
        lit.detail = "measured ratio a_jk / printed = " + to_decimal(r, 12);
    }
    res.detail = std::to_string(pts.size()) + " points x 6 pairs";
    return {lit, res};
}

std::vector<Check> check_blowups() {
    std::vector<Check> out;
    Check all{"blow-up cancellation: no exceptional pole in any chart, exact division", true, "", ""};
    int charts = 0;
    for (int mask = 1; mask < 8; ++mask) {
        std::set<int> massless;
        for (int i = 0; i < 3; ++i)
            if (mask & (1 << i)) massless.insert(i + 1);
        auto g = triangle_graph(massless);
        for (const auto& ch : admissible_charts(g)) {
            auto rep = blowup_pullback(g, ch);
            ++charts;
            if (!rep.pole_free || !rep.division_exact) {
                all.passed = false;
                all.detail += "config mask " + std::to_string(mask) + " chart " + ch.name() + " fails; ";
            }
        }
    }
    all.measured = std::to_string(charts) + " charts over 7 configurations";
    out.push_back(all);
    auto pc = printed_chart_check(triangle_graph({3}));
    out.push_back({"printed chart: Psi factor", pc.psi_matches, pc.psi_matches ? "match" : "mismatch", ""});
    out.push_back({"printed chart: momentum part of Xi", pc.momentum_part_matches, pc.momentum_part_matches ? "match" : "mismatch", ""});
    out.push_back({"printed chart: full factorization verbatim", pc.full_match, pc.full_match ? "match" : "mismatch",
                   "computed - printed = " + pc.difference.to_string()});
    return out;
}

}  // namespace oneloop
