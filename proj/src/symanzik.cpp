#include "oneloop/symanzik.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace oneloop {

namespace {

// State of the deletion-contraction recursion: edges over merged vertex classes.
struct DcEdge {
    int a, b;  // current vertex labels
    int alpha; // original edge index
};

struct Forests {
    // psi: map exponent -> count (coefficients are 1)
    std::map<KPoly::Exponents, int> trees;
    // 2-forests: exponent -> list of leg masks on the component not holding the "root" class
    std::map<KPoly::Exponents, std::vector<unsigned>> two;
};

class DeletionContraction {
public:
    DeletionContraction(int n_alpha, unsigned all_legs) : n_(n_alpha), all_legs_(all_legs) {}

    // verts: vertex label -> leg mask.  Returns spanning trees and 2-forests of the multigraph.
    Forests run(std::vector<DcEdge> edges, std::map<int, unsigned> verts) {
        std::string key = encode(edges, verts);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Forests out;
        if (edges.empty()) {
            KPoly::Exponents zero(n_, 0);
            if (verts.size() == 1) out.trees[zero] = 1;
            if (verts.size() == 2) {
                unsigned m = verts.begin()->second;
                out.two[zero].push_back(m);
            }
        } else if (verts.size() > edges.size() + 2) {
            // not enough edges to reach two components
        } else {
            DcEdge e = edges.back();
            edges.pop_back();
            // omit e: factor alpha_e
            Forests del = run(edges, verts);
            for (auto& [ex, c] : del.trees) {
                auto x = ex;
                x[e.alpha]++;
                out.trees[x] += c;
            }
            for (auto& [ex, l] : del.two) {
                auto x = ex;
                x[e.alpha]++;
                auto& dst = out.two[x];
                dst.insert(dst.end(), l.begin(), l.end());
            }
            if (e.a != e.b) {
                // keep e: contract it
                int keep = std::min(e.a, e.b), gone = std::max(e.a, e.b);
                std::map<int, unsigned> cv = verts;
                cv[keep] |= cv[gone];
                cv.erase(gone);
                std::vector<DcEdge> ce;
                for (auto f : edges) {
                    if (f.a == gone) f.a = keep;
                    if (f.b == gone) f.b = keep;
                    ce.push_back(f);
                }
                Forests con = run(ce, cv);
                for (auto& [ex, c] : con.trees) out.trees[ex] += c;
                for (auto& [ex, l] : con.two) {
                    auto& dst = out.two[ex];
                    dst.insert(dst.end(), l.begin(), l.end());
                }
            }
        }
        memo_.emplace(key, out);
        return out;
    }

private:
    int n_;
    unsigned all_legs_;
    std::unordered_map<std::string, Forests> memo_;

    static std::string encode(const std::vector<DcEdge>& edges, const std::map<int, unsigned>& verts) {
        std::ostringstream os;
        for (const auto& e : edges) os << e.a << ',' << e.b << ',' << e.alpha << ';';
        os << '|';
        for (const auto& [v, m] : verts) os << v << ':' << m << ';';
        return os.str();
    }
};

}  // namespace

SymanzikPair symanzik(const FeynmanGraph& g) {
    g.validate();
    int n = g.num_edges();
    int f = g.num_legs();
    if (f > 30) throw GraphError("too many legs");
    std::vector<DcEdge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({g.vertex_index(g.edges[i].v1), g.vertex_index(g.edges[i].v2), i});
    std::map<int, unsigned> verts;
    for (int v = 0; v < g.num_vertices(); ++v) verts[v] = 0;
    for (int l = 0; l < f; ++l) verts[g.vertex_index(g.legs[l].vertex)] |= 1u << l;
    unsigned all = f ? ((1u << f) - 1) : 0;
    DeletionContraction dc(n, all);
    Forests fo = dc.run(edges, verts);

    SymanzikPair sp;
    sp.psi = KPoly(n);
    sp.phi = KPoly(n);
    for (const auto& [ex, c] : fo.trees) sp.psi.add_term(ex, Poly(Rational(c)));
    for (const auto& [ex, masks] : fo.two) {
        for (unsigned m : masks) {
            // use the side without the last leg
            if (f > 0 && (m & (1u << (f - 1)))) m = all & ~m;
            std::set<int> legs;
            for (int l = 0; l < f; ++l)
                if (m & (1u << l)) legs.insert(l + 1);
            Poly s = f ? momentum_square(f, legs) : Poly();
            if (!legs.empty()) sp.phi_cuts[ex].push_back(legs);
            sp.phi.add_term(ex, s);
        }
    }
    KPoly mass_lin(n);
    for (int i = 0; i < n; ++i) mass_lin += mass_square(g.edges[i]) * KPoly::alpha(n, i);
    sp.xi = sp.phi + mass_lin * sp.psi;
    return sp;
}

KPoly xi_restrict(const FeynmanGraph& g, const std::set<std::string>& contracted) {
    if (!contracted.empty()) contract(g, contracted);  // validity check
    std::set<int> idx;
    for (const auto& id : contracted) idx.insert(g.edge_index(id));
    return symanzik(g).xi.restrict_zero(idx);
}

std::vector<OmegaTerm> omega_terms(int n) {
    std::vector<OmegaTerm> out;
    for (int i = 0; i < n; ++i) out.push_back({(i % 2 == 0) ? -1 : 1, i});
    return out;
}

ParametricIntegrand build_integrand(const FeynmanGraph& g, int d) {
    if (d != 2 && d != 4) throw std::invalid_argument("unsupported dimension d=" + std::to_string(d) + " (use 2 or 4)");
    g.validate();
    ParametricIntegrand ig;
    ig.graph = g;
    ig.dimension = d;
    int n = g.num_edges();
    int h = g.loop_number();
    ig.xi_power = n - h * d / 2;
    ig.psi_power = n - (h + 1) * d / 2;
    auto sp = symanzik(g);
    ig.psi = sp.psi;
    ig.xi = sp.xi;
    ig.omega = omega_terms(n);
    auto massless = g.massless_edges();
    if (h == 1 && g.is_one_loop_cycle()) {
        if (d == 2 && n == 2 && !massless.empty()) {
            ig.divergent = true;
            ig.note = "d=2 bubble with a vanishing mass: logarithmically divergent at a simplex vertex";
        } else if (d == 4 && n == 3 && massless.size() >= 2) {
            ig.note = "massless edges meet the quadric at simplex vertices; finite after blow-up";
        }
        if (d == 2 && n == 3 && !massless.empty()) {
            ig.divergent = true;
            ig.note = "d=2 triangle with a vanishing mass has a pole at a simplex vertex";
        }
    }
    return ig;
}

std::string ParametricIntegrand::to_string() const {
    std::ostringstream os;
    os << "d=" << dimension << ": ";
    if (psi_power > 0) os << "Psi^" << psi_power << " ";
    os << "Omega / (";
    if (psi_power < 0) os << "Psi^" << -psi_power << " ";
    os << "Xi^" << xi_power << ")";
    return os.str();
}

std::string render_xi(const FeynmanGraph& g, const SymanzikPair& sp) {
    int n = g.num_edges();
    int f = g.num_legs();
    std::ostringstream os;
    bool first = true;
    std::vector<KPoly::Exponents> keys;
    for (const auto& [ex, c] : sp.phi.terms()) keys.push_back(ex);
    std::sort(keys.begin(), keys.end(), std::greater<>());
    auto mono = [&](const KPoly::Exponents& e) {
        std::string s;
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < e[i]; ++k) s += "*a" + std::to_string(i + 1);
        return s;
    };
    for (const auto& ex : keys) {
        auto it = sp.phi_cuts.find(ex);
        std::vector<std::string> parts;
        if (it != sp.phi_cuts.end()) {
            for (const auto& legs : it->second) {
                // prefer the smaller side for display
                std::set<int> side = legs;
                if (static_cast<int>(side.size()) * 2 > f) {
                    std::set<int> comp;
                    for (int l = 1; l <= f; ++l)
                        if (!legs.count(l)) comp.insert(l);
                    side = comp;
                }
                std::string s;
                if (side.size() == 1) {
                    s = g.legs[*side.begin() - 1].momentum + "^2";
                } else {
                    s = "(";
                    bool fs = true;
                    for (int l : side) {
                        s += (fs ? "" : "+") + g.legs[l - 1].momentum;
                        fs = false;
                    }
                    s += ")^2";
                }
                parts.push_back(s);
            }
        }
        std::string coeff;
        for (size_t i = 0; i < parts.size(); ++i) coeff += (i ? " + " : "") + parts[i];
        if (parts.size() > 1) coeff = "(" + coeff + ")";
        os << (first ? "" : " + ") << coeff << mono(ex);
        first = false;
    }
    std::string masses;
    for (int i = 0; i < n; ++i)
        if (!g.edges[i].massless())
            masses += (masses.empty() ? "" : " + ") + msq_symbol(g.edges[i].mass) + "*a" + std::to_string(i + 1);
    if (!masses.empty()) os << (first ? "" : " + ") << "(" << masses << ")*Psi";
    return os.str();
}

}  // namespace oneloop
