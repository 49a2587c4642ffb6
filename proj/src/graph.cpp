#include "oneloop/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace oneloop {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

}  // namespace

int FeynmanGraph::vertex_index(const std::string& v) const {
    auto it = std::find(vertices.begin(), vertices.end(), v);
    if (it == vertices.end()) throw GraphError("unknown vertex '" + v + "'");
    return static_cast<int>(it - vertices.begin());
}

int FeynmanGraph::edge_index(const std::string& id) const {
    for (int i = 0; i < num_edges(); ++i)
        if (edges[i].id == id) return i;
    throw GraphError("unknown edge id '" + id + "'");
}

void FeynmanGraph::validate() const {
    std::set<std::string> vs;
    for (const auto& v : vertices)
        if (!vs.insert(v).second) throw GraphError("duplicate vertex '" + v + "'");
    std::set<std::string> ids;
    for (const auto& e : edges) {
        if (e.id.empty()) throw GraphError("edge with empty id");
        if (!ids.insert(e.id).second) throw GraphError("duplicate id '" + e.id + "'");
        if (!vs.count(e.v1)) throw GraphError("edge '" + e.id + "' uses unknown vertex '" + e.v1 + "'");
        if (!vs.count(e.v2)) throw GraphError("edge '" + e.id + "' uses unknown vertex '" + e.v2 + "'");
        if (e.mass.empty()) throw GraphError("edge '" + e.id + "' has no mass");
    }
    for (const auto& l : legs) {
        if (l.id.empty()) throw GraphError("leg with empty id");
        if (!ids.insert(l.id).second) throw GraphError("duplicate id '" + l.id + "'");
        if (!vs.count(l.vertex)) throw GraphError("leg '" + l.id + "' uses unknown vertex '" + l.vertex + "'");
        if (l.momentum.empty()) throw GraphError("leg '" + l.id + "' has no momentum symbol");
    }
    if (vertices.empty()) throw GraphError("graph has no vertices");
    if (!is_connected()) throw GraphError("graph '" + name + "' is disconnected");
}

bool FeynmanGraph::is_connected() const {
    if (vertices.empty()) return true;
    UnionFind uf(num_vertices());
    int comps = num_vertices();
    for (const auto& e : edges)
        if (uf.unite(vertex_index(e.v1), vertex_index(e.v2))) --comps;
    return comps == 1;
}

int FeynmanGraph::loop_number() const {
    UnionFind uf(num_vertices());
    int comps = num_vertices();
    for (const auto& e : edges)
        if (uf.unite(vertex_index(e.v1), vertex_index(e.v2))) --comps;
    return num_edges() - num_vertices() + comps;
}

bool FeynmanGraph::is_one_loop_cycle() const {
    if (edges.empty() || num_edges() != num_vertices() || !is_connected()) return false;
    std::vector<int> deg(num_vertices(), 0), nlegs(num_vertices(), 0);
    for (const auto& e : edges) {
        if (e.v1 == e.v2) return false;
        deg[vertex_index(e.v1)]++;
        deg[vertex_index(e.v2)]++;
    }
    for (const auto& l : legs) nlegs[vertex_index(l.vertex)]++;
    for (int i = 0; i < num_vertices(); ++i)
        if (deg[i] != 2 || nlegs[i] != 1) return false;
    return true;
}

std::vector<int> FeynmanGraph::massive_edges() const {
    std::vector<int> out;
    for (int i = 0; i < num_edges(); ++i)
        if (!edges[i].massless()) out.push_back(i);
    return out;
}

std::vector<int> FeynmanGraph::massless_edges() const {
    std::vector<int> out;
    for (int i = 0; i < num_edges(); ++i)
        if (edges[i].massless()) out.push_back(i);
    return out;
}

std::vector<int> FeynmanGraph::legs_at(const std::string& v) const {
    std::vector<int> out;
    for (int i = 0; i < num_legs(); ++i)
        if (legs[i].vertex == v) out.push_back(i + 1);
    return out;
}

// ---------------- builders ----------------

FeynmanGraph one_loop_cycle(int n, const std::set<int>& massless) {
    if (n < 2) throw GraphError("one-loop cycle needs at least 2 edges");
    FeynmanGraph g;
    g.name = n == 2 ? "bubble" : n == 3 ? "triangle" : n == 4 ? "box" : n == 5 ? "pentagon" : "cycle" + std::to_string(n);
    for (int i = 1; i <= n; ++i) g.vertices.push_back("v" + std::to_string(i));
    for (int i = 1; i <= n; ++i) {
        std::string m = massless.count(i) ? "0" : "m" + std::to_string(i);
        g.edges.push_back({"e" + std::to_string(i), "v" + std::to_string(i), "v" + std::to_string(i % n + 1), m});
        g.legs.push_back({"q" + std::to_string(i), "v" + std::to_string(i), "q" + std::to_string(i)});
    }
    return g;
}

FeynmanGraph triangle_graph(const std::set<int>& massless) {
    FeynmanGraph g;
    g.name = "triangle";
    g.vertices = {"v1", "v2", "v3"};
    const char* ends[3][2] = {{"v2", "v3"}, {"v3", "v1"}, {"v1", "v2"}};
    for (int i = 1; i <= 3; ++i) {
        std::string m = massless.count(i) ? "0" : "m" + std::to_string(i);
        g.edges.push_back({"e" + std::to_string(i), ends[i - 1][0], ends[i - 1][1], m});
        g.legs.push_back({"q" + std::to_string(i), "v" + std::to_string(i), "q" + std::to_string(i)});
    }
    return g;
}

FeynmanGraph bubble_graph(const std::set<int>& massless) { return one_loop_cycle(2, massless); }
FeynmanGraph box_graph() { return one_loop_cycle(4); }
FeynmanGraph pentagon_graph() { return one_loop_cycle(5); }

FeynmanGraph sunrise_graph() {
    FeynmanGraph g;
    g.name = "sunrise";
    g.vertices = {"v1", "v2"};
    for (int i = 1; i <= 3; ++i) g.edges.push_back({"e" + std::to_string(i), "v1", "v2", "m" + std::to_string(i)});
    g.legs = {{"q1", "v1", "q1"}, {"q2", "v2", "q2"}};
    return g;
}

FeynmanGraph contract(const FeynmanGraph& g, const std::set<std::string>& edge_ids) {
    std::set<int> idx;
    for (const auto& id : edge_ids) idx.insert(g.edge_index(id));
    if (idx.empty()) return g;
    if (static_cast<int>(idx.size()) == g.num_edges())
        throw GraphError("contracting every edge collapses the graph to a point");
    UnionFind uf(g.num_vertices());
    for (int i : idx) uf.unite(g.vertex_index(g.edges[i].v1), g.vertex_index(g.edges[i].v2));
    FeynmanGraph out;
    out.name = g.name;
    for (const auto& id : edge_ids) out.name += "/" + id;
    auto rep = [&](const std::string& v) { return g.vertices[uf.find(g.vertex_index(v))]; };
    for (int i = 0; i < g.num_vertices(); ++i)
        if (uf.find(i) == i) out.vertices.push_back(g.vertices[i]);
    for (int i = 0; i < g.num_edges(); ++i) {
        if (idx.count(i)) continue;
        Edge e = g.edges[i];
        e.v1 = rep(e.v1);
        e.v2 = rep(e.v2);
        out.edges.push_back(e);
    }
    for (const auto& l : g.legs) out.legs.push_back({l.id, rep(l.vertex), l.momentum});
    return out;
}

// ---------------- motic subgraphs ----------------

int subgraph_loop_number(const FeynmanGraph& g, const std::set<int>& edges) {
    std::set<int> verts;
    for (int e : edges) {
        verts.insert(g.vertex_index(g.edges[e].v1));
        verts.insert(g.vertex_index(g.edges[e].v2));
    }
    UnionFind uf(g.num_vertices());
    int comps = static_cast<int>(verts.size());
    for (int e : edges)
        if (uf.unite(g.vertex_index(g.edges[e].v1), g.vertex_index(g.edges[e].v2))) --comps;
    return static_cast<int>(edges.size()) - static_cast<int>(verts.size()) + comps;
}

bool is_mass_momentum_spanning(const FeynmanGraph& g, const std::set<int>& edges) {
    for (int e : g.massive_edges())
        if (!edges.count(e)) return false;
    UnionFind uf(g.num_vertices());
    std::set<int> verts;
    for (int e : edges) {
        int a = g.vertex_index(g.edges[e].v1), b = g.vertex_index(g.edges[e].v2);
        verts.insert(a);
        verts.insert(b);
        uf.unite(a, b);
    }
    int root = -1;
    for (const auto& l : g.legs) {
        int v = g.vertex_index(l.vertex);
        if (!verts.count(v)) return false;
        int r = uf.find(v);
        if (root < 0) root = r;
        else if (r != root) return false;
    }
    return true;
}

bool is_motic(const FeynmanGraph& g, const std::set<int>& edges) {
    if (edges.empty() || static_cast<int>(edges.size()) >= g.num_edges()) return false;
    if (!is_mass_momentum_spanning(g, edges)) return false;
    int h = subgraph_loop_number(g, edges);
    std::vector<int> list(edges.begin(), edges.end());
    int k = static_cast<int>(list.size());
    // every proper MMS subset must have strictly smaller loop number
    for (unsigned mask = 0; mask + 1 < (1u << k); ++mask) {
        std::set<int> sub;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) sub.insert(list[i]);
        if (sub.empty()) continue;
        if (is_mass_momentum_spanning(g, sub) && subgraph_loop_number(g, sub) >= h) return false;
    }
    return true;
}

std::vector<MoticSubgraph> motic_subgraphs(const FeynmanGraph& g) {
    std::vector<MoticSubgraph> out;
    int n = g.num_edges();
    if (n > 20) throw GraphError("motic_subgraphs: too many edges for exhaustive search");
    std::vector<std::set<int>> found;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::set<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.insert(i);
        if (is_motic(g, s)) found.push_back(s);
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    for (const auto& s : found) {
        MoticSubgraph m;
        for (int e : s) m.edge_subset.insert(g.edges[e].id);
        m.is_mass_momentum_spanning = true;
        m.loop_number = subgraph_loop_number(g, s);
        out.push_back(m);
    }
    return out;
}

// ---------------- kinematics ----------------

std::string s_symbol(int i, int j) {
    if (i > j) std::swap(i, j);
    return "s[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

std::string msq_symbol(const std::string& mass) { return mass + "^2"; }

Poly momentum_square(int num_legs, const std::set<int>& legs) {
    int f = num_legs;
    for (int l : legs)
        if (l < 1 || l > f) throw std::out_of_range("leg index out of range");
    std::vector<int> c(f, 0);  // coefficients of q_1..q_{F-1}
    bool has_last = legs.count(f) > 0;
    for (int l = 1; l < f; ++l) c[l] = (legs.count(l) ? 1 : 0) - (has_last ? 1 : 0);
    Poly out;
    for (int i = 1; i < f; ++i) {
        if (!c[i]) continue;
        out += Poly::symbol(s_symbol(i, i)) * Rational(c[i] * c[i]);
        for (int j = i + 1; j < f; ++j)
            if (c[j]) out += Poly::symbol(s_symbol(i, j)) * Rational(2 * c[i] * c[j]);
    }
    return out;
}

Poly mass_square(const Edge& e) { return e.massless() ? Poly() : Poly::symbol(msq_symbol(e.mass)); }

std::map<int, Rational> symbol_values(const FeynmanGraph& g, const KinematicPoint& p) {
    std::map<int, Rational> vals;
    int f = g.num_legs();
    for (const auto& [key, v] : p.s) {
        auto [i, j] = key;
        if (i > j) std::swap(i, j);
        if (i < 1 || j > f) throw std::invalid_argument("s-value " + s_symbol(i, j) + " refers to a leg that does not exist");
        if (j < f) vals[symbol_id(s_symbol(i, j))] = v;
    }
    for (int i = 1; i < f; ++i)
        for (int j = i; j < f; ++j)
            if (!vals.count(symbol_id(s_symbol(i, j))))
                throw std::out_of_range("missing kinematic value " + s_symbol(i, j));
    for (const auto& e : g.edges) {
        if (e.massless()) continue;
        auto it = p.msq.find(e.mass);
        if (it == p.msq.end()) throw std::out_of_range("missing mass value " + msq_symbol(e.mass));
        if (it->second < 0) throw std::invalid_argument("negative squared mass for " + e.mass);
        vals[symbol_id(msq_symbol(e.mass))] = it->second;
    }
    // s-values involving the dependent leg must agree with conservation
    for (const auto& [key, v] : p.s) {
        auto [i, j] = key;
        if (i > j) std::swap(i, j);
        if (j != f) continue;
        // q_i . q_F = -sum_l q_i . q_l ; q_F^2 = sum_{l,m} q_l . q_m
        Poly expr;
        auto dot = [&](int a, int b) { return Poly::symbol(s_symbol(a, b)); };
        if (i == f) {
            for (int a = 1; a < f; ++a)
                for (int b = 1; b < f; ++b) expr += dot(a, b);
        } else {
            for (int a = 1; a < f; ++a) expr -= dot(i, a);
        }
        Rational derived = expr.evaluate(vals);
        if (derived != v)
            throw std::invalid_argument("value of " + s_symbol(i, j) + " contradicts momentum conservation (derived " +
                                        to_string(derived) + ")");
    }
    return vals;
}

Rational s_value(const FeynmanGraph& g, const KinematicPoint& p, const std::set<int>& legs) {
    return momentum_square(g.num_legs(), legs).evaluate(symbol_values(g, p));
}

GenericityReport validate_generic(const FeynmanGraph& g, const KinematicPoint& p) {
    auto vals = symbol_values(g, p);
    GenericityReport r;
    int f = g.num_legs();
    std::vector<std::pair<std::string, Rational>> masses = {{"0", Rational(0)}};
    std::set<std::string> seen;
    for (const auto& e : g.edges) {
        if (e.massless() || !seen.insert(e.mass).second) continue;
        Rational m = vals.at(symbol_id(msq_symbol(e.mass)));
        masses.emplace_back(e.mass, m);
        if (m <= 0) r.euclidean = false;
    }
    for (unsigned mask = 1; f > 0 && mask + 1 < (1u << f); ++mask) {
        std::set<int> legs;
        std::string label;
        for (int i = 0; i < f; ++i)
            if (mask & (1u << i)) {
                legs.insert(i + 1);
                label += (label.empty() ? "" : ",") + std::to_string(i + 1);
            }
        Rational s = momentum_square(f, legs).evaluate(vals);
        if (s <= 0) r.euclidean = false;
        for (const auto& [name, m] : masses) {
            if (s + m == 0) {
                r.generic = false;
                r.violations.push_back("s_{" + label + "}" + (name == "0" ? "" : " + " + msq_symbol(name)) + " = 0");
            }
        }
    }
    return r;
}

}  // namespace oneloop
