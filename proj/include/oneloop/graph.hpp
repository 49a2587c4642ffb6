#pragma once

#include "oneloop/poly.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace oneloop {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Edge {
    std::string id;
    std::string v1, v2;
    std::string mass;  // symbol, or "0"
    bool massless() const { return mass == "0"; }
};

struct Leg {
    std::string id;
    std::string vertex;
    std::string momentum;
};

class FeynmanGraph {
public:
    std::string name = "G";
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    std::vector<Leg> legs;

    // Throws GraphError on broken invariants (unknown vertices, duplicate ids, disconnected).
    void validate() const;

    int num_edges() const { return static_cast<int>(edges.size()); }
    int num_legs() const { return static_cast<int>(legs.size()); }
    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int loop_number() const;
    int edge_index(const std::string& id) const;  // throws on unknown id
    int vertex_index(const std::string& v) const;
    bool is_connected() const;

    // Single cycle e_1..e_N with exactly one leg per vertex.
    bool is_one_loop_cycle() const;
    // Indices of massive edges, sorted.
    std::vector<int> massive_edges() const;
    std::vector<int> massless_edges() const;
    // Legs attached to vertex v (1-based positions in `legs`).
    std::vector<int> legs_at(const std::string& v) const;
};

// Builders.  Cycle: e_i = (v_i, v_{i+1}), e_N = (v_N, v_1), leg q_i at v_i, mass m_i.
FeynmanGraph one_loop_cycle(int n, const std::set<int>& massless = {});
// Triangle labelled so that leg q_i sits opposite edge e_i.
FeynmanGraph triangle_graph(const std::set<int>& massless = {});
FeynmanGraph bubble_graph(const std::set<int>& massless = {});
FeynmanGraph box_graph();
FeynmanGraph pentagon_graph();
FeynmanGraph sunrise_graph();

FeynmanGraph contract(const FeynmanGraph& g, const std::set<std::string>& edge_ids);

struct MoticSubgraph {
    std::set<std::string> edge_subset;
    bool is_mass_momentum_spanning = false;
    int loop_number = 0;
};

// Loop number (cycle rank) of the subgraph spanned by the given edge indices.
int subgraph_loop_number(const FeynmanGraph& g, const std::set<int>& edges);
bool is_mass_momentum_spanning(const FeynmanGraph& g, const std::set<int>& edges);
bool is_motic(const FeynmanGraph& g, const std::set<int>& edges);
std::vector<MoticSubgraph> motic_subgraphs(const FeynmanGraph& g);

// Kinematics.  s[i,j] is indexed by leg position (1-based) among legs 1..F-1;
// leg F is fixed by momentum conservation.  msq is keyed by mass symbol.
struct KinematicPoint {
    std::map<std::pair<int, int>, Rational> s;
    std::map<std::string, Rational> msq;
};

std::string s_symbol(int i, int j);
std::string msq_symbol(const std::string& mass);

// (sum_{i in I} q_i)^2 in terms of the independent s-symbols (legs 1-based).
Poly momentum_square(int num_legs, const std::set<int>& legs);
Poly mass_square(const Edge& e);

// All symbol values of g at p.  Throws std::out_of_range for missing values
// and std::invalid_argument for s-values on the dependent leg that contradict conservation.
std::map<int, Rational> symbol_values(const FeynmanGraph& g, const KinematicPoint& p);
Rational s_value(const FeynmanGraph& g, const KinematicPoint& p, const std::set<int>& legs);

struct GenericityReport {
    bool generic = true;
    bool euclidean = true;
    std::vector<std::string> violations;
};
GenericityReport validate_generic(const FeynmanGraph& g, const KinematicPoint& p);

}  // namespace oneloop
