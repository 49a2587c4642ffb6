#include <doctest.h>

#include "oneloop/graph.hpp"
#include "oneloop/symanzik.hpp"

using namespace oneloop;

namespace {

std::set<std::string> edge_ids(const FeynmanGraph& g) {
    std::set<std::string> out;
    for (const auto& e : g.edges) out.insert(e.id);
    return out;
}

KinematicPoint box_point() {
    KinematicPoint p;
    for (int i = 1; i <= 3; ++i) {
        p.s[{i, i}] = 1;
        for (int j = i + 1; j <= 3; ++j) p.s[{i, j}] = Rational(-1, 7);
    }
    for (int i = 1; i <= 4; ++i) p.msq["m" + std::to_string(i)] = 1;
    return p;
}

// the single-edge form of the motic predicate: gamma is a proper mass-momentum spanning subgraph
// and removing any one edge breaks spanning or lowers the loop number
bool motic_oracle(const FeynmanGraph& g, const std::set<int>& edges) {
    if (edges.empty() || static_cast<int>(edges.size()) == g.num_edges()) return false;
    if (!is_mass_momentum_spanning(g, edges)) return false;
    int h = subgraph_loop_number(g, edges);
    for (int e : edges) {
        auto sub = edges;
        sub.erase(e);
        if (is_mass_momentum_spanning(g, sub) && subgraph_loop_number(g, sub) >= h) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("builders validate") {
    for (int n = 2; n <= 7; ++n) {
        auto g = one_loop_cycle(n);
        CHECK_NOTHROW(g.validate());
        CHECK(g.is_one_loop_cycle());
        CHECK(g.loop_number() == 1);
    }
    CHECK(sunrise_graph().loop_number() == 2);
    CHECK_FALSE(sunrise_graph().is_one_loop_cycle());
}

TEST_CASE("validation rejects broken graphs") {
    auto g = box_graph();
    g.edges[1].id = "e1";
    CHECK_THROWS_AS(g.validate(), GraphError);

    auto h = box_graph();
    h.vertices.push_back("lonely");
    CHECK_THROWS_AS(h.validate(), GraphError);

    auto k = box_graph();
    k.edges[0].v2 = "nowhere";
    CHECK_THROWS_AS(k.validate(), GraphError);
}

TEST_CASE("contracting two box edges gives a bubble") {
    auto b = contract(box_graph(), {"e2", "e3"});
    CHECK(b.num_edges() == 2);
    CHECK(edge_ids(b) == std::set<std::string>{"e1", "e4"});
    CHECK(b.edges[0].mass == "m1");
    CHECK(b.edges[1].mass == "m4");
    CHECK(b.num_vertices() == 2);
    // legs follow their vertex: v2, v3, v4 merge, so the split is q1 | q2 q3 q4
    std::multiset<size_t> split;
    for (const auto& v : b.vertices) split.insert(b.legs_at(v).size());
    CHECK(split == std::multiset<size_t>{1, 3});
}

TEST_CASE("contracting nothing is the identity") {
    auto g = box_graph();
    auto c = contract(g, {});
    CHECK(c.num_edges() == g.num_edges());
    CHECK(c.num_vertices() == g.num_vertices());
    CHECK(symanzik(c).xi == symanzik(g).xi);
}

TEST_CASE("pentagon minus one edge is a box") {
    auto b = contract(pentagon_graph(), {"e5"});
    CHECK(b.num_edges() == 4);
    CHECK(b.num_vertices() == 4);
    CHECK(b.is_connected());
    CHECK(b.loop_number() == 1);
    int with_two = 0;
    for (const auto& v : b.vertices) with_two += b.legs_at(v).size() == 2;
    CHECK(with_two == 1);
}

TEST_CASE("contraction composes") {
    auto g = pentagon_graph();
    auto two_step = contract(contract(g, {"e1"}), {"e3"});
    auto one_step = contract(g, {"e1", "e3"});
    CHECK(edge_ids(two_step) == edge_ids(one_step));
    CHECK(two_step.num_vertices() == one_step.num_vertices());
    CHECK(symanzik(two_step).xi == symanzik(one_step).xi);
}

TEST_CASE("unknown edge in contraction") {
    CHECK_THROWS(contract(box_graph(), {"e9"}));
}

TEST_CASE("motic subgraphs") {
    for (int n = 2; n <= 7; ++n) CHECK(motic_subgraphs(one_loop_cycle(n)).empty());

    auto m1 = motic_subgraphs(triangle_graph({1}));
    REQUIRE(m1.size() == 1);
    CHECK(m1[0].edge_subset == std::set<std::string>{"e2", "e3"});

    auto all = motic_subgraphs(triangle_graph({1, 2, 3}));
    std::set<std::set<std::string>> got;
    for (const auto& m : all) got.insert(m.edge_subset);
    CHECK(got == std::set<std::set<std::string>>{{"e1", "e2"}, {"e1", "e3"}, {"e2", "e3"}});
}

TEST_CASE("motic predicate matches brute force, and reported subgraphs lose it after edge removal") {
    for (const auto& g : {triangle_graph({1}), triangle_graph({1, 2}), triangle_graph({1, 2, 3}), box_graph(),
                          one_loop_cycle(4, {2, 3})}) {
        int n = g.num_edges();
        for (unsigned m = 1; m < (1u << n); ++m) {
            std::set<int> e;
            for (int i = 0; i < n; ++i)
                if (m >> i & 1) e.insert(i);
            CHECK(is_motic(g, e) == motic_oracle(g, e));
        }
        for (const auto& ms : motic_subgraphs(g)) {
            std::set<int> e;
            for (const auto& id : ms.edge_subset) e.insert(g.edge_index(id));
            for (int drop : e) {
                auto smaller = e;
                smaller.erase(drop);
                CHECK_FALSE(is_motic(g, smaller));
            }
        }
    }
}

TEST_CASE("genericity of the symmetric box point") {
    auto g = box_graph();
    auto p = box_point();
    auto rep = validate_generic(g, p);
    // oracle: every proper leg subset against every mass choice
    bool generic = true;
    for (unsigned m = 1; m + 1 < 16u; ++m) {
        std::set<int> legs;
        for (int i = 0; i < 4; ++i)
            if (m >> i & 1) legs.insert(i + 1);
        Rational s = s_value(g, p, legs);
        for (Rational msq : {Rational(0), Rational(1)})
            if (s + msq == 0) generic = false;
    }
    CHECK(rep.generic == generic);
    CHECK(rep.euclidean);
}

TEST_CASE("forced cancellation is reported") {
    auto g = bubble_graph();
    KinematicPoint p;
    p.s[{1, 1}] = -1;
    p.msq["m1"] = 1;
    p.msq["m2"] = 2;
    auto rep = validate_generic(g, p);
    CHECK_FALSE(rep.generic);
    CHECK_FALSE(rep.violations.empty());
}

TEST_CASE("conservation is enforced on the dependent leg") {
    auto g = bubble_graph();
    KinematicPoint p;
    p.s[{1, 1}] = 2;
    p.msq["m1"] = 1;
    p.msq["m2"] = 1;
    p.s[{2, 2}] = 2;  // consistent: q2 = -q1
    CHECK_NOTHROW(symbol_values(g, p));
    p.s[{2, 2}] = 3;
    CHECK_THROWS_AS(symbol_values(g, p), std::invalid_argument);
}

TEST_CASE("momentum squares expand into s-symbols") {
    CHECK(momentum_square(4, {1, 2}) == Poly::symbol("s[1,1]") + Poly::symbol("s[2,2]") + Poly::symbol("s[1,2]") * Rational(2));
    // the last leg is -(q1+q2+q3)
    CHECK(momentum_square(4, {4}) == momentum_square(4, {1, 2, 3}));
}

}
