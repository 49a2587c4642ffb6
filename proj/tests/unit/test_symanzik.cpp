#include <doctest.h>

#include "oneloop/symanzik.hpp"
#include "oneloop/verify.hpp"

#include <numeric>

using namespace oneloop;

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool join(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// Spanning trees and 2-forests by running over every edge subset.
std::pair<KPoly, KPoly> brute_force_symanzik(const FeynmanGraph& g) {
    int n = g.num_edges(), v = g.num_vertices();
    KPoly psi(n), phi(n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int kept = __builtin_popcount(mask);
        if (kept != v - 1 && kept != v - 2) continue;
        UnionFind uf(v);
        bool acyclic = true;
        for (int i = 0; i < n && acyclic; ++i)
            if (mask >> i & 1) acyclic = uf.join(g.vertex_index(g.edges[i].v1), g.vertex_index(g.edges[i].v2));
        if (!acyclic) continue;
        KPoly::Exponents e(n, 0);
        for (int i = 0; i < n; ++i)
            if (!(mask >> i & 1)) e[i] = 1;
        if (kept == v - 1) {
            psi.add_term(e, Poly(1));
        } else {
            int root = uf.find(0);
            std::set<int> legs;
            for (int l = 0; l < g.num_legs(); ++l)
                if (uf.find(g.vertex_index(g.legs[l].vertex)) == root) legs.insert(l + 1);
            phi.add_term(e, momentum_square(g.num_legs(), legs));
        }
    }
    return {psi, phi};
}

KPoly mass_term(const FeynmanGraph& g) {
    KPoly m(g.num_edges());
    for (int i = 0; i < g.num_edges(); ++i) m += KPoly::constant(g.num_edges(), mass_square(g.edges[i])) * KPoly::alpha(g.num_edges(), i);
    return m;
}

KPoly a(int n, int i) { return KPoly::alpha(n, i); }
KPoly c(int n, const Poly& p) { return KPoly::constant(n, p); }

}  // namespace

TEST_SUITE("symanzik") {

TEST_CASE("deletion-contraction agrees with subset enumeration") {
    std::vector<FeynmanGraph> graphs;
    for (int n = 2; n <= 7; ++n) graphs.push_back(one_loop_cycle(n));
    graphs.push_back(sunrise_graph());
    graphs.push_back(triangle_graph({1}));
    for (const auto& g : graphs) {
        CAPTURE(g.name);
        auto sp = symanzik(g);
        auto [psi, phi] = brute_force_symanzik(g);
        CHECK(sp.psi == psi);
        CHECK(sp.phi == phi);
        CHECK(sp.xi == phi + mass_term(g) * psi);
    }
}

TEST_CASE("bubble and triangle polynomials") {
    auto b = symanzik(bubble_graph());
    CHECK(b.psi == a(2, 0) + a(2, 1));
    KPoly xi = c(2, Poly::symbol("s[1,1]")) * a(2, 0) * a(2, 1) +
               (c(2, Poly::symbol("m1^2")) * a(2, 0) + c(2, Poly::symbol("m2^2")) * a(2, 1)) * (a(2, 0) + a(2, 1));
    CHECK(b.xi == xi);

    auto t = symanzik(triangle_graph());
    KPoly phi = c(3, momentum_square(3, {1})) * a(3, 1) * a(3, 2) + c(3, momentum_square(3, {2})) * a(3, 0) * a(3, 2) +
                c(3, momentum_square(3, {3})) * a(3, 0) * a(3, 1);
    CHECK(t.phi == phi);
}

TEST_CASE("one-loop first Symanzik is the edge sum") {
    for (int n = 2; n <= 7; ++n) {
        KPoly sum(n);
        for (int i = 0; i < n; ++i) sum += a(n, i);
        CHECK(symanzik(one_loop_cycle(n)).psi == sum);
    }
}

TEST_CASE("homogeneity and unit coefficients") {
    for (const auto& g : {bubble_graph(), triangle_graph(), box_graph(), pentagon_graph(), sunrise_graph()}) {
        auto sp = symanzik(g);
        int h = g.loop_number(), d = -1;
        CHECK(sp.psi.is_homogeneous(&d));
        CHECK(d == h);
        CHECK(sp.xi.is_homogeneous(&d));
        CHECK(d == h + 1);
        CHECK(sp.phi.is_homogeneous(&d));
        CHECK(d == h + 1);
        for (const auto& [e, coeff] : sp.psi.terms()) CHECK(coeff == Poly(1));
    }
}

TEST_CASE("disconnected input is rejected") {
    auto g = box_graph();
    g.vertices.push_back("v9");
    CHECK_THROWS(symanzik(g));
}

TEST_CASE("restriction to a box face") {
    auto r = xi_restrict(box_graph(), {"e2", "e3"});
    KPoly expect = c(2, Poly::symbol("s[1,1]")) * a(2, 0) * a(2, 1) +
                   (c(2, Poly::symbol("m1^2")) * a(2, 0) + c(2, Poly::symbol("m4^2")) * a(2, 1)) * (a(2, 0) + a(2, 1));
    CHECK(r == expect);
    CHECK(xi_restrict(box_graph(), {}) == symanzik(box_graph()).xi);
}

TEST_CASE("restriction equals Symanzik of the quotient") {
    auto box = box_graph();
    std::vector<std::set<std::string>> subsets;
    for (int i = 1; i <= 4; ++i) {
        subsets.push_back({"e" + std::to_string(i)});
        for (int j = i + 1; j <= 4; ++j) subsets.push_back({"e" + std::to_string(i), "e" + std::to_string(j)});
    }
    for (const auto& s : subsets) CHECK(xi_restrict(box, s) == symanzik(contract(box, s)).xi);

    auto pent = pentagon_graph();
    for (int i = 1; i <= 5; ++i) {
        std::set<std::string> s{"e" + std::to_string(i)};
        CHECK(xi_restrict(pent, s) == symanzik(contract(pent, s)).xi);
    }
}

TEST_CASE("quadric is positive at Euclidean points") {
    std::mt19937_64 rng(5);
    for (const auto& g : {bubble_graph(), triangle_graph(), box_graph(), pentagon_graph()}) {
        for (int k = 0; k < 3; ++k) {
            auto p = random_euclidean_point(g, rng);
            auto xi = symanzik(g).xi.specialize(symbol_values(g, p));
            for (const auto& [e, coeff] : xi.terms()) CHECK(coeff.constant_value() > 0);
        }
    }
}

TEST_CASE("parametric integrands") {
    auto b4 = build_integrand(bubble_graph(), 4);
    CHECK(b4.psi_power == -2);
    CHECK(b4.xi_power == 0);
    REQUIRE(b4.omega.size() == 2);
    CHECK(b4.omega[0].sign == -b4.omega[1].sign);

    auto b2 = build_integrand(bubble_graph(), 2);
    CHECK(b2.psi_power == 0);
    CHECK(b2.xi_power == 1);
    CHECK_FALSE(b2.divergent);
    CHECK(build_integrand(bubble_graph({1}), 2).divergent);

    auto box = build_integrand(box_graph(), 4);
    CHECK(box.psi_power == 0);
    CHECK(box.xi_power == 2);
    CHECK(box.omega.size() == 4);
    for (int n = 2; n <= 6; ++n) {
        auto om = omega_terms(n);
        REQUIRE(om.size() == static_cast<size_t>(n));
        for (int i = 1; i < n; ++i) CHECK(om[i].sign == -om[i - 1].sign);
    }
    CHECK_THROWS_AS(build_integrand(box_graph(), 3), std::invalid_argument);
}

}
